#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "novikov/catalog.hpp"
#include "novikov/chain_complex.hpp"
#include "novikov/digest.hpp"
#include "novikov/error.hpp"
#include "novikov/fibring.hpp"
#include "novikov/json_io.hpp"
#include "novikov/presentation.hpp"
#include "novikov/selftest.hpp"
#include "novikov/subgroup.hpp"

namespace {

using namespace novikov;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitEngine = 3;
constexpr int kExitNotFibred = 10;
constexpr int kExitInconclusive = 11;

struct Options {
  std::string format = "json";
  std::string out;
  std::string cutoff;
  std::size_t retries = 2;
  std::uint64_t seed = 1;
  std::size_t samples = 0;
  std::optional<std::int64_t> grid;
  std::size_t threads = 1;
  std::string presentation;
  std::string quotient;
  std::string character;
  std::string phi;
  std::string catalog_name;
  std::string report;
  std::size_t scale = 40;
  bool corrupt_quotient = false;
};

struct Input {
  std::string label;
  std::string text;
  std::string sha256;
};

Input read_input(const std::string& path) {
  static constexpr std::string_view kCatalogPrefix = "catalog:";
  if (path.rfind(kCatalogPrefix, 0) == 0) {
    const CatalogEntry& entry = catalog_entry(path.substr(kCatalogPrefix.size()));
    return {path, entry.presentation, sha256_hex(entry.presentation)};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  return {path, text, sha256_hex(text)};
}

std::size_t max_quotient_order() {
  const char* env = std::getenv("NOVIKOV_MAX_Q");
  if (env == nullptr || *env == '\0') return kDefaultMaxQuotientOrder;
  try {
    std::size_t pos = 0;
    unsigned long value = std::stoul(env, &pos);
    if (pos == std::string(env).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("NOVIKOV_MAX_Q must be a positive integer, got '") + env +
                              "'");
}

Json input_json(const Input& input) { return {{"path", input.label}, {"sha256", input.sha256}}; }

Json report_header(const std::string& command) {
  return {{"schema", kSchemaVersion}, {"tool", "novikov"}, {"version", NOVIKOV_VERSION},
          {"command", command}};
}

void emit(const Options& options, const Json& report, const std::string& text) {
  std::string body = options.format == "text" ? text : report.dump(2) + "\n";
  if (options.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(options.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + options.out);
  out << body;
}

struct Target {
  Json inputs = Json::object();
  GroupPtr group;
};

// The group named on the command line, or the kernel of the given quotient.
Target load_target(const Options& options) {
  Target target;
  Input pres = read_input(options.presentation);
  target.inputs["presentation"] = input_json(pres);
  target.group = make_group(parse_presentation(pres.text));
  if (!options.quotient.empty()) {
    Input q = read_input(options.quotient);
    target.inputs["quotient"] = input_json(q);
    std::size_t bound = max_quotient_order();
    FiniteQuotient quotient = quotient_from_json(Json::parse(q.text), *target.group, bound);
    target.group = make_subgroup(target.group, quotient, bound);
  }
  return target;
}

CutoffPolicy cutoff_policy(const Options& options) {
  CutoffPolicy policy;
  policy.retries = options.retries;
  if (!options.cutoff.empty()) policy.cutoff = RealValue(parse_rational(options.cutoff));
  return policy;
}

Json cutoff_json(const Options& options) {
  return options.cutoff.empty() ? Json("default") : Json(options.cutoff);
}

std::string character_text(const Character& phi) {
  std::string s = "(";
  for (std::size_t i = 0; i < phi.rank(); ++i) {
    if (i > 0) s += ", ";
    s += phi.columns()[i].to_string();
  }
  return s + ")";
}

int verdict_exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::Fibred: return kExitOk;
    case Verdict::NotFibredByRank: return kExitNotFibred;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_abelianize(const Options& options) {
  Input pres = read_input(options.presentation);
  GroupPresentation presentation = parse_presentation(pres.text);
  GroupPtr group = make_group(presentation);
  const Abelianization& ab = group->abelianization();
  Json report = report_header("abelianize");
  report["inputs"] = {{"presentation", input_json(pres)}};
  report["generators"] = presentation.generators;
  report["abelianization"] = to_json(ab);
  std::ostringstream text;
  text << "rank " << ab.rank << "\ntorsion [";
  for (std::size_t i = 0; i < ab.torsion.size(); ++i) {
    text << (i ? ", " : "") << ab.torsion[i].get_str();
  }
  text << "]\n";
  emit(options, report, text.str());
  return kExitOk;
}

int cmd_certify(const Options& options) {
  Target target = load_target(options);
  Character phi;
  if (!options.character.empty()) {
    Input c = read_input(options.character);
    target.inputs["character"] = input_json(c);
    phi = character_from_json(Json::parse(c.text));
  } else {
    std::vector<Rational> images;
    std::stringstream list(options.phi);
    for (std::string item; std::getline(list, item, ',');) images.push_back(parse_rational(item));
    phi = Character::rational(images);
  }
  ChainComplex complex = build_complex(target.group);
  FibringVerdict verdict = phi.is_rational() ? fibred_check(complex, phi, cutoff_policy(options))
                                             : sigma_check(complex, phi, cutoff_policy(options));
  Json report = report_header("certify");
  report["inputs"] = target.inputs;
  report["cutoff"] = cutoff_json(options);
  report["seed"] = options.seed;
  report["result"] = to_json(verdict, *target.group);
  std::ostringstream text;
  text << "character " << character_text(verdict.character)
       << (verdict.normalized ? " (normalised)" : "") << "\n"
       << "plus  " << to_string(verdict.plus.status) << " at cutoff "
       << verdict.plus.cutoff.to_string() << "\n"
       << "minus " << to_string(verdict.minus.status) << " at cutoff "
       << verdict.minus.cutoff.to_string() << "\n"
       << "verdict " << to_string(verdict.combined) << "\n";
  emit(options, report, text.str());
  return verdict_exit_code(verdict.combined);
}

int cmd_scan(const Options& options) {
  Target target = load_target(options);
  std::size_t rank = target.group->abelianization().rank;
  std::vector<Character> samples = options.grid ? primitive_rays(rank, *options.grid)
                                                : sample_primitive_rays(rank, options.samples, options.seed);
  ChainComplex complex = build_complex(target.group);
  ScanReport scan = character_scan(complex, samples, cutoff_policy(options), options.threads);
  Json report = report_header("scan");
  report["inputs"] = target.inputs;
  report["cutoff"] = cutoff_json(options);
  report["seed"] = options.seed;
  if (options.grid) report["grid"] = *options.grid;
  else report["samples"] = options.samples;
  report["result"] = to_json(scan, *target.group);
  std::ostringstream text;
  for (const ScanEntry& e : scan.entries) {
    text << e.index << " " << character_text(samples[e.index]) << " "
         << (e.error ? "error: " + *e.error : to_string(e.verdict.combined)) << "\n";
  }
  text << scan.fibred.size() << " fibred, " << scan.one_sided.size() << " one-sided, "
       << scan.entries.size() << " total\n";
  emit(options, report, text.str());
  return kExitOk;
}

int cmd_selftest(const Options& options) {
  SelftestOptions st;
  st.seed = options.seed;
  st.scale = options.scale;
  st.corrupt_quotient = options.corrupt_quotient;
  if (!options.cutoff.empty()) st.cutoff = RealValue(parse_rational(options.cutoff));
  std::vector<SuiteResult> results = run_selftest(st);
  Json report = report_header("selftest");
  report["seed"] = options.seed;
  report["scale"] = options.scale;
  report["cutoff"] = cutoff_json(options);
  report["corrupt_quotient"] = options.corrupt_quotient;
  Json suites = Json::array();
  std::ostringstream text;
  bool ok = true;
  for (const SuiteResult& r : results) {
    ok = ok && r.ok();
    Json s = {{"name", r.name}, {"passed", r.passed}, {"failed", r.failed},
              {"inconclusive", r.inconclusive}};
    if (!r.counterexample.empty()) s["counterexample"] = r.counterexample;
    suites.push_back(s);
    text << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << " passed, " << r.failed
         << " failed, " << r.inconclusive << " inconclusive\n";
    if (!r.counterexample.empty()) text << "  counterexample: " << r.counterexample << "\n";
  }
  report["suites"] = suites;
  report["ok"] = ok;
  emit(options, report, text.str());
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const Options& options) {
  Target target = load_target(options);
  Input report_input = read_input(options.report);
  target.inputs["report"] = input_json(report_input);
  Json input = Json::parse(report_input.text);
  std::vector<std::pair<std::string, Json>> certificates;
  if (input.contains("L")) {
    certificates.emplace_back("certificate", input);
  } else {
    const Json& result = input.contains("result") ? input.at("result") : input;
    for (const char* side : {"plus", "minus"}) {
      if (result.contains(side) && !result.at(side).at("certificate").is_null()) {
        certificates.emplace_back(side, result.at(side).at("certificate"));
      }
    }
  }
  ChainComplex complex = build_complex(target.group);
  Json report = report_header("verify");
  report["inputs"] = target.inputs;
  Json checks = Json::array();
  std::ostringstream text;
  bool ok = !certificates.empty();
  for (const auto& [side, json] : certificates) {
    VerificationReport v = verify_certificate(certificate_from_json(json, target.group), complex);
    ok = ok && v.ok;
    Json c = {{"side", side}, {"ok", v.ok}, {"margin", to_json(v.margin)}};
    if (!v.failure.empty()) c["failure"] = v.failure;
    checks.push_back(c);
    text << side << " " << (v.ok ? "verified" : "REJECTED: " + v.failure) << "\n";
  }
  if (certificates.empty()) text << "no certificates in the report\n";
  report["certificates"] = checks;
  report["ok"] = ok;
  emit(options, report, text.str());
  return ok ? kExitOk : kExitFailure;
}

int cmd_catalog(const Options& options) {
  std::vector<const CatalogEntry*> entries;
  if (options.catalog_name.empty()) {
    for (const CatalogEntry& e : builtin_catalog()) entries.push_back(&e);
  } else {
    entries.push_back(&catalog_entry(options.catalog_name));
  }
  Json report = report_header("catalog");
  report["cutoff"] = cutoff_json(options);
  report["samples"] = options.samples;
  Json results = Json::array();
  std::ostringstream text;
  bool ok = true;
  for (const CatalogEntry* entry : entries) {
    HarnessReport h = consistency_harness(*entry, options.samples, cutoff_policy(options));
    ok = ok && h.pass;
    results.push_back(to_json(h));
    text << (h.pass ? "PASS " : "FAIL ") << h.name << ": " << h.summary << "\n";
  }
  report["entries"] = results;
  report["ok"] = ok;
  emit(options, report, text.str());
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibring certificates for finitely presented groups via Novikov homology"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(NOVIKOV_VERSION));
  Options options;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", options.out, "Write the report to this file");
  };
  auto add_cutoff = [&](CLI::App* cmd) {
    cmd->add_option("--cutoff", options.cutoff, "Absolute truncation cutoff (rational)");
    cmd->add_option("--retries", options.retries, "Cutoff doublings on an inconclusive outcome");
  };
  auto add_target = [&](CLI::App* cmd) {
    cmd->add_option("presentation", options.presentation,
                    "Presentation file, or catalog:NAME for a built-in group")
        ->required();
    cmd->add_option("--quotient", options.quotient,
                    "Work in the kernel of this finite quotient (JSON file)");
  };

  CLI::App* abelianize = app.add_subcommand("abelianize", "Free abelianisation of a presentation");
  abelianize->add_option("presentation", options.presentation, "Presentation file")->required();
  add_output(abelianize);

  CLI::App* certify = app.add_subcommand("certify", "Certify a character and its negative");
  add_target(certify);
  auto* character_opt = certify->add_option("--character", options.character, "Character JSON file");
  auto* phi_opt = certify->add_option("--phi", options.phi, "Rational character, e.g. 1,0,-2");
  character_opt->excludes(phi_opt);
  certify->add_option("--seed", options.seed, "Recorded in the report");
  add_cutoff(certify);
  add_output(certify);

  CLI::App* scan = app.add_subcommand("scan", "Certify many primitive integral characters");
  add_target(scan);
  auto* samples_opt = scan->add_option("--samples", options.samples, "Number of random rays");
  auto* grid_opt = scan->add_option("--grid", options.grid, "All primitive rays of max-norm <= N");
  samples_opt->excludes(grid_opt);
  scan->add_option("--seed", options.seed, "Sampling seed");
  scan->add_option("--threads", options.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_cutoff(scan);
  add_output(scan);

  CLI::App* verify = app.add_subcommand("verify", "Re-check the certificates stored in a report");
  add_target(verify);
  verify->add_option("report", options.report, "Report from certify, or a bare certificate")
      ->required();
  add_output(verify);

  CLI::App* selftest = app.add_subcommand("selftest", "Run the property suites at small scale");
  selftest->add_option("--seed", options.seed, "Fixture seed");
  selftest->add_option("--scale", options.scale, "Instances per suite");
  selftest->add_flag("--inject-corrupt-quotient", options.corrupt_quotient,
                     "Add a quotient whose section is wrong (negative control)");
  selftest->add_option("--cutoff", options.cutoff, "Cutoff for the inversion and certificate suites");
  add_output(selftest);

  CLI::App* catalog = app.add_subcommand("catalog", "Run the consistency harness on built-in groups");
  catalog->add_option("name", options.catalog_name, "Entry name (default: all)");
  catalog->add_option("--samples", options.samples, "Characters sampled per group")
      ->default_val(8);
  add_cutoff(catalog);
  add_output(catalog);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*abelianize) return cmd_abelianize(options);
    if (*certify) {
      if (options.character.empty() && options.phi.empty()) {
        std::cerr << "certify: one of --character or --phi is required\n";
        return kExitFailure;
      }
      return cmd_certify(options);
    }
    if (*scan) return cmd_scan(options);
    if (*verify) return cmd_verify(options);
    if (*selftest) return cmd_selftest(options);
    if (*catalog) return cmd_catalog(options);
  } catch (const ParseError& e) {
    std::cerr << options.presentation << ":" << e.what() << "\n";
    return kExitParse;
  } catch (const EngineRejection& e) {
    std::cerr << "engine rejected the presentation: " << e.what() << "\n";
    return kExitEngine;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
