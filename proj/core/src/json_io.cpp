#include "novikov/json_io.hpp"

#include <set>

#include "novikov/digest.hpp"
#include "novikov/error.hpp"

namespace novikov {

namespace {

Rational rational_from_json(const Json& json) {
  if (json.is_number_integer()) return Rational(json.get<long>());
  if (json.is_string()) return parse_rational(json.get<std::string>());
  throw ParseError("expected a rational as an integer or a string", 0, 0);
}

Json names_json(const std::vector<std::uint32_t>& indices, const Group& group) {
  Json out = Json::array();
  for (auto j : indices) out.push_back(group.presentation().generators.at(j));
  return out;
}

Json matrix_json(const std::vector<std::vector<RingElement>>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_json(e));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json to_json(const RealValue& value) {
  Json out = Json::object();
  for (const auto& [radicand, c] : value.terms()) out[std::to_string(radicand)] = to_string(c);
  return out;
}

Json to_json(const ExtendedValue& value) {
  return value.is_infinite() ? Json("inf") : to_json(value.value());
}

RealValue real_value_from_json(const Json& json) {
  if (!json.is_object()) return RealValue(rational_from_json(json));
  RealValue v;
  for (const auto& [key, c] : json.items()) {
    unsigned long radicand = 0;
    try {
      radicand = std::stoul(key);
    } catch (const std::exception&) {
      throw ParseError("radicand '" + key + "' is not a number", 0, 0);
    }
    v += RealValue::sqrt_term(static_cast<std::uint32_t>(radicand), rational_from_json(c));
  }
  return v;
}

ExtendedValue extended_value_from_json(const Json& json) {
  if (json.is_string() && json.get<std::string>() == "inf") return ExtendedValue::infinity();
  return ExtendedValue(real_value_from_json(json));
}

Json to_json(const RingElement& element) {
  Json out = Json::array();
  for (const auto& [key, c] : element.terms()) {
    out.push_back(Json{{"word", element.group()->format(key)}, {"coeff", to_string(c)}});
  }
  return out;
}

RingElement ring_element_from_json(const Json& json, const GroupPtr& group) {
  if (!json.is_array()) throw ParseError("ring element must be an array of terms", 0, 0);
  RingElement x(group);
  for (const auto& term : json) {
    Word w = parse_word(term.at("word").get<std::string>(), group->element_alphabet());
    x.add_term(group->normal_form(w), rational_from_json(term.at("coeff")));
  }
  return x;
}

Json to_json(const NovikovElement& element) {
  return Json{{"terms", to_json(element.body())}, {"cutoff", to_json(element.cutoff())}};
}

Json to_json(const Character& character) {
  std::set<std::uint32_t> primes;
  for (const auto& c : character.columns()) {
    for (const auto& [r, coeff] : c.terms()) {
      if (r != 1) primes.insert(r);
    }
  }
  Json coeffs = Json::array();
  Json row = Json::array();
  for (const auto& c : character.columns()) row.push_back(to_string(c.coefficient(1)));
  coeffs.push_back(std::move(row));
  for (auto p : primes) {
    Json r = Json::array();
    for (const auto& c : character.columns()) r.push_back(to_string(c.coefficient(p)));
    coeffs.push_back(std::move(r));
  }
  Json out{{"schema", kSchemaVersion},
           {"rank", character.rank()},
           {"coeffs", std::move(coeffs)},
           {"basis_primes", Json(std::vector<std::uint32_t>(primes.begin(), primes.end()))}};
  if (character.label()) out["label"] = *character.label();
  return out;
}

Character character_from_json(const Json& json) {
  if (json.contains("schema") && json.at("schema").get<int>() != kSchemaVersion) {
    throw ParseError("unsupported character schema version", 0, 0);
  }
  const Json& coeffs = json.at("coeffs");
  std::size_t rank = json.contains("rank") ? json.at("rank").get<std::size_t>() : 0;
  std::vector<std::vector<Rational>> rows;
  if (!coeffs.empty() && !coeffs[0].is_array()) {
    rows.emplace_back();
    for (const auto& c : coeffs) rows[0].push_back(rational_from_json(c));
  } else {
    for (const auto& r : coeffs) {
      rows.emplace_back();
      for (const auto& c : r) rows.back().push_back(rational_from_json(c));
    }
  }
  if (!json.contains("rank")) rank = rows.empty() ? 0 : rows[0].size();
  std::vector<std::uint32_t> primes;
  if (json.contains("basis_primes")) primes = json.at("basis_primes").get<std::vector<std::uint32_t>>();
  if (rows.size() != primes.size() + 1) {
    throw ParseError("character needs one coefficient row per basis prime plus the rational row", 0, 0);
  }
  std::vector<RealValue> columns(rank);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rank) throw ParseError("character row has the wrong length", 0, 0);
    for (std::size_t j = 0; j < rank; ++j) {
      columns[j] += RealValue::sqrt_term(i == 0 ? 1 : primes[i - 1], rows[i][j]);
    }
  }
  std::optional<std::string> label;
  if (json.contains("label")) label = json.at("label").get<std::string>();
  return Character(std::move(columns), std::move(label));
}

Json to_json(const Abelianization& ab) {
  Json torsion = Json::array();
  for (const auto& t : ab.torsion) torsion.push_back(t.get_str());
  return Json{{"rank", ab.rank},
              {"torsion", std::move(torsion)},
              {"projection", ab.projection},
              {"lifts", ab.lifts}};
}

FiniteQuotient quotient_from_json(const Json& json, const Group& group, std::size_t max_order) {
  auto table = json.at("table").get<FiniteQuotient::Table>();
  if (table.size() > max_order) {
    throw QuotientError("quotient of order " + std::to_string(table.size()) +
                        " exceeds the bound " + std::to_string(max_order));
  }
  const auto& names = group.presentation().generators;
  std::vector<std::size_t> images(names.size(), 0);
  const Json& imgs = json.at("images");
  if (imgs.is_array()) {
    images = imgs.get<std::vector<std::size_t>>();
  } else {
    std::vector<bool> seen(names.size(), false);
    for (const auto& [name, index] : imgs.items()) {
      auto j = group.presentation().index_of(name);
      if (!j) throw QuotientError("image given for undeclared generator '" + name + "'");
      images[*j] = index.get<std::size_t>();
      seen[*j] = true;
    }
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (!seen[j]) throw QuotientError("no image given for generator '" + names[j] + "'");
    }
  }
  std::string kernel = json.contains("kernel") ? json.at("kernel").get<std::string>() : "H";
  if (!json.contains("section")) return FiniteQuotient::create(group, table, images, std::nullopt, kernel);
  FiniteQuotient defaults = FiniteQuotient::create(group, table, images, std::nullopt, kernel);
  std::vector<Word> section;
  for (std::size_t q = 0; q < defaults.order(); ++q) section.push_back(defaults.section_word(q));
  for (const auto& [index, word] : json.at("section").items()) {
    std::size_t q = std::stoul(index);
    if (q >= section.size()) throw QuotientError("section index " + index + " out of range");
    section[q] = parse_word(word.get<std::string>(), names);
  }
  return FiniteQuotient::create(group, std::move(table), std::move(images), std::move(section), kernel);
}

Json to_json(const FiniteQuotient& quotient, const Group& group) {
  Json images = Json::object();
  const auto& names = group.presentation().generators;
  for (std::size_t j = 0; j < names.size(); ++j) images[names[j]] = quotient.images()[j];
  Json section = Json::object();
  for (std::size_t q = 0; q < quotient.order(); ++q) {
    section[std::to_string(q)] = format_word(quotient.section_word(q), names);
  }
  return Json{{"schema", kSchemaVersion},
              {"order", quotient.order()},
              {"kernel", quotient.kernel_name()},
              {"table", quotient.table()},
              {"images", std::move(images)},
              {"section", std::move(section)}};
}

Json to_json(const ChainComplex& complex) {
  const auto& p = complex.group->presentation();
  Json relators = Json::array();
  for (const auto& r : p.relators) relators.push_back(format_word(r, p.generators));
  Json d1 = Json::array();
  for (const auto& e : complex.d1) d1.push_back(to_json(e));
  return Json{{"generators", p.generators},
              {"relators", std::move(relators)},
              {"d2", matrix_json(complex.d2)},
              {"d1", std::move(d1)}};
}

Json to_json(const Certificate& certificate, const Group& group) {
  return Json{{"character", to_json(certificate.character)},
              {"cutoff", to_json(certificate.cutoff)},
              {"pivot", group.presentation().generators.at(certificate.pivot)},
              {"pivot_sign", certificate.pivot_sign},
              {"coordinates", names_json(certificate.coordinates, group)},
              {"L", matrix_json(certificate.L)},
              {"R", matrix_json(certificate.R)},
              {"R_inverse", matrix_json(certificate.R_inverse)},
              {"cycle_basis_digest", certificate.cycle_basis_digest},
              {"margin", to_json(certificate.margin)},
              {"radius", to_json(certificate.radius)}};
}

namespace {

std::uint32_t generator_from_json(const Json& json, const Group& group) {
  auto j = group.presentation().index_of(json.get<std::string>());
  if (!j) throw ParseError("unknown generator '" + json.get<std::string>() + "'", 0, 0);
  return *j;
}

std::vector<std::vector<RingElement>> matrix_from_json(const Json& json, const GroupPtr& group) {
  std::vector<std::vector<RingElement>> m;
  for (const auto& row : json) {
    m.emplace_back();
    for (const auto& e : row) m.back().push_back(ring_element_from_json(e, group));
  }
  return m;
}

}  // namespace

Certificate certificate_from_json(const Json& json, const GroupPtr& group) {
  Certificate c;
  c.character = character_from_json(json.at("character"));
  c.cutoff = real_value_from_json(json.at("cutoff"));
  c.pivot = generator_from_json(json.at("pivot"), *group);
  c.pivot_sign = json.at("pivot_sign").get<int>();
  for (const auto& name : json.at("coordinates")) c.coordinates.push_back(generator_from_json(name, *group));
  c.L = matrix_from_json(json.at("L"), group);
  c.R = matrix_from_json(json.at("R"), group);
  c.R_inverse = matrix_from_json(json.at("R_inverse"), group);
  c.cycle_basis_digest = json.at("cycle_basis_digest").get<std::string>();
  c.margin = extended_value_from_json(json.at("margin"));
  c.radius = extended_value_from_json(json.at("radius"));
  return c;
}

Json to_json(const CertificationResult& result, const Group& group) {
  Json out{{"status", to_string(result.status)},
           {"cutoff", to_json(result.cutoff)},
           {"cycle_count", result.cycle_count},
           {"abelian_rank", result.abelian_rank},
           {"attempts", result.attempts}};
  if (!result.note.empty()) out["note"] = result.note;
  out["certificate"] = result.certificate ? to_json(*result.certificate, group) : Json(nullptr);
  return out;
}

namespace {

Json margin_json(const FibringVerdict& verdict) {
  ExtendedValue margin;
  bool any = false;
  for (const auto* r : {&verdict.plus, &verdict.minus}) {
    if (r->certificate) {
      margin = min(margin, r->certificate->margin);
      any = true;
    }
  }
  return any ? to_json(margin) : Json(nullptr);
}

}  // namespace

Json to_json(const FibringVerdict& verdict, const Group& group) {
  return Json{{"character", to_json(verdict.character)},
              {"normalized", verdict.normalized},
              {"verdict", to_string(verdict.combined)},
              {"cutoff", to_json(verdict.plus.cutoff)},
              {"margin", margin_json(verdict)},
              {"certificate_digest", certificate_digest(verdict, group)},
              {"plus", to_json(verdict.plus, group)},
              {"minus", to_json(verdict.minus, group)}};
}

Json to_json(const ScanReport& report, const Group& group) {
  Json samples = Json::array();
  for (const auto& entry : report.entries) {
    Json s{{"index", entry.index}, {"character", to_json(entry.verdict.character)}};
    if (entry.error) {
      s["error"] = *entry.error;
    } else {
      s["verdict"] = to_string(entry.verdict.combined);
      s["plus"] = to_string(entry.verdict.plus.status);
      s["minus"] = to_string(entry.verdict.minus.status);
      s["margin"] = margin_json(entry.verdict);
      s["certificate_digest"] = certificate_digest(entry.verdict, group);
    }
    samples.push_back(std::move(s));
  }
  return Json{{"samples", std::move(samples)},
              {"fibred", report.fibred},
              {"one_sided", report.one_sided}};
}

Json to_json(const HarnessReport& report) {
  Json samples = Json::array();
  for (const auto& s : report.samples) {
    samples.push_back(Json{{"scope", s.scope},
                           {"character", to_json(s.verdict.character)},
                           {"verdict", to_string(s.verdict.combined)},
                           {"plus", to_string(s.verdict.plus.status)},
                           {"minus", to_string(s.verdict.minus.status)},
                           {"oracle_fibred", s.oracle ? Json(*s.oracle) : Json(nullptr)},
                           {"oracle_conflict", s.oracle_conflict}});
  }
  return Json{{"name", report.name},
              {"known_betti1", to_string(report.known_betti1)},
              {"rfrs", report.rfrs},
              {"pass", report.pass},
              {"fibred_count", report.fibred_count},
              {"conflicts", report.conflicts},
              {"summary", report.summary},
              {"samples", std::move(samples)}};
}

std::string certificate_digest(const FibringVerdict& verdict, const Group& group) {
  Json both = Json::array();
  for (const auto* r : {&verdict.plus, &verdict.minus}) {
    both.push_back(r->certificate ? to_json(*r->certificate, group) : Json(nullptr));
  }
  return sha256_hex(both.dump());
}

}  // namespace novikov
