#include "novikov/catalog.hpp"

#include <functional>
#include <stdexcept>

#include "novikov/error.hpp"
#include "novikov/subgroup.hpp"

namespace novikov {

const char* to_string(SigmaOracleKind kind) {
  switch (kind) {
    case SigmaOracleKind::None: return "none";
    case SigmaOracleKind::FreeGroup: return "free-group";
    case SigmaOracleKind::FreeAbelian: return "free-abelian";
    case SigmaOracleKind::RaagLivingGraph: return "raag-living-subgraph";
    case SigmaOracleKind::BaumslagSolitar12: return "baumslag-solitar-1-2";
  }
  return "?";
}

bool raag_living_subgraph_criterion(std::size_t vertex_count, const RaagGraph& graph,
                                    const std::vector<int>& generator_signs) {
  if (generator_signs.size() != vertex_count) throw ShapeError("one sign per vertex expected");
  std::vector<std::vector<std::size_t>> adjacent(vertex_count);
  for (auto [i, j] : graph.edges) {
    adjacent[i].push_back(j);
    adjacent[j].push_back(i);
  }
  std::vector<bool> living(vertex_count);
  std::size_t start = vertex_count;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    living[v] = generator_signs[v] != 0;
    if (living[v] && start == vertex_count) start = v;
  }
  if (start == vertex_count) return false;
  std::vector<bool> seen(vertex_count, false);
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacent[v]) {
      if (living[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (living[v] && !seen[v]) return false;
    if (!living[v]) {
      bool dominated = false;
      for (std::size_t w : adjacent[v]) dominated = dominated || living[w];
      if (!dominated) return false;
    }
  }
  return true;
}

std::optional<bool> sigma_oracle(SigmaOracleKind kind, const GroupPtr& group,
                                 const Character& character) {
  if (character.is_zero()) return std::nullopt;
  const auto& p = group->presentation();
  switch (kind) {
    case SigmaOracleKind::None:
      return std::nullopt;
    case SigmaOracleKind::FreeGroup:
      if (group->abelianization().rank < 2) return std::nullopt;
      return false;
    case SigmaOracleKind::FreeAbelian:
      return true;
    case SigmaOracleKind::RaagLivingGraph: {
      if (!p.is_raag()) return std::nullopt;
      std::vector<int> signs;
      for (std::uint32_t j = 0; j < p.generator_count(); ++j) {
        signs.push_back(sign(evaluate(character, *group, group->generator(j))));
      }
      return raag_living_subgraph_criterion(p.generator_count(), std::get<RaagGraph>(*p.engine), signs);
    }
    case SigmaOracleKind::BaumslagSolitar12: {
      auto t = p.index_of("t");
      if (!t) return std::nullopt;
      return sign(evaluate(character, *group, group->generator(*t))) < 0;
    }
  }
  return std::nullopt;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> c;
    QuotientSpec z2_on_one{{{0, 1}, {1, 0}}, {1}, std::nullopt};
    QuotientSpec z2_on_first{{{0, 1}, {1, 0}}, {1, 0}, std::nullopt};
    c.push_back({"Z", "raag { t; }", 0, SigmaOracleKind::FreeAbelian,
                 "infinite cyclic group; amenable, so the first L2-Betti number vanishes", true,
                 {z2_on_one}});
    c.push_back({"Z2", "raag { a, b; a-b }", 0, SigmaOracleKind::FreeAbelian,
                 "free abelian of rank 2; infinite amenable", true, {}});
    c.push_back({"Z3", "raag { a, b, c; a-b, a-c, b-c }", 0, SigmaOracleKind::FreeAbelian,
                 "free abelian of rank 3; infinite amenable", true, {}});
    c.push_back({"F2", "raag { a, b; }", 1, SigmaOracleKind::FreeGroup,
                 "free group of rank 2; beta_1^(2) = -chi = 1", true, {z2_on_first}});
    c.push_back({"F2xZ", "raag { a, b, z; a-z, b-z }", 0, SigmaOracleKind::RaagLivingGraph,
                 "RAAG on the path a-z-b; the graph is a cone, so the L2-Betti numbers vanish",
                 true, {}});
    c.push_back({"BS12",
                 "pres { a, t | t a t^-1 a^-2 } rewriting wreath "
                 "{ t a -> a^2 t; t a^-1 -> a^-2 t; t^-1 a^2 -> a t^-1; t^-1 a^-1 -> a^-1 t^-1 a }",
                 0, SigmaOracleKind::BaumslagSolitar12,
                 "Baumslag-Solitar group BS(1,2); solvable, so amenable; Sigma is one-sided",
                 false, {}});
    return c;
  }();
  return catalog;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& entry : builtin_catalog()) {
    if (entry.name == name) return entry;
  }
  throw std::invalid_argument("no catalog entry named '" + name + "'");
}

namespace {

SigmaOracleKind inherited_oracle(SigmaOracleKind kind) {
  // Finite-index subgroups of free (abelian) groups are free (abelian).
  if (kind == SigmaOracleKind::FreeGroup || kind == SigmaOracleKind::FreeAbelian) return kind;
  return SigmaOracleKind::None;
}

}  // namespace

HarnessReport consistency_harness(const CatalogEntry& entry, std::size_t sample_budget,
                                  const CutoffPolicy& policy) {
  if (entry.oracle == SigmaOracleKind::None) {
    throw std::invalid_argument("catalog entry '" + entry.name + "' has no Sigma oracle");
  }
  HarnessReport report;
  report.name = entry.name;
  report.known_betti1 = entry.known_betti1;
  report.rfrs = entry.rfrs;

  auto run = [&](const std::string& scope, const GroupPtr& group, SigmaOracleKind oracle) {
    ChainComplex complex = build_complex(group);
    std::size_t rank = group->abelianization().rank;
    for (const Character& phi : sample_primitive_rays(rank, sample_budget, 1)) {
      HarnessSample sample;
      sample.scope = scope;
      sample.verdict = fibred_check(complex, phi, policy);
      const FibringVerdict& v = sample.verdict;
      auto plus = sigma_oracle(oracle, group, v.character);
      auto minus = sigma_oracle(oracle, group, -v.character);
      if (plus && minus) sample.oracle = *plus && *minus;
      auto contradicts = [](const CertificationResult& r, std::optional<bool> truth) {
        if (!truth) return false;
        return (r.status == DirectionStatus::Certified && !*truth) ||
               (r.status == DirectionStatus::RefutedByRank && *truth);
      };
      sample.oracle_conflict = contradicts(v.plus, plus) || contradicts(v.minus, minus);
      if (v.combined == Verdict::Fibred) ++report.fibred_count;
      if (sample.oracle_conflict) ++report.conflicts;
      report.samples.push_back(std::move(sample));
    }
  };

  GroupPtr group = make_group(parse_presentation(entry.presentation));
  run("G", group, entry.oracle);
  for (std::size_t i = 0; i < entry.towers.size(); ++i) {
    const QuotientSpec& spec = entry.towers[i];
    std::optional<std::vector<Word>> section;
    if (spec.section) {
      section.emplace();
      for (const auto& w : *spec.section) section->push_back(parse_word(w, group->presentation().generators));
    }
    FiniteQuotient q = FiniteQuotient::create(*group, spec.table, spec.images, section,
                                              "H" + std::to_string(i + 1));
    run("H" + std::to_string(i + 1), make_subgroup(group, q), inherited_oracle(entry.oracle));
  }

  bool vanishing = entry.known_betti1 == 0;
  if (entry.rfrs) {
    report.pass = report.conflicts == 0 &&
                  (vanishing ? report.fibred_count > 0 : report.fibred_count == 0);
  } else {
    report.pass = report.conflicts == 0;
  }
  report.summary = entry.name + ": beta_1^(2) = " + to_string(entry.known_betti1) + ", " +
                   std::to_string(report.fibred_count) + " fibred of " +
                   std::to_string(report.samples.size()) + " samples, " +
                   std::to_string(report.conflicts) + " oracle conflicts" +
                   (entry.rfrs ? "" : " (outside the RFRS hypothesis: oracle agreement only)") +
                   (report.pass ? " -> PASS" : " -> FAIL");
  return report;
}

}  // namespace novikov
