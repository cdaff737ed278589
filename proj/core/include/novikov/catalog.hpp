#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novikov/fibring.hpp"
#include "novikov/presentation.hpp"

namespace novikov {

/// Independent sources of truth for membership in Sigma(G). These encode
/// known results from the literature; none is derived from the certifier.
enum class SigmaOracleKind {
  None,
  FreeGroup,         // Sigma(F_n) is empty for n >= 2
  FreeAbelian,       // Sigma(Z^n) is the whole sphere
  RaagLivingGraph,   // living subgraph connected and dominating
  BaumslagSolitar12  // <a, t | t a t^-1 a^-2>: exactly the phi with phi(t) < 0
};

const char* to_string(SigmaOracleKind kind);

/// Living-subgraph test for RAAGs: phi lies in Sigma iff the full subgraph
/// on {v : phi(v) != 0} is connected and every other vertex is adjacent to
/// it. Implemented on the graph alone.
bool raag_living_subgraph_criterion(std::size_t vertex_count, const RaagGraph& graph,
                                    const std::vector<int>& generator_signs);

/// nullopt where the oracle has no answer.
std::optional<bool> sigma_oracle(SigmaOracleKind kind, const GroupPtr& group,
                                 const Character& character);

struct QuotientSpec {
  FiniteQuotient::Table table;
  std::vector<std::size_t> images;
  std::optional<std::vector<std::string>> section;
};

struct CatalogEntry {
  std::string name;
  std::string presentation;
  Rational known_betti1;
  SigmaOracleKind oracle = SigmaOracleKind::None;
  std::string provenance;
  /// Groups outside the RFRS hypothesis are checked for oracle agreement only.
  bool rfrs = true;
  std::vector<QuotientSpec> towers;
};

const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry& catalog_entry(const std::string& name);

struct HarnessSample {
  std::string scope;  // "G" or "H1", "H2", ...
  FibringVerdict verdict;
  std::optional<bool> oracle;
  bool oracle_conflict = false;
};

struct HarnessReport {
  std::string name;
  Rational known_betti1;
  bool rfrs = true;
  bool pass = false;
  std::size_t fibred_count = 0;
  std::size_t conflicts = 0;
  std::vector<HarnessSample> samples;
  std::string summary;
};

/// PASS iff (beta = 0 implies some sample on G or a tower subgroup is
/// Fibred) and (beta != 0 implies none is) and no certifier verdict
/// contradicts the oracle. Non-RFRS entries only need oracle agreement.
/// Throws std::invalid_argument when the entry has no oracle.
HarnessReport consistency_harness(const CatalogEntry& entry, std::size_t sample_budget,
                                  const CutoffPolicy& policy = {});

}  // namespace novikov
