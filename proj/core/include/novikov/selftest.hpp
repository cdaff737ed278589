#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "novikov/real_value.hpp"

namespace novikov {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  std::string counterexample;
  bool ok() const { return failed == 0; }
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  /// Instances per suite.
  std::size_t scale = 40;
  /// Inject a quotient whose section misses its coset.
  bool corrupt_quotient = false;
  /// Absolute cutoff for the inversion and certificate suites.
  std::optional<RealValue> cutoff;
};

/// Runs the invariant suites of every module at small scale.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

}  // namespace novikov
