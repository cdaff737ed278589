#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "novikov/presentation.hpp"

namespace novikov {

/// Solves the word problem: maps a word to the unique representative of its
/// group element.
class NormalFormEngine {
 public:
  virtual ~NormalFormEngine() = default;
  virtual Word normal_form(const Word& word) const = 0;
};

/// Right-angled Artin groups: free and commutation cancellation followed by
/// the lexicographically least (leftmost-least) representative of the trace.
class RaagEngine final : public NormalFormEngine {
 public:
  RaagEngine(std::size_t generator_count, const RaagGraph& graph);

  Word normal_form(const Word& word) const override;
  bool commute(std::uint32_t a, std::uint32_t b) const {
    return a == b || adjacency_[a * generator_count_ + b];
  }

 private:
  std::size_t generator_count_;
  std::vector<bool> adjacency_;
};

/// String rewriting with implicit free reduction. The constructor checks
/// that every rule decreases in the chosen order and that all critical pairs
/// whose overlap word has length at most `confluence_length` resolve.
class RewritingEngine final : public NormalFormEngine {
 public:
  static constexpr std::size_t kDefaultConfluenceLength = 12;
  static constexpr std::size_t kDefaultStepBudget = 1'000'000;

  RewritingEngine(std::size_t generator_count, RewritingSpec spec,
                  std::size_t confluence_length = kDefaultConfluenceLength,
                  std::size_t step_budget = kDefaultStepBudget);

  Word normal_form(const Word& word) const override;

  /// Strict comparison in the engine's reduction order.
  bool order_less(const Word& lhs, const Word& rhs) const;

 private:
  void check_orientation() const;
  void check_local_confluence(std::size_t max_length) const;

  std::size_t generator_count_;
  RewritingSpec spec_;
  std::size_t step_budget_;
};

/// Builds the engine named by the presentation and checks that every
/// relator reduces to the identity. Throws EngineRejection.
std::unique_ptr<NormalFormEngine> make_engine(const GroupPresentation& presentation);

}  // namespace novikov
