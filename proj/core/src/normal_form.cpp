#include "novikov/normal_form.hpp"

#include <algorithm>

#include "novikov/error.hpp"

namespace novikov {

RaagEngine::RaagEngine(std::size_t generator_count, const RaagGraph& graph)
    : generator_count_(generator_count), adjacency_(generator_count * generator_count, false) {
  for (auto [i, j] : graph.edges) {
    if (i == j || i >= generator_count || j >= generator_count) {
      throw EngineRejection("malformed commutation graph");
    }
    adjacency_[i * generator_count + j] = true;
    adjacency_[j * generator_count + i] = true;
  }
}

Word RaagEngine::normal_form(const Word& word) const {
  // Cancellation: a letter meets its inverse across a block of letters that
  // all commute with it.
  Word reduced;
  reduced.reserve(word.size());
  for (const Letter& x : word) {
    if (x.generator >= generator_count_) throw EngineRejection("letter outside alphabet");
    bool cancelled = false;
    for (std::size_t k = reduced.size(); k-- > 0;) {
      const Letter& y = reduced[k];
      if (y == x.inverted()) {
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k));
        cancelled = true;
        break;
      }
      if (y.generator == x.generator || !commute(x.generator, y.generator)) break;
    }
    if (!cancelled) reduced.push_back(x);
  }

  // Repeatedly emit the least letter that no earlier unemitted letter
  // blocks; blocked[i] counts the non-commuting letters left of i.
  const std::size_t n = reduced.size();
  std::vector<std::size_t> blocked(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!commute(reduced[i].generator, reduced[j].generator)) ++blocked[i];
    }
  }
  Word result;
  result.reserve(n);
  std::vector<bool> used(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && blocked[i] == 0 && (best == n || reduced[i] < reduced[best])) best = i;
    }
    used[best] = true;
    result.push_back(reduced[best]);
    for (std::size_t k = best + 1; k < n; ++k) {
      if (!used[k] && !commute(reduced[best].generator, reduced[k].generator)) --blocked[k];
    }
  }
  return result;
}

RewritingEngine::RewritingEngine(std::size_t generator_count, RewritingSpec spec,
                                 std::size_t confluence_length, std::size_t step_budget)
    : generator_count_(generator_count), spec_(std::move(spec)), step_budget_(step_budget) {
  for (const auto& rule : spec_.rules) {
    if (rule.lhs.empty()) throw EngineRejection("rewriting rule with empty left-hand side");
    for (const Letter& x : rule.lhs) {
      if (x.generator >= generator_count_) throw EngineRejection("rule letter outside alphabet");
    }
    for (const Letter& x : rule.rhs) {
      if (x.generator >= generator_count_) throw EngineRejection("rule letter outside alphabet");
    }
    if (free_reduce(rule.lhs) != rule.lhs) {
      throw EngineRejection("rewriting rule left-hand side is not freely reduced");
    }
  }
  check_orientation();
  check_local_confluence(confluence_length);
}

Word RewritingEngine::normal_form(const Word& word) const {
  Word out;
  out.reserve(word.size());
  Word pending(word.rbegin(), word.rend());
  std::size_t steps = 0;
  while (!pending.empty()) {
    Letter x = pending.back();
    pending.pop_back();
    if (x.generator >= generator_count_) throw EngineRejection("letter outside alphabet");
    if (!out.empty() && out.back() == x.inverted()) {
      out.pop_back();
      continue;
    }
    out.push_back(x);
    for (const auto& rule : spec_.rules) {
      const Word& lhs = rule.lhs;
      if (lhs.size() > out.size() || lhs.back() != x) continue;
      if (!std::equal(lhs.begin(), lhs.end(), out.end() - static_cast<std::ptrdiff_t>(lhs.size()))) {
        continue;
      }
      if (++steps > step_budget_) {
        throw EngineRejection("rewriting exceeded the step budget of " +
                              std::to_string(step_budget_));
      }
      out.resize(out.size() - lhs.size());
      pending.insert(pending.end(), rule.rhs.rbegin(), rule.rhs.rend());
      break;
    }
  }
  return out;
}

namespace {

// Wreath order: compare projections onto the heaviest generator present in
// shortlex, then the lighter pieces between heavy letters from the right.
int wreath_compare(const Word& u, const Word& v) {
  std::uint32_t top = 0;
  bool any = false;
  for (const Word* w : {&u, &v}) {
    for (const Letter& x : *w) {
      top = any ? std::max(top, x.generator) : x.generator;
      any = true;
    }
  }
  if (!any) return 0;
  auto split = [top](const Word& w, Word& heavy, std::vector<Word>& pieces) {
    pieces.emplace_back();
    for (const Letter& x : w) {
      if (x.generator == top) {
        heavy.push_back(x);
        pieces.emplace_back();
      } else {
        pieces.back().push_back(x);
      }
    }
  };
  Word hu, hv;
  std::vector<Word> pu, pv;
  split(u, hu, pu);
  split(v, hv, pv);
  if (hu != hv) return shortlex_less(hu, hv) ? -1 : 1;
  for (std::size_t i = pu.size(); i-- > 0;) {
    if (pu[i] != pv[i]) return wreath_compare(pu[i], pv[i]);
  }
  return 0;
}

}  // namespace

bool RewritingEngine::order_less(const Word& lhs, const Word& rhs) const {
  if (spec_.order == RewriteOrder::ShortLex) return shortlex_less(lhs, rhs);
  return wreath_compare(lhs, rhs) < 0;
}

void RewritingEngine::check_orientation() const {
  for (const auto& rule : spec_.rules) {
    if (!order_less(rule.rhs, rule.lhs)) {
      throw EngineRejection("rewriting rule is not decreasing in the reduction order");
    }
  }
}

void RewritingEngine::check_local_confluence(std::size_t max_length) const {
  std::vector<RewriteRule> rules = spec_.rules;
  for (std::uint32_t g = 0; g < generator_count_; ++g) {
    for (bool inv : {false, true}) {
      Letter x{g, inv};
      rules.push_back({Word{x, x.inverted()}, Word{}});
    }
  }
  auto resolve = [&](const Word& overlap, const Word& a, const Word& b) {
    Word na = normal_form(a);
    Word nb = normal_form(b);
    if (na != nb) {
      throw EngineRejection("critical pair on overlap of length " + std::to_string(overlap.size()) +
                            " does not resolve");
    }
  };
  for (const auto& r1 : rules) {
    for (const auto& r2 : rules) {
      const Word& l1 = r1.lhs;
      const Word& l2 = r2.lhs;
      // Proper overlaps: a suffix of l1 equals a prefix of l2.
      for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
        std::size_t length = l1.size() + l2.size() - k;
        if (length > max_length) continue;
        Word overlap = l1;
        overlap.insert(overlap.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
        Word a = r1.rhs;
        a.insert(a.end(), l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
        Word b(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
        b.insert(b.end(), r2.rhs.begin(), r2.rhs.end());
        resolve(overlap, a, b);
      }
      // Inclusions: l2 occurs inside l1.
      if (&r1 != &r2 && l2.size() <= l1.size() && l1.size() <= max_length) {
        for (std::size_t i = 0; i + l2.size() <= l1.size(); ++i) {
          if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<std::ptrdiff_t>(i))) continue;
          Word b(l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(i));
          b.insert(b.end(), r2.rhs.begin(), r2.rhs.end());
          b.insert(b.end(), l1.begin() + static_cast<std::ptrdiff_t>(i + l2.size()), l1.end());
          resolve(l1, r1.rhs, b);
        }
      }
    }
  }
}

std::unique_ptr<NormalFormEngine> make_engine(const GroupPresentation& presentation) {
  if (!presentation.engine) {
    throw EngineRejection("presentation has no normal-form engine");
  }
  std::unique_ptr<NormalFormEngine> engine;
  std::size_t n = presentation.generator_count();
  if (const auto* graph = std::get_if<RaagGraph>(&*presentation.engine)) {
    engine = std::make_unique<RaagEngine>(n, *graph);
  } else {
    engine = std::make_unique<RewritingEngine>(n, std::get<RewritingSpec>(*presentation.engine));
  }
  for (std::size_t i = 0; i < presentation.relators.size(); ++i) {
    if (!engine->normal_form(presentation.relators[i]).empty()) {
      throw EngineRejection("relator " + std::to_string(i + 1) + " (" +
                            format_word(presentation.relators[i], presentation.generators) +
                            ") does not reduce to the identity");
    }
  }
  return engine;
}

}  // namespace novikov
