#include "novikov/subgroup.hpp"

#include <map>

#include "novikov/error.hpp"

namespace novikov {

namespace {

// Rewrites an ambient generator word into Schreier generators. The result
// represents w * s(beta(w))^-1.
Word schreier_rewrite(const Word& word, const FiniteQuotient& quotient, std::size_t n) {
  Word out;
  std::size_t coset = 0;
  for (const Letter& x : word) {
    std::size_t image = quotient.image_of_word(Word{Letter{x.generator, false}});
    if (!x.inverse) {
      out.push_back(Letter{static_cast<std::uint32_t>(coset * n + x.generator), false});
      coset = quotient.multiply(coset, image);
    } else {
      coset = quotient.multiply(coset, quotient.inverse(image));
      out.push_back(Letter{static_cast<std::uint32_t>(coset * n + x.generator), true});
    }
  }
  return out;
}

Word substitute(const Word& word, const std::vector<long>& index) {
  Word out;
  for (const Letter& x : word) {
    long j = index[x.generator];
    if (j >= 0) out.push_back(Letter{static_cast<std::uint32_t>(j), x.inverse});
  }
  return free_reduce(out);
}

}  // namespace

SubgroupPresentation subgroup_presentation(const Group& group, const FiniteQuotient& quotient,
                                           std::size_t max_order) {
  const std::size_t m = quotient.order();
  const std::size_t n = group.generator_count();
  if (m > max_order) {
    throw QuotientError("quotient of order " + std::to_string(m) + " exceeds the bound " +
                        std::to_string(max_order));
  }
  const auto& ambient = group.presentation();
  SubgroupPresentation sp;
  sp.schreier_generator_count = m * n;
  sp.schreier_relator_count = m * ambient.relators.size();
  if (m == 1) {
    sp.presentation = ambient;
    for (std::uint32_t x = 0; x < n; ++x) {
      sp.inclusion.push_back(Word{Letter{x, false}});
      sp.reduced_index.push_back(static_cast<long>(x));
    }
    return sp;
  }

  std::vector<Word> relators;
  for (std::size_t q = 0; q < m; ++q) {
    const Word& s = quotient.section_word(q);
    for (const Word& r : ambient.relators) {
      relators.push_back(free_reduce(schreier_rewrite(concat(concat(s, r), inverse(s)), quotient, n)));
    }
  }
  // The section need not be prefix-closed, so each s(q) contributes the
  // relation tau(s(q)) = 1.
  for (std::size_t q = 1; q < m; ++q) {
    relators.push_back(free_reduce(schreier_rewrite(quotient.section_word(q), quotient, n)));
  }

  std::vector<bool> killed(m * n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Word& r : relators) {
      Word reduced;
      for (const Letter& x : r) {
        if (!killed[x.generator]) reduced.push_back(x);
      }
      r = free_reduce(reduced);
      if (r.size() == 1 && !killed[r[0].generator]) {
        killed[r[0].generator] = true;
        changed = true;
      }
    }
  }

  sp.reduced_index.assign(m * n, -1);
  long next = 0;
  for (std::size_t k = 0; k < m * n; ++k) {
    if (killed[k]) continue;
    sp.reduced_index[k] = next++;
    std::size_t q = k / n;
    auto x = static_cast<std::uint32_t>(k % n);
    std::size_t target = quotient.multiply(q, quotient.image_of_word(Word{Letter{x, false}}));
    Word w = quotient.section_word(q);
    w.push_back(Letter{x, false});
    sp.inclusion.push_back(free_reduce(concat(w, inverse(quotient.section_word(target)))));
    sp.presentation.generators.push_back(quotient.kernel_name() + "_" + std::to_string(next - 1));
  }
  for (const Word& r : relators) {
    Word w = substitute(r, sp.reduced_index);
    if (!w.empty()) sp.presentation.relators.push_back(std::move(w));
  }
  return sp;
}

namespace {

class Subgroup final : public Group {
 public:
  Subgroup(GroupPtr ambient, FiniteQuotient quotient, SubgroupPresentation sp)
      : Group(sp.presentation, free_abelianization(sp.presentation)),
        ambient_(std::move(ambient)),
        quotient_(std::move(quotient)),
        inclusion_(std::move(sp.inclusion)),
        reduced_index_(std::move(sp.reduced_index)) {}

  const std::vector<std::string>& element_alphabet() const override {
    return ambient_->element_alphabet();
  }
  Word normal_form(const Word& element_word) const override {
    return ambient_->normal_form(element_word);
  }
  Word embed(const Word& generator_word) const override {
    Word w;
    for (const Letter& x : generator_word) {
      Word piece = x.inverse ? inverse(inclusion_.at(x.generator)) : inclusion_.at(x.generator);
      w.insert(w.end(), piece.begin(), piece.end());
    }
    return ambient_->embed(w);
  }
  Word generator_word(const Word& key) const override {
    Word w = ambient_->generator_word(key);
    if (quotient_.order() == 1) return w;
    if (quotient_.image_of_word(w) != 0) {
      throw QuotientError("element " + ambient_->format(key) + " is not in the subgroup " +
                          quotient_.kernel_name());
    }
    return substitute(schreier_rewrite(w, quotient_, ambient_->generator_count()), reduced_index_);
  }

 private:
  GroupPtr ambient_;
  FiniteQuotient quotient_;
  std::vector<Word> inclusion_;
  std::vector<long> reduced_index_;
};

}  // namespace

GroupPtr make_subgroup(GroupPtr ambient, const FiniteQuotient& quotient, std::size_t max_order) {
  SubgroupPresentation sp = subgroup_presentation(*ambient, quotient, max_order);
  return std::make_shared<Subgroup>(std::move(ambient), quotient, std::move(sp));
}

}  // namespace novikov
