#include "novikov/chain_complex.hpp"

#include <stdexcept>

#include "novikov/error.hpp"

namespace novikov {

RingElement fox_derivative(const Word& word, std::uint32_t j, const GroupPtr& group) {
  RingElement out(group);
  Word prefix;
  for (const Letter& x : word) {
    if (x.generator == j) {
      if (!x.inverse) {
        out.add_term(group->embed(prefix), 1);
      } else {
        Word w = prefix;
        w.push_back(x);
        out.add_term(group->embed(w), -1);
      }
    }
    prefix.push_back(x);
  }
  return out;
}

ChainComplex build_complex(const GroupPtr& group) {
  ChainComplex c;
  c.group = group;
  const auto& p = group->presentation();
  const auto n = static_cast<std::uint32_t>(p.generator_count());
  for (std::uint32_t j = 0; j < n; ++j) {
    c.d1.push_back(RingElement::from_generator_word(group, Word{Letter{j, false}}) -
                   RingElement::one(group));
  }
  for (const Word& r : p.relators) {
    std::vector<RingElement> row;
    for (std::uint32_t j = 0; j < n; ++j) row.push_back(fox_derivative(r, j, group));
    c.d2.push_back(std::move(row));
  }
  for (const RingElement& e : boundary_composite(c)) {
    if (!e.is_zero()) throw std::logic_error("d1 o d2 is not zero: " + e.to_string());
  }
  return c;
}

std::vector<RingElement> boundary_composite(const ChainComplex& complex) {
  std::vector<RingElement> out;
  for (const auto& row : complex.d2) {
    RingElement sum(complex.group);
    for (std::size_t j = 0; j < row.size(); ++j) sum += row[j] * complex.d1[j];
    out.push_back(std::move(sum));
  }
  return out;
}

std::uint32_t choose_pivot(const ChainComplex& complex, const Character& character) {
  std::optional<std::uint32_t> best;
  RealValue best_value;
  for (std::uint32_t j = 0; j < complex.generator_count(); ++j) {
    RealValue v = abs(evaluate(character, *complex.group, complex.group->generator(j)));
    if (v.is_zero()) continue;
    if (!best || best_value < v) {
      best = j;
      best_value = v;
    }
  }
  if (!best) throw ZeroCharacter("character vanishes on every generator");
  return *best;
}

CycleBasis cycle_basis(const ChainComplex& complex, const CharacterPtr& character,
                       const ExtendedValue& cutoff) {
  CycleBasis basis;
  const GroupPtr& group = complex.group;
  basis.pivot = choose_pivot(complex, *character);
  basis.pivot_sign = sign(evaluate(*character, *group, group->generator(basis.pivot)));
  const std::size_t n = complex.generator_count();
  NovikovElement ds(complex.d1[basis.pivot], character);
  NovikovElement ds_inverse = invert(ds, cutoff);
  for (std::uint32_t t = 0; t < n; ++t) {
    if (t == basis.pivot) continue;
    basis.coordinates.push_back(t);
    std::vector<NovikovElement> row(n, NovikovElement::zero(group, character, cutoff));
    row[t] = NovikovElement::one(group, character, cutoff);
    row[basis.pivot] = -(NovikovElement(complex.d1[t], character) * ds_inverse);
    basis.vectors.push_back(std::move(row));
  }
  return basis;
}

NovikovElement boundary_of_chain(const ChainComplex& complex,
                                 const std::vector<NovikovElement>& chain) {
  if (chain.size() != complex.generator_count()) throw ShapeError("chain has the wrong length");
  if (chain.empty()) throw ShapeError("empty chain");
  NovikovElement sum = NovikovElement::zero(complex.group, chain[0].character_ptr());
  for (std::size_t j = 0; j < chain.size(); ++j) {
    sum = sum + chain[j] * NovikovElement(complex.d1[j], chain[j].character_ptr());
  }
  return sum;
}

}  // namespace novikov
