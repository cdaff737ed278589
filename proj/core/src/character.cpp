#include "novikov/character.hpp"

#include <map>
#include <set>

#include "novikov/error.hpp"

namespace novikov {

Character Character::rational(const std::vector<Rational>& images) {
  std::vector<RealValue> columns;
  columns.reserve(images.size());
  for (const auto& q : images) columns.emplace_back(q);
  return Character(std::move(columns));
}

bool Character::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Character::is_rational() const {
  for (const auto& c : columns_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

RealValue Character::evaluate(const AbelianVector& v) const {
  if (v.size() != columns_.size()) {
    throw RankMismatch("character of rank " + std::to_string(columns_.size()) +
                       " applied to a vector of length " + std::to_string(v.size()));
  }
  RealValue sum;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) sum += columns_[i] * Rational(static_cast<long>(v[i]));
  }
  return sum;
}

Character Character::operator-() const { return scaled(-1); }

Character Character::scaled(const Rational& factor) const {
  std::vector<RealValue> columns = columns_;
  for (auto& c : columns) c *= factor;
  return Character(std::move(columns), label_);
}

RealValue evaluate(const Character& character, const Group& group, const Word& key) {
  return character.evaluate(group.abelian_image(key));
}

bool is_irrational(const Character& character, std::size_t rank) {
  if (character.rank() != rank) return false;
  if (rank == 0) return true;
  std::set<std::uint32_t> radicands;
  for (const auto& c : character.columns()) {
    for (const auto& [r, coeff] : c.terms()) radicands.insert(r);
  }
  // Rows: radicands; columns: basis vectors. Injective iff column rank = r.
  std::vector<std::vector<Rational>> m;
  for (std::uint32_t r : radicands) {
    std::vector<Rational> row;
    for (const auto& c : character.columns()) row.push_back(c.coefficient(r));
    m.push_back(std::move(row));
  }
  std::size_t found = 0;
  for (std::size_t col = 0; col < rank && found < m.size(); ++col) {
    std::size_t pivot = found;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[found], m[pivot]);
    for (std::size_t i = found + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Rational f = m[i][col] / m[found][col];
      for (std::size_t j = col; j < rank; ++j) m[i][j] -= f * m[found][j];
    }
    ++found;
  }
  return found == rank;
}

std::weak_ordering CompatibleOrder::compare_abelian(const AbelianVector& u,
                                                    const AbelianVector& v) const {
  if (u == v) return std::weak_ordering::equivalent;
  AbelianVector d(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) d[i] = u[i] - v[i];
  int s = sign(character_.evaluate(d));
  if (s < 0) return std::weak_ordering::less;
  if (s > 0) return std::weak_ordering::greater;
  // Ties: u < v iff the first nonzero coordinate of u - v is positive, so
  // e_1 < e_2 < ... for the zero character.
  return u > v ? std::weak_ordering::less : std::weak_ordering::greater;
}

std::weak_ordering CompatibleOrder::compare(const Word& g, const Word& h) const {
  return compare_abelian(group_->abelian_image(g), group_->abelian_image(h));
}

namespace {

Word lift_word(const Abelianization& ab, std::size_t i) {
  Word lift;
  for (std::uint32_t j = 0; j < ab.lifts[i].size(); ++j) {
    Word piece = power(Word{Letter{j, false}}, ab.lifts[i][j]);
    lift.insert(lift.end(), piece.begin(), piece.end());
  }
  return lift;
}

}  // namespace

Character restrict_character(const Character& phi, const Group& ambient, const Group& subgroup) {
  const auto& ab = subgroup.abelianization();
  std::vector<RealValue> columns;
  for (std::size_t i = 0; i < ab.rank; ++i) {
    columns.push_back(evaluate(phi, ambient, subgroup.embed(lift_word(ab, i))));
  }
  return Character(std::move(columns), phi.label());
}

Character conjugate_character(const Character& psi, std::size_t q, const FiniteQuotient& quotient,
                              const Group& subgroup) {
  const auto& ab = subgroup.abelianization();
  if (psi.rank() != ab.rank) {
    throw RankMismatch("character rank " + std::to_string(psi.rank()) +
                       " does not match the subgroup's free abelianisation rank " +
                       std::to_string(ab.rank));
  }
  const Word& s = quotient.section(q);
  std::vector<RealValue> columns;
  for (std::size_t i = 0; i < ab.rank; ++i) {
    Word key = subgroup.conjugate(s, subgroup.embed(lift_word(ab, i)));
    columns.push_back(psi.evaluate(subgroup.abelian_image(key)));
  }
  return Character(std::move(columns), psi.label());
}

}  // namespace novikov
