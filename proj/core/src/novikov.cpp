#include "novikov/novikov.hpp"

#include <algorithm>

#include "novikov/error.hpp"

namespace novikov {

namespace {

struct ValuedTerm {
  const Word* key;
  Rational coefficient;
  RealValue value;
};

std::vector<ValuedTerm> valued_terms(const RingElement& x, const Character& phi) {
  std::vector<ValuedTerm> out;
  out.reserve(x.size());
  for (const auto& [key, c] : x.terms()) out.push_back({&key, c, evaluate(phi, *x.group(), key)});
  std::stable_sort(out.begin(), out.end(),
                   [](const ValuedTerm& a, const ValuedTerm& b) { return a.value < b.value; });
  return out;
}

RingElement truncate_body(const RingElement& x, const Character& phi, const ExtendedValue& cutoff) {
  if (cutoff.is_infinite()) return x;
  RingElement out(x.group());
  for (const auto& [key, c] : x.terms()) {
    if (ExtendedValue(evaluate(phi, *x.group(), key)) < cutoff) out.add_term(key, c);
  }
  return out;
}

// x * y keeping only products of value < bound; pairs at or above the bound
// are never formed.
void accumulate_product(RingElement& out, const std::vector<ValuedTerm>& x,
                        const std::vector<ValuedTerm>& y, const ExtendedValue& bound) {
  const Group& group = *out.group();
  for (const auto& a : x) {
    for (const auto& b : y) {
      RealValue v = a.value + b.value;
      if (bound.is_finite() && !(v < bound.value())) break;  // y is sorted by value
      out.add_term(group.multiply(*a.key, *b.key), a.coefficient * b.coefficient);
    }
  }
}

RingElement truncated_product(const RingElement& x, const RingElement& y, const Character& phi,
                              const ExtendedValue& bound) {
  RingElement out(x.group());
  accumulate_product(out, valued_terms(x, phi), valued_terms(y, phi), bound);
  return out;
}

}  // namespace

NovikovElement::NovikovElement(RingElement body, CharacterPtr character, ExtendedValue cutoff)
    : body_(truncate_body(body, *character, cutoff)),
      character_(std::move(character)),
      cutoff_(std::move(cutoff)) {}

NovikovElement NovikovElement::zero(GroupPtr group, CharacterPtr character, ExtendedValue cutoff) {
  return NovikovElement(RingElement::zero(std::move(group)), std::move(character), std::move(cutoff));
}

NovikovElement NovikovElement::one(GroupPtr group, CharacterPtr character, ExtendedValue cutoff) {
  return NovikovElement(RingElement::one(std::move(group)), std::move(character), std::move(cutoff));
}

ExtendedValue NovikovElement::valuation() const { return novikov::valuation(body_, *character_); }

NovikovElement NovikovElement::truncated(const ExtendedValue& cutoff) const {
  return NovikovElement(body_, character_, min(cutoff, cutoff_));
}

bool NovikovElement::congruent(const NovikovElement& other) const {
  ExtendedValue c = min(cutoff_, other.cutoff_);
  return truncate_body(body_, *character_, c) == truncate_body(other.body_, *character_, c);
}

NovikovElement add(const NovikovElement& x, const NovikovElement& y) {
  return NovikovElement(x.body_ + y.body_, x.character_, min(x.cutoff_, y.cutoff_));
}

NovikovElement subtract(const NovikovElement& x, const NovikovElement& y) {
  return NovikovElement(x.body_ - y.body_, x.character_, min(x.cutoff_, y.cutoff_));
}

NovikovElement multiply(const NovikovElement& x, const NovikovElement& y) {
  ExtendedValue c = min(min(x.cutoff_ + y.valuation(), y.cutoff_ + x.valuation()),
                        x.cutoff_ + y.cutoff_);
  return NovikovElement(truncated_product(x.body_, y.body_, *x.character_, c), x.character_, c);
}

NovikovElement NovikovElement::operator-() const {
  return NovikovElement(-body_, character_, cutoff_);
}

NovikovElement invert(const NovikovElement& x, std::optional<ExtendedValue> target) {
  if (x.is_zero()) throw StrictGapViolation("cannot invert an element that vanishes mod its cutoff");
  const Character& phi = x.character();
  const GroupPtr& group = x.group();
  auto terms = valued_terms(x.body(), phi);
  if (terms.size() > 1 && !(terms[0].value < terms[1].value)) {
    throw StrictGapViolation("minimal part of " + x.body().to_string() + " is not a single monomial");
  }
  const Word lead = *terms[0].key;
  const Rational lambda = terms[0].coefficient;
  const RealValue lead_value = terms[0].value;
  const Word lead_inverse = group->invert(lead);

  ExtendedValue cutoff = target.value_or(ExtendedValue::infinity());
  if (x.cutoff().is_finite()) cutoff = min(cutoff, ExtendedValue(x.cutoff().value() - 2 * lead_value));
  if (terms.size() == 1) {
    RingElement inverse = RingElement::monomial(group, lead_inverse, 1 / lambda);
    return NovikovElement(inverse, x.character_ptr(), cutoff);
  }
  if (cutoff.is_infinite()) {
    throw InconclusiveAtCutoff("the inverse of an exact non-monomial element needs a finite target");
  }

  // x = lambda g (1 - y), so x^-1 = (sum_k y^k) lambda^-1 g^-1.
  RingElement y = RingElement::one(group) - x.body().left_translate(lead_inverse) * (1 / lambda);
  ExtendedValue bound(cutoff.value() + lead_value);
  auto y_terms = valued_terms(y, phi);
  RingElement sum = RingElement::one(group);
  RingElement power = RingElement::one(group);
  while (true) {
    RingElement next(group);
    accumulate_product(next, valued_terms(power, phi), y_terms, bound);
    if (next.is_zero()) break;
    sum += next;
    power = std::move(next);
  }
  return NovikovElement(sum.right_translate(lead_inverse) * (1 / lambda), x.character_ptr(), cutoff);
}

NovikovMatrix::NovikovMatrix(GroupPtr group, CharacterPtr character, std::size_t rows,
                             std::size_t cols, ExtendedValue cutoff)
    : group_(group),
      character_(std::move(character)),
      rows_(rows),
      cols_(cols),
      bodies_(rows * cols, RingElement(group)),
      cutoff_(std::move(cutoff)) {}

NovikovMatrix NovikovMatrix::identity(GroupPtr group, CharacterPtr character, std::size_t n,
                                      ExtendedValue cutoff) {
  NovikovMatrix m(group, std::move(character), n, n, cutoff);
  for (std::size_t i = 0; i < n; ++i) {
    m.bodies_[i * n + i] = truncate_body(RingElement::one(group), *m.character_, cutoff);
  }
  return m;
}

NovikovMatrix NovikovMatrix::from_ring(const std::vector<std::vector<RingElement>>& entries,
                                       GroupPtr group, CharacterPtr character) {
  std::size_t rows = entries.size();
  std::size_t cols = rows == 0 ? 0 : entries[0].size();
  NovikovMatrix m(std::move(group), std::move(character), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw ShapeError("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m.bodies_[i * cols + j] = entries[i][j];
  }
  return m;
}

NovikovElement NovikovMatrix::at(std::size_t i, std::size_t j) const {
  return NovikovElement(body(i, j), character_, cutoff_);
}

void NovikovMatrix::set(std::size_t i, std::size_t j, const NovikovElement& value) {
  if (value.cutoff() < cutoff_) {
    cutoff_ = value.cutoff();
    for (auto& b : bodies_) b = truncate_body(b, *character_, cutoff_);
  }
  bodies_[i * cols_ + j] = truncate_body(value.body(), *character_, cutoff_);
}

ExtendedValue NovikovMatrix::valuation() const {
  ExtendedValue v;
  for (const auto& b : bodies_) v = min(v, novikov::valuation(b, *character_));
  return v;
}

NovikovMatrix NovikovMatrix::truncated(const ExtendedValue& cutoff) const {
  NovikovMatrix m = *this;
  m.cutoff_ = min(cutoff, cutoff_);
  for (auto& b : m.bodies_) b = truncate_body(b, *character_, m.cutoff_);
  return m;
}

bool NovikovMatrix::congruent(const NovikovMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  ExtendedValue c = min(cutoff_, other.cutoff_);
  for (std::size_t k = 0; k < bodies_.size(); ++k) {
    if (truncate_body(bodies_[k], *character_, c) != truncate_body(other.bodies_[k], *character_, c)) {
      return false;
    }
  }
  return true;
}

bool NovikovMatrix::is_identity_mod_cutoff() const {
  return rows_ == cols_ && congruent(identity(group_, character_, rows_, cutoff_));
}

NovikovMatrix multiply(const NovikovMatrix& a, const NovikovMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix shapes do not compose");
  ExtendedValue c = min(min(a.cutoff_ + b.valuation(), b.cutoff_ + a.valuation()),
                        a.cutoff_ + b.cutoff_);
  NovikovMatrix out(a.group_, a.character_, a.rows_, b.cols_, c);
  std::vector<std::vector<ValuedTerm>> bt(b.bodies_.size());
  for (std::size_t k = 0; k < b.bodies_.size(); ++k) bt[k] = valued_terms(b.bodies_[k], *a.character_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      auto at = valued_terms(a.body(i, k), *a.character_);
      if (at.empty()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        accumulate_product(out.bodies_[i * b.cols_ + j], at, bt[k * b.cols_ + j], c);
      }
    }
  }
  return out;
}

std::vector<std::vector<RingElement>> NovikovMatrix::bodies() const {
  std::vector<std::vector<RingElement>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(body(i, j));
  }
  return out;
}

namespace {

// Neumann series of (I - M)^-1 for M = I - p with every entry of M of
// strictly positive value.
NovikovMatrix neumann_inverse(const NovikovMatrix& p, const ExtendedValue& target) {
  const std::size_t n = p.rows();
  NovikovMatrix identity = NovikovMatrix::identity(p.group(), p.character_ptr(), n);
  NovikovMatrix m(p.group(), p.character_ptr(), n, n, p.cutoff());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RingElement e = (i == j ? RingElement::one(p.group()) : RingElement(p.group())) - p.body(i, j);
      m.set(i, j, NovikovElement(e, p.character_ptr(), p.cutoff()));
    }
  }
  ExtendedValue v = m.valuation();
  if (v.is_finite() && sign(v.value()) <= 0) {
    throw StrictGapViolation("matrix is not of the form I - M with M of positive value");
  }
  // (I - M)^-1 is known modulo the cutoff of p, since the inverse has value >= 0.
  ExtendedValue cutoff = min(target, p.cutoff());
  if (cutoff.is_infinite()) {
    if (m.valuation().is_infinite()) return identity;
    throw InconclusiveAtCutoff("Neumann inverse needs a finite target");
  }
  NovikovMatrix exact_m = NovikovMatrix::from_ring(m.bodies(), p.group(), p.character_ptr());
  NovikovMatrix sum = identity.truncated(cutoff);
  NovikovMatrix power = identity.truncated(cutoff);
  while (true) {
    NovikovMatrix next = multiply(power, exact_m).truncated(cutoff);
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) {
      for (std::size_t j = 0; j < n && zero; ++j) zero = next.body(i, j).is_zero();
    }
    if (zero) break;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        sum.set(i, j, NovikovElement(sum.body(i, j) + next.body(i, j), p.character_ptr(), cutoff));
      }
    }
    power = std::move(next);
  }
  return sum;
}

}  // namespace

NovikovMatrix invert_matrix(const NovikovMatrix& m, std::optional<ExtendedValue> target) {
  if (m.rows() != m.cols()) throw ShapeError("only square matrices can be inverted");
  ExtendedValue t = target.value_or(m.cutoff());
  try {
    return neumann_inverse(m, t);
  } catch (const StrictGapViolation&) {
  }
  if (t.is_infinite()) throw InconclusiveAtCutoff("matrix inversion needs a finite target");
  Elimination e = eliminate(m, t);
  if (!e.complete || e.rank() != m.rows()) {
    throw InconclusiveAtCutoff("elimination found no invertible pivot structure below the cutoff");
  }
  // Permute L's rows so that L m R is close to the identity.
  const std::size_t n = m.rows();
  NovikovMatrix L(m.group(), m.character_ptr(), n, n, e.L.cutoff());
  for (const auto& [row, col] : e.pivots) {
    for (std::size_t k = 0; k < n; ++k) L.set(col, k, e.L.at(row, k));
  }
  NovikovMatrix p = multiply(multiply(L, m), e.R);
  NovikovMatrix n_inverse = neumann_inverse(p, t);
  return multiply(multiply(e.R, n_inverse), L);
}

Elimination eliminate(const NovikovMatrix& m, const ExtendedValue& cutoff) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const GroupPtr& group = m.group();
  const CharacterPtr& phi_ptr = m.character_ptr();
  const Character& phi = *phi_ptr;
  const ExtendedValue c = min(cutoff, m.cutoff());
  CompatibleOrder order(*group, phi);

  std::vector<RingElement> w(rows * cols, RingElement(group));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) w[i * cols + j] = truncate_body(m.body(i, j), phi, c);
  }
  std::vector<RingElement> L(rows * rows, RingElement(group));
  for (std::size_t i = 0; i < rows; ++i) L[i * rows + i] = RingElement::one(group);
  std::vector<RingElement> R(cols * cols, RingElement(group));
  for (std::size_t i = 0; i < cols; ++i) R[i * cols + i] = RingElement::one(group);
  std::vector<RingElement> R_inv = R;

  Elimination result{{},
                     NovikovMatrix(group, phi_ptr, rows, rows),
                     NovikovMatrix(group, phi_ptr, cols, cols),
                     NovikovMatrix(group, phi_ptr, cols, cols),
                     {},
                     true,
                     c};
  std::vector<bool> row_done(rows, false), col_done(cols, false);
  // Errors already present are multiplied by u and by the clearing factors,
  // so the precision of the result drops by their negative valuations.
  auto lower_precision = [&](const RingElement& factor) {
    RealValue v = valuation(factor, phi).value();
    if (result.cutoff.is_finite() && sign(v) < 0) result.cutoff = ExtendedValue(result.cutoff.value() + v);
  };

  while (true) {
    struct Candidate {
      std::size_t i, j;
      RealValue value;
      Word lead;
      RealValue gap;
    };
    std::optional<Candidate> best;
    bool block_zero = true;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_done[j]) continue;
        const RingElement& entry = w[i * cols + j];
        if (entry.is_zero()) continue;
        block_zero = false;
        auto terms = valued_terms(entry, phi);
        if (terms.size() > 1 && !(terms[0].value < terms[1].value)) continue;
        RealValue gap = terms.size() > 1 ? terms[1].value - terms[0].value : RealValue(0);
        Candidate cand{i, j, terms[0].value, *terms[0].key, gap};
        if (!best || cand.value < best->value ||
            (cand.value == best->value && order.compare(cand.lead, best->lead) < 0)) {
          best = std::move(cand);
        }
      }
    }
    if (!best) {
      result.complete = block_zero;
      break;
    }
    const std::size_t pi = best->i;
    const std::size_t pj = best->j;
    result.pivots.emplace_back(pi, pj);
    result.pivot_gaps.push_back(best->gap);
    row_done[pi] = true;
    col_done[pj] = true;

    // Scale the pivot row by an inverse accurate enough that the pivot
    // becomes 1 up to terms of value >= c.
    NovikovElement pivot(w[pi * cols + pj], phi_ptr);
    ExtendedValue inv_target = c.is_finite() ? ExtendedValue(c.value() - best->value) : c;
    RingElement u = invert(pivot, inv_target).body();
    for (std::size_t k = 0; k < cols; ++k) {
      w[pi * cols + k] = truncated_product(u, w[pi * cols + k], phi, c);
    }
    for (std::size_t k = 0; k < rows; ++k) L[pi * rows + k] = u * L[pi * rows + k];
    lower_precision(u);
    RingElement row_factor(group), col_factor(group);

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pi) continue;
      RingElement f = w[r * cols + pj];
      if (f.is_zero()) continue;
      if (row_factor.is_zero() || valuation(f, phi) < valuation(row_factor, phi)) row_factor = f;
      for (std::size_t k = 0; k < cols; ++k) {
        w[r * cols + k] -= truncated_product(f, w[pi * cols + k], phi, c);
      }
      for (std::size_t k = 0; k < rows; ++k) L[r * rows + k] -= f * L[pi * rows + k];
    }
    for (std::size_t col = 0; col < cols; ++col) {
      if (col == pj) continue;
      RingElement f = w[pi * cols + col];
      if (f.is_zero()) continue;
      if (col_factor.is_zero() || valuation(f, phi) < valuation(col_factor, phi)) col_factor = f;
      for (std::size_t r = 0; r < rows; ++r) {
        w[r * cols + col] -= truncated_product(w[r * cols + pj], f, phi, c);
      }
      for (std::size_t r = 0; r < cols; ++r) R[r * cols + col] -= R[r * cols + pj] * f;
      for (std::size_t k = 0; k < cols; ++k) R_inv[pj * cols + k] += f * R_inv[col * cols + k];
    }
    // Row clearing and column clearing each contribute their worst factor.
    if (!row_factor.is_zero()) lower_precision(row_factor);
    if (!col_factor.is_zero()) lower_precision(col_factor);
  }

  auto fill = [](NovikovMatrix& target, const std::vector<RingElement>& bodies, std::size_t n,
                 const CharacterPtr& phi_ptr) {
    for (std::size_t i = 0; i < target.rows(); ++i) {
      for (std::size_t j = 0; j < n; ++j) target.set(i, j, NovikovElement(bodies[i * n + j], phi_ptr));
    }
  };
  fill(result.L, L, rows, phi_ptr);
  fill(result.R, R, cols, phi_ptr);
  fill(result.R_inverse, R_inv, cols, phi_ptr);
  return result;
}

}  // namespace novikov
