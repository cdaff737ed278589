#include "novikov/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace novikov {

LaurentPolynomial LaurentPolynomial::monomial(AbelianVector exponent, const Rational& coefficient) {
  LaurentPolynomial p(exponent.size());
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t variables, const Rational& value) {
  return monomial(AbelianVector(variables, 0), value);
}

void LaurentPolynomial::add_term(const AbelianVector& exponent, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

namespace {

AbelianVector add(const AbelianVector& a, const AbelianVector& b) {
  AbelianVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

AbelianVector subtract(const AbelianVector& a, const AbelianVector& b) {
  AbelianVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out(std::max(a.variables_, b.variables_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add(ea, eb), ca * cb);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  LaurentPolynomial quotient(variables_);
  if (is_zero()) return quotient;
  const std::size_t r = terms_.begin()->first.size();
  // An exact quotient's exponents lie in the box spanned by the differences
  // of coordinate-wise extremes.
  auto extremes = [r](const Terms& terms) {
    AbelianVector lo = terms.begin()->first, hi = lo;
    for (const auto& [e, c] : terms) {
      for (std::size_t i = 0; i < r; ++i) {
        lo[i] = std::min(lo[i], e[i]);
        hi[i] = std::max(hi[i], e[i]);
      }
    }
    return std::pair{lo, hi};
  };
  auto [xlo, xhi] = extremes(terms_);
  auto [dlo, dhi] = extremes(divisor.terms_);
  AbelianVector lo = subtract(xlo, dlo);
  AbelianVector hi = subtract(xhi, dhi);
  const auto& [dlead, dcoeff] = *divisor.terms_.rbegin();
  LaurentPolynomial remainder = *this;
  while (!remainder.is_zero()) {
    const auto& [rlead, rcoeff] = *remainder.terms_.rbegin();
    AbelianVector e = subtract(rlead, dlead);
    for (std::size_t i = 0; i < r; ++i) {
      if (e[i] < lo[i] || e[i] > hi[i]) throw std::domain_error("division is not exact");
    }
    LaurentPolynomial step = monomial(e, rcoeff / dcoeff);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += novikov::to_string(magnitude);
    } else {
      if (magnitude != 1) out += novikov::to_string(magnitude) + "*";
      out += mono;
    }
  }
  return out;
}

LaurentPolynomial abelianize(const RingElement& x) {
  const Group& group = *x.group();
  LaurentPolynomial p(group.abelianization().rank);
  for (const auto& [key, c] : x.terms()) p.add_term(group.abelian_image(key), c);
  return p;
}

std::size_t fraction_field_rank(LaurentMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t variables = 0;
  for (const auto& row : m) {
    for (const auto& p : row) variables = std::max(variables, p.variables());
  }
  LaurentPolynomial previous = LaurentPolynomial::constant(variables, 1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        LaurentPolynomial numerator = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        m[i][j] = numerator.divide_exact(previous);
      }
      m[i][c] = LaurentPolynomial(variables);
    }
    previous = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace novikov
