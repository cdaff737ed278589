#include "novikov/real_value.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace novikov {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Exact arithmetic in Q(sqrt p_1, ..., sqrt p_k); keys are square-free.
using FieldElement = std::map<std::uint64_t, Rational>;

void add_to(FieldElement& x, std::uint64_t radicand, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = x.try_emplace(radicand, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) x.erase(it);
  }
}

FieldElement multiply(const FieldElement& x, const FieldElement& y) {
  FieldElement out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      std::uint64_t g = std::gcd(a, b);
      add_to(out, (a / g) * (b / g), ca * cb * Rational(static_cast<unsigned long>(g)));
    }
  }
  return out;
}

std::uint64_t largest_prime_factor(std::uint64_t n) {
  std::uint64_t best = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      best = d;
      n /= d;
    }
  }
  return n > 1 ? std::max(best, n) : best;
}

int rational_sign(const Rational& q) { return sgn(q); }

int exact_sign(const FieldElement& x) {
  if (x.empty()) return 0;
  std::uint64_t p = 1;
  for (const auto& [radicand, c] : x) p = std::max(p, largest_prime_factor(radicand));
  if (p == 1) return rational_sign(x.begin()->second);
  // x = A + B sqrt(p) with A, B free of sqrt(p).
  FieldElement a, b;
  for (const auto& [radicand, c] : x) {
    if (radicand % p == 0) add_to(b, radicand / p, c);
    else add_to(a, radicand, c);
  }
  int sa = exact_sign(a);
  int sb = exact_sign(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  FieldElement diff = multiply(a, a);
  FieldElement bb = multiply(b, b);
  for (const auto& [radicand, c] : bb) add_to(diff, radicand, -c * Rational(static_cast<unsigned long>(p)));
  return sa * exact_sign(diff);
}

}  // namespace

RealValue::RealValue(const Rational& rational) {
  if (rational != 0) {
    terms_.emplace_back(1, rational);
    terms_.back().second.canonicalize();
  }
}

RealValue RealValue::sqrt_term(std::uint32_t radicand, const Rational& coefficient) {
  if (radicand != 1 && !is_prime(radicand)) {
    throw std::invalid_argument("radicand must be 1 or a prime, got " + std::to_string(radicand));
  }
  RealValue v;
  if (coefficient != 0) {
    v.terms_.emplace_back(radicand, coefficient);
    v.terms_.back().second.canonicalize();
  }
  return v;
}

Rational RealValue::coefficient(std::uint32_t radicand) const {
  for (const auto& [r, c] : terms_) {
    if (r == radicand) return c;
  }
  return 0;
}

bool RealValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
}

RealValue& RealValue::operator+=(const RealValue& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      merged.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      merged.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (c != 0) merged.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

RealValue& RealValue::operator-=(const RealValue& other) { return *this += -other; }

RealValue& RealValue::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& term : terms_) term.second *= scalar;
  }
  return *this;
}

RealValue RealValue::operator-() const {
  RealValue v = *this;
  for (auto& term : v.terms_) term.second = -term.second;
  return v;
}

double RealValue::approx() const {
  double sum = 0;
  for (const auto& [r, c] : terms_) sum += c.get_d() * std::sqrt(static_cast<double>(r));
  return sum;
}

std::string RealValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [r, c] : terms_) {
    Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (r == 1) {
      out += novikov::to_string(magnitude);
    } else {
      if (magnitude != 1) out += novikov::to_string(magnitude) + "*";
      out += "sqrt(" + std::to_string(r) + ")";
    }
  }
  return out;
}

int sign(const RealValue& value) {
  if (value.is_zero()) return 0;
  if (value.is_rational()) return sgn(value.terms()[0].second);
  double sum = 0;
  double magnitude = 0;
  bool finite = true;
  for (const auto& [r, c] : value.terms()) {
    double t = c.get_d() * std::sqrt(static_cast<double>(r));
    finite = finite && std::isfinite(t) && (c == 0 || t != 0);
    sum += t;
    magnitude += std::fabs(t);
  }
  if (finite && std::fabs(sum) > magnitude * 1e-12) return sum > 0 ? 1 : -1;
  FieldElement x;
  for (const auto& [r, c] : value.terms()) add_to(x, r, c);
  return exact_sign(x);
}

RealValue abs(const RealValue& value) { return sign(value) < 0 ? -value : value; }

std::strong_ordering operator<=>(const RealValue& a, const RealValue& b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.coefficient(1), b.coefficient(1));
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  // Floating-point filter before forming the exact difference.
  double da = 0, db = 0, magnitude = 0;
  bool underflow = false;
  auto accumulate = [&](const RealValue& v, double& sum) {
    for (const auto& [r, c] : v.terms()) {
      double t = c.get_d() * std::sqrt(static_cast<double>(r));
      underflow = underflow || t == 0;
      sum += t;
      magnitude += std::fabs(t);
    }
  };
  accumulate(a, da);
  accumulate(b, db);
  if (!underflow && std::isfinite(magnitude) && std::fabs(da - db) > magnitude * 1e-12) {
    return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  int s = sign(a - b);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.value() <=> b.value();
}

ExtendedValue min(const ExtendedValue& a, const ExtendedValue& b) { return b < a ? b : a; }
ExtendedValue max(const ExtendedValue& a, const ExtendedValue& b) { return a < b ? b : a; }

}  // namespace novikov
