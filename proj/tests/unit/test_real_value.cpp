#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "novikov/real_value.hpp"

using namespace novikov;

namespace {

RealValue root(std::uint32_t p, long c = 1) { return RealValue::sqrt_term(p, c); }

// 512-bit floating evaluation, independent of the exact sign procedure.
int float_sign(const RealValue& v) {
  mpf_class sum(0, 512);
  for (const auto& [radicand, c] : v.terms()) {
    mpf_class s(radicand, 512);
    s = sqrt(s);
    mpf_class coefficient(c, 512);
    sum += coefficient * s;
  }
  return sgn(sum);
}

}  // namespace

TEST_CASE("signs of small surds") {
  CHECK(sign(RealValue()) == 0);
  CHECK(sign(RealValue(3) - root(2, 2)) == 1);
  CHECK(sign(RealValue(1) - root(2)) == -1);
  CHECK(sign(root(2) + root(3) - root(5) - RealValue(Rational(1, 2))) == float_sign(root(2) + root(3) - root(5) - RealValue(Rational(1, 2))));
}

TEST_CASE("near-cancelling values need the exact path") {
  // 99/70 approximates sqrt(2) to within 1e-4; 665857/470832 to within 2e-12.
  RealValue close = root(2) - RealValue(Rational(665857, 470832));
  CHECK(sign(close) == -1);
  RealValue closer = RealValue(Rational("1572584048032/1111984844349")) - root(2);
  CHECK(sign(closer) == float_sign(closer));
}

TEST_CASE("exact sign agrees with high-precision evaluation") {
  std::mt19937_64 rng(23);
  const std::uint32_t primes[] = {1, 2, 3, 5, 7};
  for (int i = 0; i < 2000; ++i) {
    RealValue v;
    for (auto p : primes) {
      if (rng() % 3 == 0) continue;
      Rational c(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 6));
      c.canonicalize();
      v += p == 1 ? RealValue(c) : root(p) * c;
    }
    CHECK(sign(v) == float_sign(v));
    CHECK(sign(-v) == -sign(v));
  }
}

TEST_CASE("arithmetic and ordering") {
  RealValue a = RealValue(1) + root(2);
  RealValue b = root(2) * Rational(3) - RealValue(2);
  CHECK((a + b).to_string() == "-1 + 4*sqrt(2)");
  CHECK((a - a).is_zero());
  CHECK(b < a);
  CHECK(abs(RealValue(-3)) == RealValue(3));
  CHECK(RealValue(Rational(1, 2)).approx() == doctest::Approx(0.5));
}

TEST_CASE("extended values") {
  ExtendedValue inf;
  CHECK(inf.is_infinite());
  CHECK(ExtendedValue(5) < inf);
  CHECK((inf + ExtendedValue(3)).is_infinite());
  CHECK(min(inf, ExtendedValue(2)) == ExtendedValue(2));
  CHECK(max(ExtendedValue(-1), ExtendedValue(root(2))) == ExtendedValue(root(2)));
}

TEST_CASE("only primes are radicands") {
  CHECK_THROWS_AS(RealValue::sqrt_term(4), std::invalid_argument);
}
