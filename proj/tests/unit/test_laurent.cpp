#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "novikov/laurent.hpp"

using namespace novikov;

namespace {

LaurentPolynomial mono(AbelianVector e, long c = 1) { return LaurentPolynomial::monomial(std::move(e), c); }

// Rank of the matrix evaluated at a point, by rational Gaussian elimination.
std::size_t rank_at(const LaurentMatrix& m, const std::vector<Rational>& point) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (const auto& p : row) {
      Rational sum = 0;
      for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
          Rational x = point[i];
          long k = e[i];
          if (k < 0) {
            x = 1 / x;
            k = -k;
          }
          for (long j = 0; j < k; ++j) term *= x;
        }
        sum += term;
      }
      r.push_back(sum);
    }
    a.push_back(r);
  }
  std::size_t rank = 0;
  std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      Rational f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("products and exact division") {
  LaurentPolynomial x = mono({1, 0});
  LaurentPolynomial one = LaurentPolynomial::constant(2, 1);
  LaurentPolynomial p = (one - x) * (one + x + x * x);
  CHECK(p == one - x * x * x);
  CHECK(p.divide_exact(one - x) == one + x + x * x);
  CHECK_THROWS_AS(p.divide_exact(one + x), std::domain_error);
  LaurentPolynomial y = mono({0, -2}, 3);
  CHECK((p * y).divide_exact(y) == p);
}

TEST_CASE("fraction field rank of small matrices") {
  LaurentPolynomial one = LaurentPolynomial::constant(2, 1);
  LaurentPolynomial a = mono({1, 0}), b = mono({0, 1});
  CHECK(fraction_field_rank({{one - b, a - one}}) == 1);
  CHECK(fraction_field_rank({{one - a, one - b}, {(one - a) * (one + a), (one - b) * (one + a)}}) == 1);
  CHECK(fraction_field_rank({{one - a, one - b}, {one, one}}) == 2);
  CHECK(fraction_field_rank({}) == 0);
  CHECK(fraction_field_rank({{LaurentPolynomial(2), LaurentPolynomial(2)}}) == 0);
}

TEST_CASE("fraction field rank matches evaluation at random points") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    LaurentMatrix m(rows);
    for (auto& row : m) {
      for (std::size_t j = 0; j < cols; ++j) {
        LaurentPolynomial p(2);
        std::size_t terms = rng() % 3;
        for (std::size_t k = 0; k < terms; ++k) {
          p.add_term({static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2},
                     static_cast<long>(rng() % 7) - 3);
        }
        row.push_back(p);
      }
    }
    // Make some rows dependent.
    if (rows >= 2 && rng() % 2 == 0) {
      LaurentPolynomial f = mono({1, -1}, 2) + LaurentPolynomial::constant(2, 1);
      for (std::size_t j = 0; j < cols; ++j) m[1][j] = m[0][j] * f;
    }
    std::size_t generic = 0;
    for (int p = 0; p < 4; ++p) {
      std::vector<Rational> point = {Rational(static_cast<long>(rng() % 97) + 2, 3),
                                     Rational(static_cast<long>(rng() % 89) + 2, 5)};
      for (auto& x : point) x.canonicalize();
      generic = std::max(generic, rank_at(m, point));
    }
    CHECK(fraction_field_rank(m) == generic);
  }
}

TEST_CASE("abelianising group ring elements") {
  GroupPtr g = test::group(test::kF2);
  RingElement x = test::element(g, {{"a b a^-1", 2}, {"b", -2}, {"a", 1}});
  LaurentPolynomial p = abelianize(x);
  CHECK(p == mono({1, 0}));
}
