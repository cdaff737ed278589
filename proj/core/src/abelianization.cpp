#include "novikov/abelianization.hpp"

#include <stdexcept>

#include "novikov/error.hpp"

namespace novikov {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::int64_t narrow(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("abelianization entry exceeds 64 bits");
  return value.get_si();
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& matrix) {
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows == 0 ? 0 : matrix[0].size();
  SmithForm f;
  f.D = matrix;
  f.U = identity(rows);
  f.V = identity(cols);
  f.V_inverse = identity(cols);
  auto& D = f.D;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(D[a], D[b]);
    std::swap(f.U[a], f.U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : D) std::swap(row[a], row[b]);
    for (auto& row : f.V) std::swap(row[a], row[b]);
    std::swap(f.V_inverse[a], f.V_inverse[b]);
  };
  // row_i -= q * row_t
  auto row_op = [&](std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t j = 0; j < cols; ++j) D[i][j] -= q * D[t][j];
    for (std::size_t j = 0; j < rows; ++j) f.U[i][j] -= q * f.U[t][j];
  };
  // col_j -= q * col_t
  auto col_op = [&](std::size_t j, std::size_t t, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i) D[i][j] -= q * D[i][t];
    for (std::size_t i = 0; i < cols; ++i) f.V[i][j] -= q * f.V[i][t];
    for (std::size_t i = 0; i < cols; ++i) f.V_inverse[t][i] += q * f.V_inverse[j][i];
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (D[i][j] != 0 && (pi == rows || abs(D[i][j]) < abs(D[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
        row_op(i, t, q);
        if (D[i][t] != 0) {
          clean = false;
          if (abs(D[i][t]) < abs(D[t][t])) swap_rows(t, i);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
        col_op(j, t, q);
        if (D[t][j] != 0) {
          clean = false;
          if (abs(D[t][j]) < abs(D[t][t])) swap_cols(t, j);
        }
      }
      if (!clean) continue;
      // Divisibility chain: fold an offending row into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D[i][j] % D[t][t] != 0) {
            row_op(t, i, Integer(-1));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (D[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) D[t][j] = -D[t][j];
      for (std::size_t j = 0; j < rows; ++j) f.U[t][j] = -f.U[t][j];
    }
    ++t;
  }
  f.rank = t;
  return f;
}

AbelianVector Abelianization::project(const std::vector<std::int64_t>& exponents) const {
  AbelianVector out(rank, 0);
  for (std::size_t i = 0; i < rank; ++i) {
    const auto& row = projection[i];
    if (row.size() != exponents.size()) throw ShapeError("exponent vector has wrong length");
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < row.size(); ++j) sum += row[j] * exponents[j];
    out[i] = sum;
  }
  return out;
}

IntMatrix relator_matrix(const GroupPresentation& presentation) {
  IntMatrix m;
  for (const Word& relator : presentation.relators) {
    auto sums = exponent_sums(relator, presentation.generator_count());
    m.emplace_back(sums.begin(), sums.end());
  }
  return m;
}

Abelianization free_abelianization(const GroupPresentation& presentation) {
  const std::size_t n = presentation.generator_count();
  IntMatrix m = relator_matrix(presentation);
  Abelianization ab;
  std::size_t rank = 0;
  IntMatrix V = identity(n);
  IntMatrix V_inverse = identity(n);
  if (!m.empty() && n > 0) {
    SmithForm f = smith_normal_form(m);
    rank = f.rank;
    V = std::move(f.V);
    V_inverse = std::move(f.V_inverse);
    for (std::size_t i = 0; i < rank; ++i) {
      if (f.D[i][i] > 1) ab.torsion.push_back(f.D[i][i]);
    }
  }
  ab.rank = n - rank;
  for (std::size_t i = rank; i < n; ++i) {
    std::vector<std::int64_t> row(n), lift(n);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = narrow(V[j][i]);
      lift[j] = narrow(V_inverse[i][j]);
    }
    ab.projection.push_back(std::move(row));
    ab.lifts.push_back(std::move(lift));
  }
  return ab;
}

}  // namespace novikov
