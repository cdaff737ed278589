#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "novikov/presentation.hpp"
#include "novikov/rational.hpp"

namespace novikov {

using IntMatrix = std::vector<std::vector<Integer>>;
using AbelianVector = std::vector<std::int64_t>;

/// U * M * V = D with D diagonal, the nonzero diagonal entries first and
/// forming a divisibility chain. V_inverse is tracked alongside V.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& matrix);

/// Free part of H_1. `projection` is rank x generators and kills every
/// relator's exponent vector; `lifts[i]` is an exponent vector over the
/// generators whose projection is the i-th basis vector.
struct Abelianization {
  std::size_t rank = 0;
  std::vector<std::vector<std::int64_t>> projection;
  std::vector<Integer> torsion;
  std::vector<std::vector<std::int64_t>> lifts;

  AbelianVector project(const std::vector<std::int64_t>& exponents) const;
};

IntMatrix relator_matrix(const GroupPresentation& presentation);

Abelianization free_abelianization(const GroupPresentation& presentation);

}  // namespace novikov
