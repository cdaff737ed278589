#pragma once

#include <cstddef>
#include <vector>

#include "novikov/group.hpp"
#include "novikov/quotient.hpp"

namespace novikov {

/// Reidemeister-Schreier presentation of H = ker(beta).
///
/// Schreier generators gamma(q, x) = s(q) x s(q x)^-1 are numbered
/// q * n + x before reduction; generators killed by a one-letter relator are
/// then removed. `inclusion[j]` is the word over the ambient generators
/// representing the j-th surviving generator.
struct SubgroupPresentation {
  GroupPresentation presentation;
  std::vector<Word> inclusion;
  std::vector<long> reduced_index;  // Schreier index -> surviving index or -1
  std::size_t schreier_generator_count = 0;
  std::size_t schreier_relator_count = 0;
};

SubgroupPresentation subgroup_presentation(const Group& group, const FiniteQuotient& quotient,
                                           std::size_t max_order = kDefaultMaxQuotientOrder);

/// H as a Group whose keys are the ambient group's keys.
GroupPtr make_subgroup(GroupPtr ambient, const FiniteQuotient& quotient,
                       std::size_t max_order = kDefaultMaxQuotientOrder);

}  // namespace novikov
