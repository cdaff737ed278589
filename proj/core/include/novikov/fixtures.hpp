#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "novikov/character.hpp"
#include "novikov/group_ring.hpp"
#include "novikov/quotient.hpp"
#include "novikov/twisted.hpp"

/// Deterministic random inputs for property suites: small finite groups,
/// epimorphisms onto them, sections, words, ring elements and characters.
namespace novikov::fixtures {

using Rng = std::mt19937_64;
using Permutation = std::vector<std::size_t>;

struct FiniteGroup {
  std::string name;
  FiniteQuotient::Table table;
};

/// Closure of the given permutations; element 0 is the identity.
FiniteGroup permutation_group(std::string name, const std::vector<Permutation>& generators);

FiniteGroup cyclic_group(std::size_t n);
/// Z/2, Z/3, Z/4, Z/2^2, Z/5, Z/6, S3, Z/7, Z/8, D4, Q8, Z/2xZ/4, Z/9, Z/3^2,
/// Z/10, D5, Z/12, A4, D6 restricted to orders <= max_order.
std::vector<FiniteGroup> small_groups(std::size_t max_order);

/// Random generator images respecting the relators and generating Q;
/// nullopt after `attempts` failures.
std::optional<std::vector<std::size_t>> random_epimorphism(const Group& group,
                                                           const FiniteGroup& target, Rng& rng,
                                                           std::size_t attempts = 200);

/// Section with s(1) = 1 and random (not necessarily minimal) preimages.
std::vector<Word> random_section(const Group& group, const FiniteGroup& target,
                                 const std::vector<std::size_t>& images, Rng& rng,
                                 std::size_t padding = 4);

Word random_word(std::size_t generator_count, std::size_t max_length, Rng& rng);

/// Random element of QG with up to `terms` terms on words of length <= `length`.
RingElement random_ring_element(const GroupPtr& group, std::size_t terms, std::size_t length,
                                Rng& rng, int coefficient_range = 3);

/// Random element of QH: products of random Schreier-generator images.
RingElement random_subgroup_element(const GroupPtr& subgroup, std::size_t terms,
                                    std::size_t length, Rng& rng, int coefficient_range = 3);

/// Random character on Z^rank with small rational coefficients; when
/// `irrational` is set the columns also carry sqrt(2), sqrt(3), sqrt(5)
/// parts and are checked to be injective.
Character random_character(std::size_t rank, Rng& rng, bool irrational);

struct QuotientFixture {
  GroupPtr group;
  FiniteGroup target;
  FiniteQuotient quotient;
};

/// A random epimorphism with random section from one of the given groups
/// onto a small group of order in [2, max_order].
std::optional<QuotientFixture> random_quotient(const std::vector<GroupPtr>& groups,
                                               std::size_t max_order, Rng& rng);

/// F2, Z^2, Z^3, F2 x Z and the path graph RAAG on four vertices.
std::vector<GroupPtr> raag_catalog();

}  // namespace novikov::fixtures
