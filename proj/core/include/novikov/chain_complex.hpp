#pragma once

#include <cstddef>
#include <vector>

#include "novikov/group_ring.hpp"
#include "novikov/novikov.hpp"

namespace novikov {

/// Fox derivative of a word over the generators with respect to generator
/// `j`, as an element of QG.
RingElement fox_derivative(const Word& word, std::uint32_t j, const GroupPtr& group);

/// Cellular chain complex C_2 -> C_1 -> C_0 of the presentation 2-complex,
/// with left module conventions: a chain is a row vector and the
/// differentials act by right multiplication.
struct ChainComplex {
  GroupPtr group;
  std::vector<std::vector<RingElement>> d2;  // relators x generators
  std::vector<RingElement> d1;               // x_j - 1

  std::size_t generator_count() const { return d1.size(); }
  std::size_t relator_count() const { return d2.size(); }
};

/// Throws std::logic_error if d1 o d2 != 0.
ChainComplex build_complex(const GroupPtr& group);

/// d1 o d2, row by row; zero for a valid complex.
std::vector<RingElement> boundary_composite(const ChainComplex& complex);

/// Novikov 1-cycles e_t' = e_t - (x_t - 1)(x_s - 1)^-1 e_s for t != s.
struct CycleBasis {
  std::uint32_t pivot = 0;
  int pivot_sign = 1;  // sign of phi(x_pivot); the monomial s is x_pivot^sign
  std::vector<std::uint32_t> coordinates;            // generators t != s, in order
  std::vector<std::vector<NovikovElement>> vectors;  // one length-n row per t
};

/// The generator maximising |phi| among those with phi != 0 (first wins).
/// Throws ZeroCharacter if phi vanishes on every generator.
std::uint32_t choose_pivot(const ChainComplex& complex, const Character& character);

CycleBasis cycle_basis(const ChainComplex& complex, const CharacterPtr& character,
                       const ExtendedValue& cutoff);

/// d1 applied to a Novikov 1-chain.
NovikovElement boundary_of_chain(const ChainComplex& complex,
                                 const std::vector<NovikovElement>& chain);

}  // namespace novikov
