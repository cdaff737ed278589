#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "novikov/chain_complex.hpp"
#include "novikov/character.hpp"

namespace novikov {

enum class DirectionStatus { Certified, RefutedByRank, InconclusiveAtCutoff };
enum class Verdict { Fibred, NotFibredByRank, Inconclusive };

const char* to_string(DirectionStatus status);
const char* to_string(Verdict verdict);

/// Finite witness that H_1(G; Nov(G, phi)) = 0.
///
/// With A the matrix of d2 in cycle coordinates (d2 without the pivot
/// column), the certificate asserts L * A * R = I - E where every entry of E
/// has strictly positive phi-value and R * R_inverse = I. Then I - E is
/// invertible by a Neumann series, so A has a left inverse over the Novikov
/// ring and every 1-cycle is a boundary.
struct Certificate {
  Character character;
  RealValue cutoff;
  std::uint32_t pivot = 0;
  int pivot_sign = 1;
  std::vector<std::uint32_t> coordinates;
  std::vector<std::vector<RingElement>> L;          // k x relators
  std::vector<std::vector<RingElement>> R;          // k x k
  std::vector<std::vector<RingElement>> R_inverse;  // k x k
  std::string cycle_basis_digest;
  /// Minimal phi-value of E (+inf when E = 0).
  ExtendedValue margin;
  /// Every psi with |psi(e_i) - phi(e_i)| < radius on the abelianisation
  /// basis is certified by the same data.
  ExtendedValue radius;
};

struct CertificationResult {
  DirectionStatus status = DirectionStatus::InconclusiveAtCutoff;
  std::optional<Certificate> certificate;
  RealValue cutoff;
  std::size_t cycle_count = 0;
  /// Rank of the abelianised cycle-coordinate matrix over Q(Z^r).
  std::size_t abelian_rank = 0;
  std::size_t attempts = 1;
  std::string note;
};

/// 8 * max |phi(x_j)| over generators with phi(x_j) != 0.
RealValue default_cutoff(const ChainComplex& complex, const Character& character);

/// Certification at a fixed cutoff. Eliminations truncated at
/// max|phi(x_j)| * 2^i below the cutoff are tried before the cutoff itself;
/// the certificate records the truncation that succeeded. Throws
/// ZeroCharacter, or std::invalid_argument for a non-positive cutoff.
CertificationResult sikorav_certify(const ChainComplex& complex, const Character& character,
                                    const RealValue& cutoff);

/// Re-checks a certificate by plain group-ring multiplication, sharing no
/// state with the elimination that produced it.
struct VerificationReport {
  bool ok = false;
  ExtendedValue margin;
  std::string failure;
};

VerificationReport verify_certificate(const Certificate& certificate, const ChainComplex& complex);

/// Cutoff override plus the number of doubling retries on an inconclusive
/// outcome.
struct CutoffPolicy {
  std::optional<RealValue> cutoff;
  std::size_t retries = 2;
};

CertificationResult certify(const ChainComplex& complex, const Character& character,
                            const CutoffPolicy& policy = {});

struct FibringVerdict {
  Character character;
  CertificationResult plus;
  CertificationResult minus;
  Verdict combined = Verdict::Inconclusive;
  /// The input was rescaled to a primitive integral character.
  bool normalized = false;
};

/// Certifies phi and -phi. Fibred iff both are Certified; NotFibredByRank iff
/// either is RefutedByRank. A rational character that is not primitive
/// integral is rescaled (and flagged); an irrational one is rejected with
/// std::invalid_argument.
FibringVerdict fibred_check(const ChainComplex& complex, const Character& character,
                            const CutoffPolicy& policy = {});

/// Certifies phi and -phi as given, for any character; combined as in
/// fibred_check. For an irrational phi, Fibred means both directions lie in
/// Sigma(G).
FibringVerdict sigma_check(const ChainComplex& complex, const Character& character,
                           const CutoffPolicy& policy = {});

/// Primitive integral rescaling of a rational character.
Character primitive_normalization(const Character& character);

struct ScanEntry {
  std::size_t index = 0;
  FibringVerdict verdict;
  std::optional<std::string> error;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
  /// Indices of samples certified in both directions.
  std::vector<std::size_t> fibred;
  /// Indices of samples certified in exactly one direction.
  std::vector<std::size_t> one_sided;
};

/// Runs fibred_check on every sample; failures are recorded per sample.
/// Results do not depend on `threads`.
ScanReport character_scan(const ChainComplex& complex, const std::vector<Character>& samples,
                          const CutoffPolicy& policy = {}, std::size_t threads = 1);

/// All primitive vectors of Z^rank with max-norm <= bound, ordered by norm
/// then lexicographically.
std::vector<Character> primitive_rays(std::size_t rank, std::int64_t bound);

/// `count` primitive rays drawn deterministically from `seed`.
std::vector<Character> sample_primitive_rays(std::size_t rank, std::size_t count,
                                             std::uint64_t seed, std::int64_t bound = 4);

/// beta_1^(2) of a free abelian group presented as a RAAG on a complete
/// graph: n - rank(d2) - rank(d1) over the field of fractions of Q[Z^n].
/// Throws std::invalid_argument for other input.
Rational betti1_abelian(const GroupPtr& group);

}  // namespace novikov
