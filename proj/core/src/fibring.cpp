#include "novikov/fibring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "novikov/digest.hpp"
#include "novikov/error.hpp"
#include "novikov/laurent.hpp"

namespace novikov {

const char* to_string(DirectionStatus status) {
  switch (status) {
    case DirectionStatus::Certified: return "Certified";
    case DirectionStatus::RefutedByRank: return "RefutedByRank";
    case DirectionStatus::InconclusiveAtCutoff: return "InconclusiveAtCutoff";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Fibred: return "Fibred";
    case Verdict::NotFibredByRank: return "NotFibredByRank";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

using RingMatrix = std::vector<std::vector<RingElement>>;

RingMatrix ring_multiply(const RingMatrix& a, const RingMatrix& b, const GroupPtr& group) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? (rows == 0 ? 0 : 0) : b[0].size();
  RingMatrix out(rows, std::vector<RingElement>(cols, RingElement(group)));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw ShapeError("matrix shapes do not compose");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

RingMatrix cycle_matrix(const ChainComplex& complex, std::uint32_t pivot) {
  RingMatrix a;
  for (const auto& row : complex.d2) {
    std::vector<RingElement> r;
    for (std::uint32_t j = 0; j < row.size(); ++j) {
      if (j != pivot) r.push_back(row[j]);
    }
    a.push_back(std::move(r));
  }
  return a;
}

std::int64_t l1_norm(const AbelianVector& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x < 0 ? -x : x;
  return s;
}

struct Residual {
  bool ok = true;
  std::string failure;
  ExtendedValue margin;
  std::int64_t max_norm = 0;
};

// E = I - P must have every support element of strictly positive value.
Residual check_residual(const RingMatrix& p, const Character& phi, const Group& group) {
  Residual r;
  const std::size_t k = p.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      RingElement e = -p[i][j];
      if (i == j) e.add_term({}, 1);
      for (const auto& [key, c] : e.terms()) {
        AbelianVector image = group.abelian_image(key);
        RealValue v = phi.evaluate(image);
        if (sign(v) <= 0 && r.ok) {
          r.ok = false;
          r.failure = "residual entry (" + std::to_string(i) + "," + std::to_string(j) +
                      ") has support " + group.format(key) + " of value " + v.to_string();
        }
        r.margin = min(r.margin, ExtendedValue(v));
        r.max_norm = std::max(r.max_norm, l1_norm(image));
      }
    }
  }
  return r;
}

bool is_identity(const RingMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      RingElement e = m[i][j];
      if (i == j) e.add_term({}, -1);
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

std::string basis_digest(const ChainComplex& complex, const CharacterPtr& phi,
                         const RealValue& cutoff) {
  CycleBasis basis = cycle_basis(complex, phi, ExtendedValue(cutoff));
  std::string canonical = "pivot=" + std::to_string(basis.pivot) +
                          ";sign=" + std::to_string(basis.pivot_sign) + ";";
  for (const auto& row : basis.vectors) {
    for (const auto& entry : row) canonical += entry.body().to_string() + "|";
    canonical += ";";
  }
  return sha256_hex(canonical);
}

// One elimination at a fixed truncation; the exact residual check decides.
std::optional<Certificate> attempt_certificate(const ChainComplex& complex, const CharacterPtr& phi,
                                               std::uint32_t pivot, const RingMatrix& a,
                                               const RealValue& cutoff, std::string& note) {
  const Character& character = *phi;
  const GroupPtr& group = complex.group;
  const std::size_t n = complex.generator_count();
  const std::size_t k = n - 1;
  Certificate cert;
  cert.character = character;
  cert.cutoff = cutoff;
  cert.pivot = pivot;
  cert.pivot_sign = sign(evaluate(character, *group, group->generator(pivot)));
  for (std::uint32_t j = 0; j < n; ++j) {
    if (j != pivot) cert.coordinates.push_back(j);
  }

  if (k > 0) {
    Elimination e = eliminate(NovikovMatrix::from_ring(a, group, phi), ExtendedValue(cutoff));
    if (e.rank() < k) {
      note = "elimination found " + std::to_string(e.rank()) + " of " + std::to_string(k) +
             " pivots below the cutoff";
      return std::nullopt;
    }
    cert.L.assign(k, {});
    for (const auto& [row, col] : e.pivots) cert.L[col] = e.L.bodies()[row];
    cert.R = e.R.bodies();
    cert.R_inverse = e.R_inverse.bodies();
  }

  RingMatrix p = ring_multiply(ring_multiply(cert.L, a, group), cert.R, group);
  Residual residual = check_residual(p, character, *group);
  if (!residual.ok) {
    note = residual.failure;
    return std::nullopt;
  }
  cert.margin = residual.margin;
  AbelianVector pivot_image = group->abelian_image(group->generator(pivot));
  RealValue pivot_radius = abs(character.evaluate(pivot_image)) *
                           Rational(1, static_cast<long>(l1_norm(pivot_image)));
  cert.radius = ExtendedValue(pivot_radius);
  if (residual.margin.is_finite()) {
    cert.radius = min(cert.radius, ExtendedValue(residual.margin.value() *
                                                 Rational(1, static_cast<long>(residual.max_norm))));
  }
  cert.cycle_basis_digest = basis_digest(complex, phi, cutoff);
  return cert;
}

}  // namespace

RealValue default_cutoff(const ChainComplex& complex, const Character& character) {
  RealValue best(0);
  for (std::uint32_t j = 0; j < complex.generator_count(); ++j) {
    RealValue v = abs(evaluate(character, *complex.group, complex.group->generator(j)));
    if (best < v) best = v;
  }
  if (best.is_zero()) throw ZeroCharacter("character vanishes on every generator");
  return best * Rational(8);
}

CertificationResult sikorav_certify(const ChainComplex& complex, const Character& character,
                                    const RealValue& cutoff) {
  const GroupPtr& group = complex.group;
  if (character.rank() != group->abelianization().rank) {
    throw RankMismatch("character rank " + std::to_string(character.rank()) +
                       " does not match the free abelianisation rank " +
                       std::to_string(group->abelianization().rank));
  }
  if (sign(cutoff) <= 0) throw std::invalid_argument("cutoff must be positive");
  auto phi = std::make_shared<const Character>(character);
  const std::uint32_t pivot = choose_pivot(complex, character);
  const std::size_t n = complex.generator_count();
  const std::size_t k = n - 1;
  const std::size_t m = complex.relator_count();

  CertificationResult result;
  result.cutoff = cutoff;
  result.cycle_count = k;

  RingMatrix a = cycle_matrix(complex, pivot);
  LaurentMatrix abelian(m, std::vector<LaurentPolynomial>(k));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) abelian[i][j] = abelianize(a[i][j]);
  }
  result.abelian_rank = k == 0 ? 0 : fraction_field_rank(abelian);
  if (result.abelian_rank < k) {
    result.status = DirectionStatus::RefutedByRank;
    result.note = "abelianised boundary has rank " + std::to_string(result.abelian_rank) +
                  " < " + std::to_string(k) + " over Q(Z^r)";
    return result;
  }

  // Truncation cost grows exponentially with the cutoff on non-abelian
  // groups, so cheaper truncations max|phi| * 2^i below the cutoff are tried
  // first. The ladder for 2c contains every rung of the ladder for c.
  RealValue step = default_cutoff(complex, character) * Rational(1, 8);
  std::vector<RealValue> ladder;
  for (RealValue t = step; t < cutoff; t = t * Rational(2)) ladder.push_back(t);
  ladder.push_back(cutoff);
  for (const RealValue& truncation : ladder) {
    std::optional<Certificate> cert = attempt_certificate(complex, phi, pivot, a, truncation, result.note);
    if (cert) {
      result.status = DirectionStatus::Certified;
      result.certificate = std::move(cert);
      result.note.clear();
      return result;
    }
  }
  result.status = DirectionStatus::InconclusiveAtCutoff;
  return result;
}

VerificationReport verify_certificate(const Certificate& certificate, const ChainComplex& complex) {
  VerificationReport report;
  const GroupPtr& group = complex.group;
  const std::size_t n = complex.generator_count();
  const Character& phi = certificate.character;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failure = std::move(why);
    return report;
  };
  if (phi.rank() != group->abelianization().rank) return fail("character rank mismatch");
  if (certificate.pivot >= n) return fail("pivot out of range");
  RealValue pivot_value = evaluate(phi, *group, group->generator(certificate.pivot));
  if (sign(pivot_value) == 0) return fail("pivot generator has value 0");
  if (sign(pivot_value) != certificate.pivot_sign) return fail("pivot sign does not match");
  const std::size_t k = n - 1;
  if (certificate.L.size() != k || certificate.R.size() != k || certificate.R_inverse.size() != k) {
    return fail("certificate matrices have the wrong number of rows");
  }
  for (const auto& row : certificate.L) {
    if (row.size() != complex.relator_count()) return fail("L has the wrong number of columns");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (certificate.R[i].size() != k || certificate.R_inverse[i].size() != k) {
      return fail("R is not square");
    }
  }
  RingMatrix a = cycle_matrix(complex, certificate.pivot);
  if (!is_identity(ring_multiply(certificate.R, certificate.R_inverse, group)) ||
      !is_identity(ring_multiply(certificate.R_inverse, certificate.R, group))) {
    return fail("R * R_inverse is not the identity");
  }
  RingMatrix p = ring_multiply(ring_multiply(certificate.L, a, group), certificate.R, group);
  Residual residual = check_residual(p, phi, *group);
  if (!residual.ok) return fail(residual.failure);
  if (!(residual.margin == certificate.margin)) return fail("recorded margin does not match");
  report.ok = true;
  report.margin = residual.margin;
  return report;
}

CertificationResult certify(const ChainComplex& complex, const Character& character,
                            const CutoffPolicy& policy) {
  RealValue cutoff = policy.cutoff ? *policy.cutoff : default_cutoff(complex, character);
  CertificationResult result;
  for (std::size_t attempt = 0; attempt <= policy.retries; ++attempt) {
    result = sikorav_certify(complex, character, cutoff);
    result.attempts = attempt + 1;
    if (result.status != DirectionStatus::InconclusiveAtCutoff) break;
    cutoff = cutoff * Rational(2);
  }
  return result;
}

Character primitive_normalization(const Character& character) {
  if (!character.is_rational()) throw std::invalid_argument("character is not rational");
  if (character.is_zero()) throw ZeroCharacter("zero character");
  Integer lcm = 1;
  for (const auto& c : character.columns()) {
    Rational q = c.coefficient(1);
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  Integer gcd = 0;
  for (const auto& c : character.columns()) {
    Rational q = c.coefficient(1) * lcm;
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  return character.scaled(Rational(lcm) / Rational(gcd));
}

FibringVerdict fibred_check(const ChainComplex& complex, const Character& character,
                            const CutoffPolicy& policy) {
  if (!character.is_rational()) {
    throw std::invalid_argument("fibring is decided for rational characters only");
  }
  Character primitive = primitive_normalization(character);
  FibringVerdict v = sigma_check(complex, primitive, policy);
  v.normalized = !(primitive == character);
  return v;
}

FibringVerdict sigma_check(const ChainComplex& complex, const Character& character,
                           const CutoffPolicy& policy) {
  FibringVerdict v;
  v.character = character;
  v.plus = certify(complex, v.character, policy);
  v.minus = certify(complex, -v.character, policy);
  if (v.plus.status == DirectionStatus::Certified && v.minus.status == DirectionStatus::Certified) {
    v.combined = Verdict::Fibred;
  } else if (v.plus.status == DirectionStatus::RefutedByRank ||
             v.minus.status == DirectionStatus::RefutedByRank) {
    v.combined = Verdict::NotFibredByRank;
  } else {
    v.combined = Verdict::Inconclusive;
  }
  return v;
}

ScanReport character_scan(const ChainComplex& complex, const std::vector<Character>& samples,
                          const CutoffPolicy& policy, std::size_t threads) {
  ScanReport report;
  report.entries.resize(samples.size());
  auto work = [&](std::size_t i) {
    ScanEntry& entry = report.entries[i];
    entry.index = i;
    try {
      entry.verdict = fibred_check(complex, samples[i], policy);
    } catch (const std::exception& e) {
      entry.verdict.character = samples[i];
      entry.error = e.what();
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, samples.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < samples.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < samples.size(); i += threads) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& entry : report.entries) {
    if (entry.error) continue;
    bool plus = entry.verdict.plus.status == DirectionStatus::Certified;
    bool minus = entry.verdict.minus.status == DirectionStatus::Certified;
    if (plus && minus) report.fibred.push_back(entry.index);
    else if (plus != minus) report.one_sided.push_back(entry.index);
  }
  return report;
}

std::vector<Character> primitive_rays(std::size_t rank, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> vectors;
  std::vector<std::int64_t> v(rank, -bound);
  if (rank == 0) return {};
  while (true) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 1) vectors.push_back(v);
    std::size_t i = rank;
    while (i > 0 && v[i - 1] == bound) v[--i] = -bound;
    if (i == 0) break;
    ++v[i - 1];
  }
  auto norm = [](const std::vector<std::int64_t>& x) {
    std::int64_t m = 0;
    for (auto c : x) m = std::max(m, c < 0 ? -c : c);
    return m;
  };
  std::stable_sort(vectors.begin(), vectors.end(),
                   [&](const auto& a, const auto& b) { return norm(a) < norm(b); });
  std::vector<Character> out;
  for (const auto& x : vectors) {
    std::vector<Rational> images;
    for (auto c : x) images.emplace_back(static_cast<long>(c));
    out.push_back(Character::rational(images));
  }
  return out;
}

std::vector<Character> sample_primitive_rays(std::size_t rank, std::size_t count,
                                             std::uint64_t seed, std::int64_t bound) {
  std::vector<Character> all = primitive_rays(rank, bound);
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates with a plain modulus keeps the draw identical
  // across standard libraries.
  std::size_t take = std::min(count, all.size());
  for (std::size_t i = 0; i < take; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (all.size() - i));
    std::swap(all[i], all[j]);
  }
  all.resize(take);
  return all;
}

Rational betti1_abelian(const GroupPtr& group) {
  const auto& p = group->presentation();
  if (!p.is_raag()) throw std::invalid_argument("betti1_abelian needs a RAAG presentation");
  const std::size_t n = p.generator_count();
  const auto& graph = std::get<RaagGraph>(*p.engine);
  if (graph.edges.size() != n * (n - 1) / 2) {
    throw std::invalid_argument("betti1_abelian needs a complete commutation graph");
  }
  ChainComplex c = build_complex(group);
  LaurentMatrix d2(c.relator_count(), std::vector<LaurentPolynomial>(n));
  for (std::size_t i = 0; i < c.relator_count(); ++i) {
    for (std::size_t j = 0; j < n; ++j) d2[i][j] = abelianize(c.d2[i][j]);
  }
  LaurentMatrix d1(n, std::vector<LaurentPolynomial>(1));
  for (std::size_t j = 0; j < n; ++j) d1[j][0] = abelianize(c.d1[j]);
  std::size_t r2 = c.relator_count() == 0 ? 0 : fraction_field_rank(d2);
  std::size_t r1 = fraction_field_rank(d1);
  return Rational(static_cast<long>(n - r1 - r2));
}

}  // namespace novikov
