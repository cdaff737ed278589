#include <doctest.h>

#include "helpers.hpp"
#include "novikov/catalog.hpp"
#include "novikov/error.hpp"
#include "novikov/fibring.hpp"
#include "novikov/json_io.hpp"

using namespace novikov;

namespace {
Character one_root2() { return Character({RealValue(1), RealValue::sqrt_term(2)}); }
ChainComplex complex_of(const char* text) { return build_complex(test::group(text)); }
}  // namespace

TEST_CASE("Z is certified with an empty cycle space") {
  ChainComplex c = complex_of(test::kZ);
  CertificationResult r = sikorav_certify(c, Character::rational({1}), RealValue(8));
  CHECK(r.status == DirectionStatus::Certified);
  CHECK(r.cycle_count == 0);
  REQUIRE(r.certificate);
  CHECK(verify_certificate(*r.certificate, c).ok);
}

TEST_CASE("F2 is refuted by rank") {
  ChainComplex c = complex_of(test::kF2);
  CertificationResult r = sikorav_certify(c, one_root2(), RealValue(8));
  CHECK(r.status == DirectionStatus::RefutedByRank);
  CHECK(r.cycle_count == 1);
  CHECK(r.abelian_rank == 0);
  CHECK_FALSE(r.certificate);
}

TEST_CASE("Z^2 at an irrational character") {
  ChainComplex c = complex_of(test::kZ2);
  CertificationResult r = sikorav_certify(c, one_root2(), RealValue(8));
  REQUIRE(r.status == DirectionStatus::Certified);
  const Certificate& cert = *r.certificate;
  CHECK(cert.pivot == 1);
  CHECK(cert.coordinates == std::vector<std::uint32_t>{0});
  VerificationReport v = verify_certificate(cert, c);
  CHECK(v.ok);
  CHECK(v.margin == cert.margin);
  CHECK(cert.radius.is_finite());
  CHECK(ExtendedValue(0) < cert.radius);
}

TEST_CASE("tampered certificates fail verification") {
  ChainComplex c = complex_of(test::kZ2);
  Certificate cert = *sikorav_certify(c, one_root2(), RealValue(8)).certificate;
  Certificate bad = cert;
  bad.L[0][0] *= Rational(2);
  CHECK_FALSE(verify_certificate(bad, c).ok);
  bad = cert;
  bad.character = -cert.character;
  CHECK_FALSE(verify_certificate(bad, c).ok);
  bad = cert;
  bad.margin = ExtendedValue(RealValue(1000));
  CHECK_FALSE(verify_certificate(bad, c).ok);
}

TEST_CASE("fibred_check on small groups") {
  FibringVerdict z = fibred_check(complex_of(test::kZ), Character::rational({1}));
  CHECK(z.combined == Verdict::Fibred);
  FibringVerdict zm = fibred_check(complex_of(test::kZ), Character::rational({-1}));
  CHECK(zm.combined == Verdict::Fibred);

  FibringVerdict f2xz = fibred_check(complex_of(test::kF2xZ), Character::rational({0, 0, 1}));
  CHECK(f2xz.combined == Verdict::Fibred);

  FibringVerdict f2 = fibred_check(complex_of(test::kF2), Character::rational({1, 0}));
  CHECK(f2.combined == Verdict::NotFibredByRank);
}

TEST_CASE("BS(1,2) is certified on one side only") {
  ChainComplex c = complex_of(test::kBS12);
  FibringVerdict v = fibred_check(c, Character::rational({1}));
  CHECK(v.combined != Verdict::Fibred);
  // The side with phi(t) < 0 is the one in Sigma.
  CHECK(v.minus.status == DirectionStatus::Certified);
  CHECK(v.plus.status != DirectionStatus::Certified);
  CHECK(verify_certificate(*v.minus.certificate, c).ok);
}

TEST_CASE("characters are normalised or rejected") {
  ChainComplex c = complex_of(test::kZ2);
  FibringVerdict v = fibred_check(c, Character::rational({2, 4}));
  CHECK(v.normalized);
  CHECK(v.character == Character::rational({1, 2}));
  CHECK(primitive_normalization(Character::rational({Rational(1, 2), Rational(3, 4)})) ==
        Character::rational({2, 3}));
  CHECK_THROWS_AS(fibred_check(c, one_root2()), std::invalid_argument);
  CHECK_THROWS_AS(fibred_check(c, Character::rational({0, 0})), ZeroCharacter);
  CHECK_THROWS_AS(fibred_check(c, Character::rational({1, 0, 0})), RankMismatch);
}

TEST_CASE("antipodal coherence") {
  ChainComplex c = complex_of(test::kBS12);
  FibringVerdict plus = fibred_check(c, Character::rational({1}));
  FibringVerdict minus = fibred_check(c, Character::rational({-1}));
  CHECK(plus.plus.status == minus.minus.status);
  CHECK(plus.minus.status == minus.plus.status);
  CHECK(plus.combined == minus.combined);
}

TEST_CASE("certification is stable under doubling and scaling") {
  for (const char* text : {test::kZ2, test::kF2xZ, test::kZ3}) {
    ChainComplex c = complex_of(text);
    std::size_t rank = c.group->abelianization().rank;
    for (const Character& phi : primitive_rays(rank, 1)) {
      CertificationResult r = certify(c, phi);
      if (r.status != DirectionStatus::Certified) continue;
      CHECK(sikorav_certify(c, phi, r.cutoff * Rational(2)).status == DirectionStatus::Certified);
      CHECK(sikorav_certify(c, phi.scaled(Rational(3, 2)), r.cutoff * Rational(3, 2)).status ==
            DirectionStatus::Certified);
    }
  }
}

TEST_CASE("primitive rays") {
  std::vector<Character> rays = primitive_rays(2, 1);
  CHECK(rays.size() == 8);
  CHECK(rays[0] == Character::rational({-1, -1}));
  CHECK(primitive_rays(2, 2).size() == 16);
  CHECK(primitive_rays(3, 1).size() == 26);
  CHECK(sample_primitive_rays(2, 8, 5).size() == 8);
  CHECK(sample_primitive_rays(3, 5, 9) == sample_primitive_rays(3, 5, 9));
}

TEST_CASE("scans") {
  ChainComplex z2 = complex_of(test::kZ2);
  ScanReport all = character_scan(z2, primitive_rays(2, 1));
  CHECK(all.fibred.size() == 8);
  CHECK(character_scan(z2, {}).entries.empty());

  ScanReport f2 = character_scan(complex_of(test::kF2), sample_primitive_rays(2, 6, 1));
  CHECK(f2.fibred.empty());

  ChainComplex path = complex_of(test::kF2xZ);
  std::vector<Character> rays = primitive_rays(3, 1);
  ScanReport one = character_scan(path, rays, {}, 1);
  ScanReport four = character_scan(path, rays, {}, 4);
  CHECK(to_json(one, *path.group).dump() == to_json(four, *path.group).dump());
  GroupPresentation p = parse_presentation(test::kF2xZ);
  for (const ScanEntry& e : one.entries) {
    std::vector<int> signs;
    for (const RealValue& v : rays[e.index].columns()) signs.push_back(sign(v));
    bool living = raag_living_subgraph_criterion(3, std::get<RaagGraph>(*p.engine), signs);
    if (e.verdict.combined == Verdict::Fibred) CHECK(living);
    if (living) CHECK(e.verdict.combined == Verdict::Fibred);
  }
}

TEST_CASE("scan records per-sample failures") {
  ChainComplex z2 = complex_of(test::kZ2);
  ScanReport r = character_scan(z2, {Character::rational({1, 0}), Character::rational({0, 0}),
                                     Character::rational({1, 1, 1})});
  REQUIRE(r.entries.size() == 3);
  CHECK_FALSE(r.entries[0].error);
  CHECK(r.entries[1].error);
  CHECK(r.entries[2].error);
}

TEST_CASE("L2 Betti numbers of free abelian groups") {
  CHECK(betti1_abelian(test::group(test::kZ)) == 0);
  CHECK(betti1_abelian(test::group(test::kZ2)) == 0);
  CHECK(betti1_abelian(test::group(test::kZ3)) == 0);
  CHECK_THROWS_AS(betti1_abelian(test::group(test::kF2)), std::invalid_argument);
  CHECK_THROWS_AS(betti1_abelian(test::group(test::kF2xZ)), std::invalid_argument);
}

TEST_CASE("sigma_check takes irrational characters as given") {
  ChainComplex c = complex_of(test::kZ2);
  CHECK_THROWS_AS(fibred_check(c, one_root2()), std::invalid_argument);
  FibringVerdict v = sigma_check(c, one_root2());
  CHECK(v.combined == Verdict::Fibred);
  CHECK_FALSE(v.normalized);
  CHECK(v.character == one_root2());
  FibringVerdict f = sigma_check(complex_of(test::kF2), one_root2());
  CHECK(f.combined == Verdict::NotFibredByRank);
}
