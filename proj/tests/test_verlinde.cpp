#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "twv/errors.hpp"
#include "twv/twisted.hpp"
#include "twv/verlinde.hpp"

using namespace twv;
using namespace fixtures;

namespace {

CycMatrix cyclic_S(std::size_t n) {
  CycMatrix S(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) S(a, b) = CycNum::zeta(static_cast<long>(n), static_cast<long>(2 * a * b % n));
  return S;
}

// Z/n with inversion and a single module label on which everything acts trivially.
SphericalDatum cyclic_module_spherical(std::size_t n, const CycNum& root) {
  SphericalDatum s;
  s.dims_C.assign(n, CycNum(1));
  s.dims_M = {root};
  s.S = cyclic_S(n);
  s.Scross = matrix({{root}});
  s.fixed = {0};
  s.global_dim = static_cast<long>(n);
  return s;
}

// Regular module of Z/n with F = id: the crossed S is S itself.
SphericalDatum cyclic_regular_spherical(std::size_t n) {
  SphericalDatum s;
  s.dims_C.assign(n, CycNum(1));
  s.dims_M = s.dims_C;
  s.S = cyclic_S(n);
  s.Scross = s.S;
  for (std::size_t x = 0; x < n; ++x) s.fixed.push_back(x);
  s.global_dim = static_cast<long>(n);
  return s;
}

}  // namespace

TEST(ClassicalVerlinde, FibonacciMatchesRing) {
  const auto R = fibonacci_ring();
  const auto sph = fibonacci_spherical();
  EXPECT_EQ(verlinde_classical(sph, 1, 1, 1), 1);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(verlinde_classical(sph, a, b, c), R->N(a, b, c));
}

TEST(ClassicalVerlinde, UnitRowGivesDelta) {
  const auto sph = toric_spherical();
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(verlinde_classical(sph, 0, b, c), b == c ? 1 : 0);
}

TEST(ClassicalVerlinde, ToricGroupLaw) {
  const auto sph = toric_spherical();
  EXPECT_EQ(verlinde_classical(sph, 1, 2, 3), 1);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(verlinde_classical(sph, a, b, c), c == (a ^ b) ? 1 : 0);
}

TEST(ClassicalVerlinde, CorruptedSIsRejected) {
  auto sph = fibonacci_spherical();
  sph.S(1, 1) = CycNum(1);
  bool threw = false;
  for (std::size_t a = 0; a < 2 && !threw; ++a)
    for (std::size_t b = 0; b < 2 && !threw; ++b)
      for (std::size_t c = 0; c < 2 && !threw; ++c) {
        try {
          verlinde_classical(sph, a, b, c);
        } catch (const CheckFailure&) {
          threw = true;
        }
      }
  EXPECT_TRUE(threw);
}

TEST(ModuleVerlinde, ToricSpherical) {
  const auto sph = toric_spherical();
  EXPECT_EQ(verlinde_module_spherical(sph, 1, 0, 1), 1);
  EXPECT_EQ(verlinde_module_spherical(sph, 3, 0, 1), 0);
  const BasedModule M = toric_defects(toric_ring());
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t n = 0; n < 2; ++n) EXPECT_EQ(verlinde_module_spherical(sph, c, m, n), M.A(c, m, n));
}

TEST(ModuleVerlinde, ToricCharacterForm) {
  const auto R = toric_ring();
  const BasedModule M = toric_defects(R);
  const BasedModule D = dual_module(M);
  const CharacterTable table = characters_from_S(*R, toric_S(), std::vector<CycNum>{1, 1, 1, 1});
  const std::vector<std::size_t> F{0, 2, 1, 3};
  const auto tw = extract_twisted_characters(table, fixed_characters(table, F, 2), M, D);
  EXPECT_EQ(verlinde_module_chars(table, tw, 1, 0, 0), 0);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t n = 0; n < 2; ++n) EXPECT_EQ(verlinde_module_chars(table, tw, c, m, n), M.A(c, m, n));

  const NumericCharacterTable num = characters_numeric(*R);
  const auto ntw = extract_twisted_characters(num, fixed_characters(num, F, 2), M, D);
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t n = 0; n < 2; ++n) EXPECT_EQ(verlinde_module_chars(num, ntw, c, m, n), M.A(c, m, n));
}

TEST(ModuleVerlinde, CyclicOneLabelModule) {
  for (std::size_t n : {3u, 5u}) {
    const auto sph = cyclic_module_spherical(n, real_sqrt(static_cast<long>(n)));
    for (std::size_t x = 0; x < n; ++x) EXPECT_EQ(verlinde_module_spherical(sph, x, 0, 0), 1);
  }
}

TEST(ModuleVerlinde, DualitySymmetry) {
  // A_{C,M}^N = A_{C*,M*}^{N*} for the regular Z/5 module, where M* = star(M).
  const auto R = cyclic_ring(5);
  const auto sph = cyclic_regular_spherical(5);
  for (std::size_t c = 0; c < 5; ++c)
    for (std::size_t m = 0; m < 5; ++m)
      for (std::size_t n = 0; n < 5; ++n) {
        const long v = verlinde_module_spherical(sph, c, m, n);
        EXPECT_EQ(v, verlinde_module_spherical(sph, R->star(c), R->star(m), R->star(n)));
        EXPECT_EQ(v, R->N(c, m, n));
      }
}

TEST(TwistedCoefficients, ToricValues) {
  const auto sph = toric_spherical();
  EXPECT_EQ(twisted_fusion_coeff_spherical(sph.Scross, sph.dims_M, sph.global_dim, 2, 1, 1, 0), CycNum(1));
  EXPECT_EQ(twisted_fusion_coeff_spherical(sph.Scross, sph.dims_M, sph.global_dim, 2, 1, 1, 1), CycNum(0));
  const AlgebraCharacters chars = twisted_algebra_characters(sph.Scross, sph.dims_M, sph.global_dim);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        // Z[x]/(x^2 - 1): [C][C'] = [C xor C'].
        const CycNum expect((i ^ j) == k ? 1 : 0);
        EXPECT_EQ(twisted_fusion_coeff_spherical(sph.Scross, sph.dims_M, sph.global_dim, 2, i, j, k), expect);
        EXPECT_EQ(twisted_fusion_coeff_chars(chars, i, j, k), expect);
      }
}

TEST(TwistedCoefficients, CyclicUnitCoefficient) {
  const auto sph = cyclic_module_spherical(3, sqrt3());
  EXPECT_EQ(twisted_fusion_coeff_spherical(sph.Scross, sph.dims_M, sph.global_dim, 2, 0, 0, 0), CycNum(1));
}

TEST(TwistedCoefficients, NonIntegerIsRejected) {
  auto sph = toric_spherical();
  sph.Scross(1, 1) = CycNum(0);
  EXPECT_THROW(twisted_fusion_coeff_spherical(sph.Scross, sph.dims_M, sph.global_dim, 2, 1, 1, 1), CheckFailure);
}

TEST(TwistedCoefficients, RowPhaseTransformationLaw) {
  const auto sph = toric_spherical();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CycNum> r;
    for (std::size_t i = 0; i < 2; ++i) r.push_back(CycNum::zeta(4, static_cast<long>(rng() % 4)));
    CycMatrix scaled = sph.Scross;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t m = 0; m < 2; ++m) scaled(i, m) = scaled(i, m) * r[i];
    SphericalDatum gauged = sph;
    gauged.Scross = scaled;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
          const CycNum before = twisted_fusion_coeff_spherical(sph.Scross, sph.dims_M, sph.global_dim, 4, i, j, k);
          const CycNum after = twisted_fusion_coeff_spherical(scaled, sph.dims_M, sph.global_dim, 4, i, j, k);
          EXPECT_EQ(after, r[i] * r[j] * r[k].conj() * before);
        }
    // Module multiplicities are gauge invariant.
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t m = 0; m < 2; ++m)
        for (std::size_t n = 0; n < 2; ++n)
          EXPECT_EQ(verlinde_module_spherical(gauged, c, m, n), verlinde_module_spherical(sph, c, m, n));
  }
}

TEST(TwistedAlgebra, ToricIsGroupAlgebraOfZ2) {
  const auto R = toric_ring();
  const auto sph = toric_spherical();
  const TwistedFusionAlgebra K = build_twisted_fusion_algebra(sph, *R, LabelSet({"σ+", "σ-"}), 2);
  ASSERT_EQ(K.rank(), 2u);
  EXPECT_EQ(K.labels.name(1), "ψ");
  const std::vector<CycNum> x{0, 1};
  EXPECT_EQ(K.multiply(x, x), (std::vector<CycNum>{1, 0}));
  for (const auto& p : K.star_phase) EXPECT_EQ(p, CycNum(1));
  const Report r = verify_frobenius_star(K);
  EXPECT_TRUE(r.passed()) << r.first_failure();
  EXPECT_EQ(K.characters.codegrees, (std::vector<CycNum>{2, 2}));
}

TEST(TwistedAlgebra, FibonacciTrivialAutomorphismRecoversRing) {
  const auto R = fibonacci_ring();
  const auto sph = fibonacci_spherical();
  const TwistedFusionAlgebra K = build_twisted_fusion_algebra(sph, *R, R->labels(), 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(K.a(i, j, k), CycNum(R->N(i, j, k)));
  const Report r = verify_frobenius_star(K);
  EXPECT_TRUE(r.passed()) << r.first_failure();
  EXPECT_EQ(K.characters.codegrees[0], (CycNum(5) + sqrt5()) / CycNum(2));
  EXPECT_EQ(K.characters.codegrees[1], (CycNum(5) - sqrt5()) / CycNum(2));
}

TEST(TwistedAlgebra, CyclicRegularStarSwapsLabels) {
  const auto R = cyclic_ring(3);
  const auto sph = cyclic_regular_spherical(3);
  const TwistedFusionAlgebra K = build_twisted_fusion_algebra(sph, *R, R->labels(), 1);
  EXPECT_EQ(K.star, (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_TRUE(verify_frobenius_star(K).passed());
}

TEST(TwistedAlgebra, WrongStarBreaksConjugation) {
  const auto R = cyclic_ring(3);
  const auto sph = cyclic_regular_spherical(3);
  TwistedFusionAlgebra K = build_twisted_fusion_algebra(sph, *R, R->labels(), 1);
  K.star = {0, 1, 2};
  const Report r = verify_frobenius_star(K);
  EXPECT_FALSE(r.passed());
  bool conj_failed = false;
  for (const auto& c : r.checks)
    if (c.name == "phi([C]^*) = conj phi([C])") conj_failed = c.status == Status::fail;
  EXPECT_TRUE(conj_failed);
}

TEST(TwistedAlgebra, GaugedStarPhasesAreRootsOfUnity) {
  auto sph = toric_spherical();
  for (std::size_t m = 0; m < 2; ++m) sph.Scross(1, m) = sph.Scross(1, m) * CycNum::zeta(4, 1);
  const TwistedFusionAlgebra K = build_twisted_fusion_algebra(sph, *toric_ring(), LabelSet({"σ+", "σ-"}), 4);
  EXPECT_EQ(K.a(1, 1, 0), CycNum(-1));
  EXPECT_EQ(K.star_phase[1], CycNum(-1));
  const Report r = verify_frobenius_star(K);
  EXPECT_TRUE(r.passed()) << r.first_failure();
}
