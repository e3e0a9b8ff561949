#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "fixtures.hpp"
#include "twv/characters.hpp"
#include "twv/errors.hpp"

using namespace twv;
using namespace fixtures;

namespace {

CycMatrix cyclic_S(std::size_t n) {
  CycMatrix S(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) S(a, b) = CycNum::zeta(static_cast<long>(n), static_cast<long>(2 * a * b % n));
  return S;
}

}  // namespace

TEST(CharactersFromS, FibonacciRowTau) {
  const auto R = fibonacci_ring();
  const auto sph = fibonacci_spherical();
  const CharacterTable t = characters_from_S(*R, sph.S, sph.dims_C);
  ASSERT_EQ(t.size(), 2u);
  const CycNum x = t.rows[1].values[1];
  EXPECT_EQ(x, -golden().inverse());
  EXPECT_EQ(x * x, CycNum(1) + x);  // multiplicativity at (τ,τ)
  EXPECT_EQ(t.rows[0].values, (std::vector<CycNum>{1, golden()}));
}

TEST(CharactersFromS, ToricRowsAreRowsOfS) {
  const auto R = toric_ring();
  const CycMatrix S = toric_S();
  const CharacterTable t = characters_from_S(*R, S, std::vector<CycNum>{1, 1, 1, 1});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(t.rows[i].values[j], S(i, j));
      // Z/2 x Z/2 characters: (-1)^{<i,j>} for the pairing swapping the two factors.
      const int bit = (((i & 1) & ((j >> 1) & 1)) + (((i >> 1) & 1) & (j & 1))) & 1;
      EXPECT_EQ(t.rows[i].values[j], CycNum(bit ? -1 : 1));
    }
}

TEST(CharactersFromS, UnitColumnIsOneAndUnitRowIsDims) {
  const auto R = ising_ring();
  const CycNum r = sqrt2();
  const CycMatrix S = matrix({{1, r, 1}, {r, 0, -r}, {1, -r, 1}});
  const std::vector<CycNum> dims{1, r, 1};
  const CharacterTable t = characters_from_S(*R, S, dims);
  for (const auto& row : t.rows) EXPECT_EQ(row.values[0], CycNum(1));
  EXPECT_EQ(t.rows[0].values, dims);
  EXPECT_EQ(t.rows[1].values[1], CycNum(0));
}

TEST(CharactersFromS, InconsistentSThrows) {
  const auto R = fibonacci_ring();
  const CycNum p = golden();
  const CycMatrix S = matrix({{1, p}, {p, 1}});
  EXPECT_THROW(characters_from_S(*R, S, std::vector<CycNum>{1, p}), CheckFailure);
  const CycMatrix wrong_unit = matrix({{1, 1}, {p, -1}});
  EXPECT_THROW(characters_from_S(*R, wrong_unit, std::vector<CycNum>{1, p}), CheckFailure);
}

TEST(Codegrees, FibonacciExactValues) {
  const auto R = fibonacci_ring();
  const auto sph = fibonacci_spherical();
  const CharacterTable t = characters_from_S(*R, sph.S, sph.dims_C);
  EXPECT_EQ(t.rows[0].codegree, (CycNum(5) + sqrt5()) / CycNum(2));
  EXPECT_EQ(t.rows[0].codegree, CycNum(1) + golden() * golden());
  EXPECT_EQ(t.rows[1].codegree, (CycNum(5) - sqrt5()) / CycNum(2));
  EXPECT_EQ(t.rows[1].codegree, CycNum(1) + golden().inverse() * golden().inverse());
  for (const auto& row : t.rows) EXPECT_EQ(row.codegree_positive, Tri::yes);
  // alpha = sum rho(C) [C*]
  EXPECT_EQ(t.rows[1].alpha, t.rows[1].values);
}

TEST(Codegrees, ToricAllFour) {
  const auto R = toric_ring();
  const CharacterTable t = characters_from_S(*R, toric_S(), std::vector<CycNum>{1, 1, 1, 1});
  for (const auto& row : t.rows) EXPECT_EQ(row.codegree, CycNum(4));
}

TEST(Codegrees, SphericalCheck) {
  const auto R = fibonacci_ring();
  const auto sph = fibonacci_spherical();
  const CharacterTable t = characters_from_S(*R, sph.S, sph.dims_C);
  const Report r = codegree_spherical_check(t, sph.dims_C, sph.global_dim);
  EXPECT_TRUE(r.passed()) << r.first_failure();
  EXPECT_EQ(sph.global_dim / (golden() * golden()), (CycNum(5) - sqrt5()) / CycNum(2));
  const Report bad = codegree_spherical_check(t, sph.dims_C, CycNum(4));
  EXPECT_FALSE(bad.passed());
}

TEST(Orthogonality, ExactTablesPass) {
  const auto F = fibonacci_ring();
  const auto sph = fibonacci_spherical();
  const CharacterTable ft = characters_from_S(*F, sph.S, sph.dims_C);
  EXPECT_TRUE(verify_character_orthogonality(ft).passed());
  EXPECT_EQ(ft.matrix() * conj_transpose(ft.matrix()), ft.codegree_matrix());

  const auto T = toric_ring();
  const CharacterTable tt = characters_from_S(*T, toric_S(), std::vector<CycNum>{1, 1, 1, 1});
  EXPECT_TRUE(verify_character_orthogonality(tt).passed());
  for (const auto& a : tt.rows)
    for (const auto& b : tt.rows) {
      const CycNum ip = hermitian_form(a.alpha, b.alpha);
      EXPECT_TRUE(ip == CycNum(0) || ip == CycNum(4));
    }
}

TEST(Orthogonality, DuplicatedRowFailsWithPairWitness) {
  const auto T = toric_ring();
  CharacterTable t = characters_from_S(*T, toric_S(), std::vector<CycNum>{1, 1, 1, 1});
  t.rows[2] = t.rows[1];
  t.rows[2].label = "dup";
  const Report r = verify_character_orthogonality(t);
  EXPECT_FALSE(r.passed());
  bool found = false;
  for (const auto& c : r.checks)
    for (const auto& w : c.witnesses) found = found || (w.find("e") != std::string::npos && w.find("dup") != std::string::npos);
  EXPECT_TRUE(found);
}

TEST(MinimalIdempotents, HoldExactly) {
  for (const auto& [R, S, dims] :
       {std::tuple{fibonacci_ring(), fibonacci_spherical().S, fibonacci_spherical().dims_C},
        std::tuple{toric_ring(), toric_S(), std::vector<CycNum>{1, 1, 1, 1}},
        std::tuple{cyclic_ring(5), cyclic_S(5), std::vector<CycNum>{1, 1, 1, 1, 1}}}) {
    const CharacterTable t = characters_from_S(*R, S, dims);
    const Report r = verify_minimal_idempotents(*R, t);
    EXPECT_TRUE(r.passed()) << r.first_failure();
    // Direct oracle on the first two rows.
    const CycNum inv0 = t.rows[0].codegree.inverse();
    const CycNum inv1 = t.rows[1].codegree.inverse();
    std::vector<CycNum> e0, e1;
    for (const auto& x : t.rows[0].alpha) e0.push_back(x * inv0);
    for (const auto& x : t.rows[1].alpha) e1.push_back(x * inv1);
    EXPECT_EQ(ring_multiply(*R, e0, e0), e0);
    EXPECT_EQ(ring_multiply(*R, e0, e1), std::vector<CycNum>(R->rank()));
  }
}

TEST(NumericCharacters, FibonacciGoldenEigenvalues) {
  const auto R = fibonacci_ring();
  const NumericCharacterTable t = characters_numeric(*R);
  ASSERT_EQ(t.size(), 2u);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<double> tau{t.rows[0].values[1].real(), t.rows[1].values[1].real()};
  std::sort(tau.begin(), tau.end());
  EXPECT_NEAR(tau[0], 1 - phi, 1e-12);
  EXPECT_NEAR(tau[1], phi, 1e-12);
  for (const auto& row : t.rows) EXPECT_NEAR(std::abs(row.values[0] - 1.0), 0.0, 1e-12);
}

TEST(NumericCharacters, CyclicThreeHasCubeRoots) {
  const auto R = cyclic_ring(3);
  const NumericCharacterTable t = characters_numeric(*R);
  ASSERT_EQ(t.size(), 3u);
  for (const auto& row : t.rows) {
    const std::complex<double> g = row.values[1];
    EXPECT_NEAR(std::abs(g * g * g - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(row.values[2] - g * g), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(row.codegree - 3.0), 0.0, 1e-9);
  }
}

TEST(NumericCharacters, ToricMatchesExact) {
  const auto R = toric_ring();
  const CharacterTable exact = characters_from_S(*R, toric_S(), std::vector<CycNum>{1, 1, 1, 1});
  const NumericCharacterTable num = characters_numeric(*R);
  EXPECT_LE(table_distance(exact, num), 1e-9);
  EXPECT_TRUE(verify_character_orthogonality(num).passed());
}

TEST(NumericCharacters, DeterministicForSeed) {
  const auto R = ising_ring();
  const NumericCharacterTable a = characters_numeric(*R, kNumericTolerance, 42);
  const NumericCharacterTable b = characters_numeric(*R, kNumericTolerance, 42);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.rows[i].values, b.rows[i].values);
  // Rows are sorted lexicographically by value tuple.
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LE(a.rows[i - 1].values[1].real(), a.rows[i].values[1].real() + 1e-7);
}

TEST(NumericCharacters, NumberOfCharactersEqualsRank) {
  for (const auto& R : {fibonacci_ring(), toric_ring(), ising_ring(), cyclic_ring(5)}) {
    EXPECT_EQ(characters_numeric(*R).size(), R->rank());
  }
}

TEST(Multiplicativity, RejectsNonCharacters) {
  const auto R = fibonacci_ring();
  std::string witness;
  EXPECT_FALSE(is_multiplicative(*R, std::vector<CycNum>{1, 2}, &witness));
  EXPECT_FALSE(witness.empty());
  EXPECT_TRUE(is_multiplicative(*R, std::vector<CycNum>{1, golden()}));
}
