#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "twv/errors.hpp"
#include "twv/fusion.hpp"

using namespace twv;
using namespace fixtures;

namespace {

const Check* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool has_witness(const Check& c, const std::string& w) {
  return std::find(c.witnesses.begin(), c.witnesses.end(), w) != c.witnesses.end();
}

// Direct associativity oracle: (a b) c == a (b c) on basis vectors.
bool associative(const BasedRing& R) {
  const std::size_t r = R.rank();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        std::vector<CycNum> ea(r), eb(r), ec(r);
        ea[a] = eb[b] = ec[c] = CycNum(1);
        if (ring_multiply(R, ring_multiply(R, ea, eb), ec) != ring_multiply(R, ea, ring_multiply(R, eb, ec))) {
          return false;
        }
      }
  return true;
}

}  // namespace

TEST(LabelSet, RejectsDuplicatesAndFinds) {
  EXPECT_THROW(LabelSet({"a", "a"}), Error);
  const LabelSet L({"1", "τ"});
  EXPECT_EQ(L.index("τ"), 1u);
  EXPECT_FALSE(L.find("x"));
  EXPECT_THROW(L.index("x"), Error);
}

TEST(BasedRing, FibonacciPasses) {
  const Report r = validate_based_ring(*fibonacci_ring());
  EXPECT_TRUE(r.passed()) << r.first_failure();
}

TEST(BasedRing, ToricGroupRingPasses) {
  const Report r = validate_based_ring(*toric_ring());
  EXPECT_TRUE(r.passed()) << r.first_failure();
}

TEST(BasedRing, IsingAndCyclicPass) {
  EXPECT_TRUE(validate_based_ring(*ising_ring()).passed());
  EXPECT_TRUE(validate_based_ring(*cyclic_ring(5)).passed());
}

// tau^2 = 1 + 2 tau is still a commutative rank-2 ring generated by one element,
// hence associative; the direct oracle agrees with the validator.
TEST(BasedRing, FibonacciWithDoubledCoefficientIsStillAssociative) {
  const auto R = fibonacci_ring(2);
  EXPECT_TRUE(associative(*R));
  const Report r = validate_based_ring(*R);
  const Check* assoc = find_check(r, "associativity");
  ASSERT_NE(assoc, nullptr);
  EXPECT_TRUE(assoc->passed());
  EXPECT_TRUE(r.passed());
}

TEST(BasedRing, CorruptedToricFailsAssociativityWithWitness) {
  // e e = m instead of 1 (duality then also fails).
  auto R = toric_ring();
  R->N(1, 1, 0) = 0;
  R->N(1, 1, 2) = 1;
  EXPECT_FALSE(associative(*R));
  const Report r = validate_based_ring(*R);
  EXPECT_FALSE(r.passed());
  const Check* assoc = find_check(r, "associativity");
  ASSERT_NE(assoc, nullptr);
  EXPECT_EQ(assoc->status, Status::fail);
  // (e e) e = m e = ψ but e (e e) = e m = ψ; (e e) m = m m = 1 but e (e m) = e ψ = m.
  EXPECT_TRUE(has_witness(*assoc, "(e,e,m,1)"));
  const Check* duality = find_check(r, "duality");
  ASSERT_NE(duality, nullptr);
  EXPECT_TRUE(has_witness(*duality, "(e,e)"));
}

TEST(BasedRing, NegativeConstantAndNonCommutativeAreReported) {
  auto R = fibonacci_ring();
  R->N(1, 1, 1) = -1;
  EXPECT_EQ(find_check(validate_based_ring(*R), "non-negativity")->status, Status::fail);

  auto T = toric_ring();
  T->N(1, 2, 3) = 0;
  T->N(1, 2, 1) = 1;
  const Report r = validate_based_ring(*T);
  EXPECT_EQ(find_check(r, "commutativity")->status, Status::fail);
}

TEST(FusionMatrix, Examples) {
  const auto F = fibonacci_ring();
  EXPECT_EQ(fusion_matrix(*F, "τ"), matrix({{0, 1}, {1, 1}}));
  EXPECT_EQ(fusion_matrix(*F, "1"), CycMatrix::identity(2));
  EXPECT_THROW(fusion_matrix(*F, "x"), Error);
  const auto T = toric_ring();
  const CycMatrix e = fusion_matrix(*T, "e");
  // Column b has a single 1 in row e b.
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(e(c, b), CycNum(c == (1 ^ b) ? 1 : 0));
}

TEST(FusionMatrix, CommuteAndStarIsTranspose) {
  for (const auto& R : {fibonacci_ring(), toric_ring(), ising_ring(), cyclic_ring(3), cyclic_ring(5)}) {
    for (std::size_t a = 0; a < R->rank(); ++a) {
      const CycMatrix Na = fusion_matrix(*R, a);
      EXPECT_EQ(fusion_matrix(*R, R->star(a)), Na.transpose());
      for (std::size_t b = 0; b < R->rank(); ++b) {
        const CycMatrix Nb = fusion_matrix(*R, b);
        EXPECT_EQ(Na * Nb, Nb * Na);
      }
    }
  }
}

TEST(BasedModule, ToricDefectsPass) {
  const auto R = toric_ring();
  const Report r = validate_based_module(toric_defects(R));
  EXPECT_TRUE(r.passed()) << r.first_failure();
}

TEST(BasedModule, RegularModulePasses) {
  for (const auto& R : {fibonacci_ring(), toric_ring(), ising_ring()}) {
    EXPECT_TRUE(validate_based_module(regular_module(R)).passed());
  }
}

TEST(BasedModule, CorruptedActionFailsWithWitness) {
  const auto R = toric_ring();
  BasedModule M = toric_defects(R);
  M.A(1, 0, 1) = 0;  // e σ+ = σ+
  M.A(1, 0, 0) = 1;
  const Report r = validate_based_module(M);
  EXPECT_FALSE(r.passed());
  const Check* assoc = find_check(r, "module associativity");
  ASSERT_NE(assoc, nullptr);
  EXPECT_EQ(assoc->status, Status::fail);
  // (m e) σ+ = ψ σ+ = σ+ while m (e σ+) = m σ+ = σ-.
  EXPECT_TRUE(has_witness(*assoc, "(m,e,σ+,σ+)"));
  EXPECT_TRUE(has_witness(*assoc, "(m,e,σ+,σ-)"));
}

TEST(BasedModule, UnitMustActTrivially) {
  const auto R = fibonacci_ring();
  BasedModule M = regular_module(R);
  M.A(0, 1, 1) = 2;
  EXPECT_EQ(find_check(validate_based_module(M), "unit action")->status, Status::fail);
}

TEST(DualModule, ToricStarRule) {
  const auto R = toric_ring();
  const BasedModule D = dual_module(toric_defects(R));
  EXPECT_EQ(D.labels().name(0), "σ+*");
  EXPECT_EQ(D.A(1, 0, 1), 1);  // e σ+* = σ-*
  EXPECT_EQ(D.A(1, 0, 0), 0);
  EXPECT_TRUE(validate_based_module(D).passed());
}

TEST(DualModule, InvolutiveOnConstants) {
  for (const auto& M : {toric_defects(toric_ring()), regular_module(fibonacci_ring()), regular_module(cyclic_ring(3))}) {
    const BasedModule DD = dual_module(dual_module(M));
    for (std::size_t c = 0; c < M.ring().rank(); ++c)
      for (std::size_t x = 0; x < M.rank(); ++x)
        for (std::size_t y = 0; y < M.rank(); ++y) EXPECT_EQ(DD.A(c, x, y), M.A(c, x, y));
  }
}

TEST(DualModule, CyclicSingleLabel) {
  const auto R = cyclic_ring(3);
  BasedModule M(R, LabelSet({"M"}));
  for (std::size_t x = 0; x < 3; ++x) M.A(x, 0, 0) = 1;
  const BasedModule D = dual_module(M);
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(D.A(x, 0, 0), 1);
}

TEST(DualModule, RegularFibonacciMatchesStar) {
  const auto R = fibonacci_ring();
  const BasedModule M = regular_module(R);
  const BasedModule D = dual_module(M);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) EXPECT_EQ(D.A(c, x, y), M.A(c, x, y));
}

TEST(HermitianForm, Examples) {
  const std::vector<CycNum> plus{1, 0};
  const std::vector<CycNum> minus{0, 1};
  EXPECT_EQ(hermitian_form(plus, plus), CycNum(1));
  EXPECT_EQ(hermitian_form(plus, minus), CycNum(0));
  const std::vector<CycNum> v{1, -golden().inverse()};
  EXPECT_EQ(hermitian_form(v, v), (CycNum(5) - sqrt5()) / CycNum(2));
  EXPECT_THROW(hermitian_form(plus, std::vector<CycNum>{1}), Error);
}

TEST(GradedDatum, ToricSwapPasses) {
  const auto R = toric_ring();
  const BasedModule M = toric_defects(R);
  const GradedFusionDatum d{2, R, M, dual_module(M), {0, 2, 1, 3}};
  const Report r = validate_graded_datum(d);
  EXPECT_TRUE(r.passed()) << r.first_failure();
}

TEST(GradedDatum, FixedPointCountMustMatchModuleRank) {
  const auto R = toric_ring();
  const BasedModule M = toric_defects(R);
  const GradedFusionDatum d{2, R, M, dual_module(M), {0, 1, 2, 3}};
  const Report r = validate_graded_datum(d);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(find_check(r, "fixed points of F match module rank")->status, Status::fail);
}

TEST(GradedDatum, FMustPreserveConstants) {
  // Swapping e and ψ preserves the group law, swapping 1 and e does not fix the unit.
  const auto R = toric_ring();
  const BasedModule M = toric_defects(R);
  const GradedFusionDatum moves_unit{2, R, M, dual_module(M), {1, 0, 2, 3}};
  EXPECT_FALSE(validate_graded_datum(moves_unit).passed());

  auto I = ising_ring();
  const BasedModule MI = regular_module(I);
  // σ <-> ψ is not an automorphism of the Ising rules.
  const GradedFusionDatum bad{1, I, MI, dual_module(MI), {0, 2, 1}};
  const Report r = validate_graded_datum(bad);
  EXPECT_EQ(find_check(r, "F preserves structure constants")->status, Status::fail);
}

TEST(FixedPoints, Basic) {
  const std::vector<std::size_t> F{0, 2, 1, 3};
  EXPECT_EQ(fixed_points(F), (std::vector<std::size_t>{0, 3}));
}
