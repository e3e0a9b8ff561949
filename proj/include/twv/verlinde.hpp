#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "twv/characters.hpp"
#include "twv/cyclotomic.hpp"
#include "twv/fusion.hpp"
#include "twv/matrix.hpp"
#include "twv/report.hpp"
#include "twv/twisted.hpp"

namespace twv {

/// Spherical data: dimensions, S(C), and the crossed S-matrix whose rows are
/// the F-fixed ring labels `fixed` and whose columns are the module labels.
struct SphericalDatum {
  std::vector<CycNum> dims_C;
  std::vector<CycNum> dims_M;
  CycMatrix S;
  CycMatrix Scross;
  std::vector<std::size_t> fixed;
  CycNum global_dim;

  /// dims_C restricted to the crossed S rows.
  std::vector<CycNum> dims_fixed() const;
};

constexpr double kIntegerSnapTolerance = 1e-6;

/// (1/dim C) sum_D S(D,a) S(D,b) conj S(D,c) / dim D; must be a non-negative integer.
long verlinde_classical(const SphericalDatum& sph, std::size_t a, std::size_t b, std::size_t c);

/// Multiplicity of N in C (x) M from S and the crossed S-matrix. Both conjugate
/// forms are evaluated and must agree on a non-negative integer.
long verlinde_module_spherical(const SphericalDatum& sph, std::size_t C, std::size_t M, std::size_t N);

/// Same multiplicity from fixed characters and extracted twisted characters.
long verlinde_module_chars(const CharacterTable& table, std::span<const TwistedCharacter> twisted,
                           std::size_t C, std::size_t M, std::size_t N);
/// Numeric evaluation, snapped to an integer only within kIntegerSnapTolerance.
long verlinde_module_chars(const NumericCharacterTable& table, std::span<const NumericTwistedCharacter> twisted,
                           std::size_t C, std::size_t M, std::size_t N);

/// Twisted fusion coefficient a_{C,C'}^D from the crossed S-matrix; indices are
/// crossed S rows. Must be an algebraic integer in Q(zeta_modulus).
CycNum twisted_fusion_coeff_spherical(const CycMatrix& crossed, std::span<const CycNum> dims_M,
                                      const CycNum& global_dim, int modulus, std::size_t C, std::size_t Cp,
                                      std::size_t D);

/// Characters phi_M([C]) = X(C,M) / dim M of the twisted fusion algebra, one
/// row per module label, with codegrees dim C / dim(M)^2.
struct AlgebraCharacters {
  CycMatrix values;
  std::vector<CycNum> codegrees;
};
AlgebraCharacters twisted_algebra_characters(const CycMatrix& crossed, std::span<const CycNum> dims_M,
                                             const CycNum& global_dim);

/// sum_phi phi(C) phi(C') conj phi(D) / f_phi.
CycNum twisted_fusion_coeff_chars(const AlgebraCharacters& chars, std::size_t C, std::size_t Cp, std::size_t D);

/// K(C,F) on the F-fixed labels with coefficients from the crossed S-matrix.
///
/// The star sends [C] to star_phase[C] * [C*], extended semilinearly; the phase
/// is fixed by lambda([C] [C]^*) = 1 and must be a root of unity.
struct TwistedFusionAlgebra {
  LabelSet labels;
  std::size_t unit = 0;
  int modulus = 1;
  std::vector<std::size_t> star;
  std::vector<CycNum> star_phase;
  std::vector<CycNum> constants;
  AlgebraCharacters characters;
  std::vector<std::string> character_labels;  // module label of each phi_M
  CycNum global_dim;
  std::vector<CycNum> dims_M;

  std::size_t rank() const { return labels.size(); }
  const CycNum& a(std::size_t i, std::size_t j, std::size_t k) const { return constants[(i * rank() + j) * rank() + k]; }
  std::vector<CycNum> multiply(std::span<const CycNum> x, std::span<const CycNum> y) const;
  CycNum lambda(std::span<const CycNum> x) const;
  std::vector<CycNum> apply_star(std::span<const CycNum> x) const;
  CycNum character(std::size_t phi, std::span<const CycNum> x) const;
};

/// Builds all constants, verifies the Fourier transform is multiplicative
/// (CheckFailure otherwise) and attaches lambda and the star.
TwistedFusionAlgebra build_twisted_fusion_algebra(const SphericalDatum& sph, const BasedRing& ring,
                                                  const LabelSet& module_labels, int modulus);

/// (a) lambda-duality of the basis and its star; (b) star is a semilinear
/// involutive automorphism and the basis is orthonormal; (c) phi([C]^*) =
/// conj phi([C]); (d) Ch_F Ch_F^dagger = Codeg_F; (e) codegrees are totally
/// positive cyclotomic integers equal to dim C / dim(M)^2.
Report verify_frobenius_star(const TwistedFusionAlgebra& K);

}  // namespace twv
