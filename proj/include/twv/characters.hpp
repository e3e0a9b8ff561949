#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twv/cyclotomic.hpp"
#include "twv/fusion.hpp"
#include "twv/matrix.hpp"
#include "twv/report.hpp"

namespace twv {

/// A one-dimensional representation of K_Qab(C), its alpha element
/// alpha = sum_C rho([C]) [C*] and its formal codegree f = rho(alpha).
struct Character {
  std::string label;  // the object C for phi_C in exact mode, "#k" in numeric mode
  std::vector<CycNum> values;
  std::vector<CycNum> alpha;
  CycNum codegree;
  Tri codegree_positive = Tri::undecided;
};

struct CharacterTable {
  std::vector<Character> rows;

  std::size_t size() const { return rows.size(); }
  /// Ch with Ch(rho, C) = rho([C]).
  CycMatrix matrix() const;
  CycMatrix codegree_matrix() const;
};

struct NumericCharacter {
  std::string label;
  std::vector<std::complex<double>> values;
  std::vector<std::complex<double>> alpha;
  std::complex<double> codegree;
};

struct NumericCharacterTable {
  std::vector<NumericCharacter> rows;
  std::uint64_t seed_used = 0;
  int attempts = 0;

  std::size_t size() const { return rows.size(); }
};

constexpr double kNumericTolerance = 1e-9;
constexpr int kEigenRetryBound = 8;

/// Row C is phi_C([D]) = S(C, D) / dim C. Every row is checked for
/// multiplicativity against the ring; failure throws CheckFailure with the witness.
CharacterTable characters_from_S(const BasedRing& ring, const CycMatrix& S, std::span<const CycNum> dims);

/// Joint eigenvectors of a seeded random combination of fusion matrices.
/// Rows are sorted lexicographically by their value tuples.
NumericCharacterTable characters_numeric(const BasedRing& ring, double tolerance = kNumericTolerance,
                                         std::uint64_t seed = 0);

/// alpha and codegree of an exact character. Throws CheckFailure for a zero
/// codegree or one that is definitely not a totally positive algebraic integer.
void alpha_and_codegree(const BasedRing& ring, Character& rho);
void alpha_and_codegree(const BasedRing& ring, NumericCharacter& rho);

/// multiplicativity of rho on all label pairs.
bool is_multiplicative(const BasedRing& ring, std::span<const CycNum> values, std::string* witness = nullptr);

/// <alpha_rho, alpha_rho'> = delta f_rho for all pairs (equivalently Ch Ch^dagger = Codeg).
Report verify_character_orthogonality(const CharacterTable& table);
Report verify_character_orthogonality(const NumericCharacterTable& table, double tolerance = kNumericTolerance);

/// alpha/f is idempotent and alpha/f * alpha'/f' = 0.
Report verify_minimal_idempotents(const BasedRing& ring, const CharacterTable& table);

/// f_{phi_C} = dim C / dim_C(C)^2 for every C, and dim C = sum dim_C(C)^2.
Report codegree_spherical_check(const CharacterTable& table, std::span<const CycNum> dims, const CycNum& global_dim);

/// Max entrywise distance between the numeric table and the exact one after the
/// best row matching (exhaustive for rank <= 8, greedy beyond).
double table_distance(const CharacterTable& exact, const NumericCharacterTable& numeric);

}  // namespace twv
