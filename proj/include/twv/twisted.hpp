#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twv/characters.hpp"
#include "twv/cyclotomic.hpp"
#include "twv/fusion.hpp"
#include "twv/matrix.hpp"
#include "twv/report.hpp"

namespace twv {

/// The element t~alpha_rho of K_Qab(M^-1) attached to an F-fixed character rho.
///
/// Only defined up to an N-th root of unity; the stored representative has
/// <t~alpha, t~alpha> = f_rho and its first nonzero coordinate real positive.
struct TwistedCharacter {
  std::size_t base = 0;  // row of the character table
  std::string label;
  std::vector<CycNum> vector;  // coordinates on the labels of M^-1
  std::vector<CycNum> values;  // t~chi([M]) = coefficient of [M*], indexed by O_M
};

struct NumericTwistedCharacter {
  std::size_t base = 0;
  std::string label;
  std::vector<std::complex<double>> vector;
  std::vector<std::complex<double>> values;
};

/// Rows rho with rho([F(C)]) = rho([C]) for every C. If `module_rank` is given
/// the count must match it (CheckFailure otherwise).
std::vector<std::size_t> fixed_characters(const CharacterTable& table, std::span<const std::size_t> F,
                                          std::optional<std::size_t> module_rank = std::nullopt);
std::vector<std::size_t> fixed_characters(const NumericCharacterTable& table, std::span<const std::size_t> F,
                                          std::optional<std::size_t> module_rank = std::nullopt,
                                          double tolerance = kNumericTolerance);

/// Projector alpha_rho / f_rho acting on K_Qab(M^-1).
CycMatrix twisted_projector(const Character& rho, const BasedModule& dual);

/// Applies the projector of every fixed rho to K(M^-1), requires a
/// one-dimensional image and normalises the spanning vector. `module` provides
/// the pairing M -> M* used to read off t~chi.
std::vector<TwistedCharacter> extract_twisted_characters(const CharacterTable& table,
                                                         std::span<const std::size_t> fixed,
                                                         const BasedModule& module, const BasedModule& dual);
std::vector<NumericTwistedCharacter> extract_twisted_characters(const NumericCharacterTable& table,
                                                                std::span<const std::size_t> fixed,
                                                                const BasedModule& module, const BasedModule& dual,
                                                                double tolerance = kNumericTolerance);

/// <t~alpha_rho, t~alpha_rho'> = delta f_rho.
Report verify_twisted_orthogonality(const CharacterTable& table, std::span<const TwistedCharacter> twisted);
/// alpha_rho' . t~alpha_rho = delta f_rho t~alpha_rho for every rho', and the
/// t~alpha span K(M^-1).
Report verify_twisted_action(const CharacterTable& table, std::span<const TwistedCharacter> twisted,
                             const BasedModule& dual);

struct RowPhase {
  std::string label;
  CycNum phase;  // supplied row = phase * computed row
  RootOfUnity root;
};

struct BridgeResult {
  CycMatrix computed;
  std::vector<RowPhase> phases;  // empty when nothing was supplied
};

/// S(C,M)_{C,M} = dim C * t~chi_C([M]). `dims` is indexed by ring labels. When a
/// crossed S-matrix is supplied, each supplied row must be a root of unity
/// times the computed one (CheckFailure otherwise).
BridgeResult crossed_S_bridge(const CharacterTable& table, std::span<const TwistedCharacter> twisted,
                              std::span<const CycNum> dims, const CycMatrix* supplied = nullptr);

/// X X^dagger = dim C * I = X^dagger X.
Report verify_crossed_unitarity(const CycMatrix& crossed, const CycNum& global_dim);

/// X(C,M)/dim C and X(C,M)/dim M are algebraic integers; dim C = sum dim(M)^2.
Report verify_integrality_ratios(const CycMatrix& crossed, std::span<const CycNum> dims_fixed,
                                 std::span<const CycNum> dims_module, const CycNum& global_dim);

}  // namespace twv
