#include "twv/verlinde.hpp"

#include <cmath>

#include "twv/errors.hpp"

namespace twv {

namespace {

long as_multiplicity(const CycNum& value, const char* what) {
  if (!value.is_integer() || value.rational_value() < 0) {
    throw CheckFailure(std::string(what) + " is not a non-negative integer: " + value.to_string());
  }
  const Rational q = value.rational_value();
  return q.get_num().get_si();
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

std::vector<CycNum> SphericalDatum::dims_fixed() const {
  std::vector<CycNum> out;
  for (std::size_t c : fixed) out.push_back(dims_C.at(c));
  return out;
}

long verlinde_classical(const SphericalDatum& sph, std::size_t a, std::size_t b, std::size_t c) {
  const std::size_t r = sph.S.rows();
  CycNum sum;
  for (std::size_t d = 0; d < r; ++d) {
    sum += sph.S(d, a) * sph.S(d, b) * sph.S(d, c).conj() / sph.dims_C[d];
  }
  return as_multiplicity(sum / sph.global_dim, "classical Verlinde value");
}

long verlinde_module_spherical(const SphericalDatum& sph, std::size_t C, std::size_t M, std::size_t N) {
  CycNum first;
  CycNum second;
  for (std::size_t i = 0; i < sph.fixed.size(); ++i) {
    const std::size_t d = sph.fixed[i];
    const CycNum& s = sph.S(d, C);
    const CycNum& x = sph.Scross(i, M);
    const CycNum& y = sph.Scross(i, N);
    const CycNum inv_dim = sph.dims_C[d].inverse();
    first += s * x * y.conj() * inv_dim;
    second += s.conj() * x.conj() * y * inv_dim;
  }
  first /= sph.global_dim;
  second /= sph.global_dim;
  if (first != second) {
    throw CheckFailure("the two module Verlinde expressions differ at " + triple(C, M, N) + ": " +
                       first.to_string() + " vs " + second.to_string());
  }
  return as_multiplicity(first, "module Verlinde value");
}

long verlinde_module_chars(const CharacterTable& table, std::span<const TwistedCharacter> twisted,
                           std::size_t C, std::size_t M, std::size_t N) {
  CycNum first;
  CycNum second;
  for (const auto& tw : twisted) {
    const Character& rho = table.rows[tw.base];
    const CycNum inv_f = rho.codegree.inverse();
    first += rho.values[C] * tw.values[M] * tw.values[N].conj() * inv_f;
    second += rho.values[C].conj() * tw.values[M].conj() * tw.values[N] * inv_f;
  }
  if (first != second) {
    throw CheckFailure("the two character-form Verlinde expressions differ at " + triple(C, M, N));
  }
  return as_multiplicity(first, "character-form Verlinde value");
}

long verlinde_module_chars(const NumericCharacterTable& table, std::span<const NumericTwistedCharacter> twisted,
                           std::size_t C, std::size_t M, std::size_t N) {
  std::complex<double> sum = 0;
  for (const auto& tw : twisted) {
    const NumericCharacter& rho = table.rows[tw.base];
    sum += rho.values[C] * tw.values[M] * std::conj(tw.values[N]) / rho.codegree;
  }
  const double nearest = std::round(sum.real());
  if (std::abs(sum.imag()) > kIntegerSnapTolerance || std::abs(sum.real() - nearest) > kIntegerSnapTolerance ||
      nearest < 0) {
    throw CheckFailure("numeric Verlinde value at " + triple(C, M, N) + " is not near a non-negative integer: " +
                       std::to_string(sum.real()) + (sum.imag() < 0 ? " - " : " + ") +
                       std::to_string(std::abs(sum.imag())) + "i");
  }
  return static_cast<long>(nearest);
}

CycNum twisted_fusion_coeff_spherical(const CycMatrix& crossed, std::span<const CycNum> dims_M,
                                      const CycNum& global_dim, int modulus, std::size_t C, std::size_t Cp,
                                      std::size_t D) {
  CycNum sum;
  for (std::size_t m = 0; m < crossed.cols(); ++m) {
    sum += crossed(C, m) * crossed(Cp, m) * crossed(D, m).conj() / dims_M[m];
  }
  sum /= global_dim;
  if (!is_algebraic_integer(sum) || !lies_in_subfield(sum, modulus)) {
    throw CheckFailure("twisted fusion coefficient " + triple(C, Cp, D) + " = " + sum.to_string() +
                       " is not an algebraic integer in Q(zeta_" + std::to_string(modulus) + ")");
  }
  return sum;
}

AlgebraCharacters twisted_algebra_characters(const CycMatrix& crossed, std::span<const CycNum> dims_M,
                                             const CycNum& global_dim) {
  AlgebraCharacters chars;
  chars.values = CycMatrix(crossed.cols(), crossed.rows());
  for (std::size_t m = 0; m < crossed.cols(); ++m) {
    const CycNum inv = dims_M[m].inverse();
    for (std::size_t c = 0; c < crossed.rows(); ++c) chars.values(m, c) = crossed(c, m) * inv;
    chars.codegrees.push_back(global_dim * inv * inv);
  }
  return chars;
}

CycNum twisted_fusion_coeff_chars(const AlgebraCharacters& chars, std::size_t C, std::size_t Cp, std::size_t D) {
  CycNum sum;
  for (std::size_t phi = 0; phi < chars.values.rows(); ++phi) {
    sum += chars.values(phi, C) * chars.values(phi, Cp) * chars.values(phi, D).conj() /
           chars.codegrees[phi];
  }
  return sum;
}

// --- TwistedFusionAlgebra ---------------------------------------------------------

std::vector<CycNum> TwistedFusionAlgebra::multiply(std::span<const CycNum> x, std::span<const CycNum> y) const {
  const std::size_t r = rank();
  std::vector<CycNum> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (y[j].is_zero()) continue;
      const CycNum xy = x[i] * y[j];
      for (std::size_t k = 0; k < r; ++k) {
        if (!a(i, j, k).is_zero()) out[k] += xy * a(i, j, k);
      }
    }
  }
  return out;
}

CycNum TwistedFusionAlgebra::lambda(std::span<const CycNum> x) const { return x[unit]; }

std::vector<CycNum> TwistedFusionAlgebra::apply_star(std::span<const CycNum> x) const {
  std::vector<CycNum> out(rank());
  for (std::size_t i = 0; i < rank(); ++i) out[star[i]] += x[i].conj() * star_phase[i];
  return out;
}

CycNum TwistedFusionAlgebra::character(std::size_t phi, std::span<const CycNum> x) const {
  CycNum sum;
  for (std::size_t i = 0; i < rank(); ++i) sum += characters.values(phi, i) * x[i];
  return sum;
}

TwistedFusionAlgebra build_twisted_fusion_algebra(const SphericalDatum& sph, const BasedRing& ring,
                                                  const LabelSet& module_labels, int modulus) {
  TwistedFusionAlgebra K;
  const std::size_t r = sph.fixed.size();
  std::vector<std::string> names;
  for (std::size_t c : sph.fixed) names.push_back(ring.labels().name(c));
  K.labels = LabelSet(names);
  K.modulus = modulus;
  K.global_dim = sph.global_dim;
  K.dims_M = sph.dims_M;
  K.character_labels = module_labels.names();
  bool has_unit = false;
  for (std::size_t i = 0; i < r; ++i) {
    if (sph.fixed[i] == ring.unit()) {
      K.unit = i;
      has_unit = true;
    }
  }
  if (!has_unit) throw CheckFailure("the unit is not among the F-fixed labels");

  K.constants.resize(r * r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        K.constants[(i * r + j) * r + k] =
            twisted_fusion_coeff_spherical(sph.Scross, sph.dims_M, sph.global_dim, modulus, i, j, k);
      }
  K.characters = twisted_algebra_characters(sph.Scross, sph.dims_M, sph.global_dim);

  for (std::size_t m = 0; m < K.characters.values.rows(); ++m)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        CycNum rhs;
        for (std::size_t k = 0; k < r; ++k) rhs += K.a(i, j, k) * K.characters.values(m, k);
        if (K.characters.values(m, i) * K.characters.values(m, j) != rhs) {
          throw CheckFailure("Fourier transform is not multiplicative: phi_" + module_labels.name(m) + " at (" +
                             K.labels.name(i) + "," + K.labels.name(j) + ")");
        }
      }

  K.star.resize(r);
  K.star_phase.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto dual = K.labels.find(ring.labels().name(ring.star(sph.fixed[i])));
    if (!dual) throw CheckFailure("star of a fixed label is not fixed: " + K.labels.name(i));
    K.star[i] = *dual;
    const CycNum& pairing = K.a(i, *dual, K.unit);
    if (pairing.is_zero()) throw CheckFailure("[" + K.labels.name(i) + "] pairs to zero with its dual");
    K.star_phase[i] = pairing.inverse();
  }
  return K;
}

Report verify_frobenius_star(const TwistedFusionAlgebra& K) {
  Report report;
  report.title = "Frobenius star-algebra";
  const std::size_t r = K.rank();
  auto basis = [&](std::size_t i) {
    std::vector<CycNum> e(r);
    e[i] = CycNum(1);
    return e;
  };

  auto& duality = report.add("lambda-duality of {[C]} and {[C]^*}");
  auto& phases = report.add("star phases are roots of unity");
  for (std::size_t i = 0; i < r; ++i) {
    if (!as_root_of_unity(K.star_phase[i])) phases.fail(K.labels.name(i) + ": " + K.star_phase[i].to_string());
    for (std::size_t j = 0; j < r; ++j) {
      const CycNum pairing = K.lambda(K.multiply(basis(i), K.apply_star(basis(j))));
      if (pairing != CycNum(i == j ? 1 : 0)) duality.fail("(" + K.labels.name(i) + "," + K.labels.name(j) + ")");
    }
  }

  auto& involution = report.add("star is a semilinear involutive automorphism");
  auto& ortho = report.add("basis orthonormal for lambda(a b^*)");
  for (std::size_t i = 0; i < r; ++i) {
    if (K.apply_star(K.apply_star(basis(i))) != basis(i)) involution.fail(K.labels.name(i) + "**");
    for (std::size_t j = 0; j < r; ++j) {
      const auto lhs = K.apply_star(K.multiply(basis(i), basis(j)));
      const auto rhs = K.multiply(K.apply_star(basis(i)), K.apply_star(basis(j)));
      if (lhs != rhs) involution.fail("(" + K.labels.name(i) + "," + K.labels.name(j) + ")");
      const CycNum inner = K.lambda(K.multiply(basis(i), K.apply_star(basis(j))));
      const CycNum swapped = K.lambda(K.multiply(basis(j), K.apply_star(basis(i))));
      if (inner != CycNum(i == j ? 1 : 0) || inner != swapped.conj()) {
        ortho.fail("(" + K.labels.name(i) + "," + K.labels.name(j) + ")");
      }
    }
  }

  const std::size_t nchar = K.characters.values.rows();
  auto& conj = report.add("phi([C]^*) = conj phi([C])");
  std::vector<CycNum> codegrees(nchar);
  for (std::size_t phi = 0; phi < nchar; ++phi) {
    for (std::size_t i = 0; i < r; ++i) {
      const CycNum value = K.characters.values(phi, i);
      const CycNum starred = K.character(phi, K.apply_star(basis(i)));
      if (starred != value.conj()) conj.fail("phi_" + K.character_labels[phi] + " at " + K.labels.name(i));
      codegrees[phi] += value * starred;
    }
  }

  auto& table = report.add("Ch_F Ch_F^dagger = Codeg_F");
  const CycMatrix& ch = K.characters.values;
  const CycMatrix gram = ch * conj_transpose(ch);
  for (std::size_t p = 0; p < nchar; ++p)
    for (std::size_t q = 0; q < nchar; ++q) {
      const CycNum expect = p == q ? codegrees[p] : CycNum(0);
      if (gram(p, q) != expect) table.fail("(phi_" + K.character_labels[p] + ",phi_" + K.character_labels[q] + ")");
    }

  auto& positive = report.add("codegrees totally positive and equal dim C / dim(M)^2");
  for (std::size_t phi = 0; phi < nchar; ++phi) {
    const auto props = integrality_and_positivity(codegrees[phi]);
    positive.note("phi_" + K.character_labels[phi], codegrees[phi].to_string());
    if (!props.is_algebraic_integer || props.is_totally_positive == Tri::no) {
      positive.fail("phi_" + K.character_labels[phi] + " codegree " + codegrees[phi].to_string());
    } else if (props.is_totally_positive == Tri::undecided) {
      positive.undecided("phi_" + K.character_labels[phi]);
    }
    if (codegrees[phi] != K.characters.codegrees[phi]) {
      positive.fail("phi_" + K.character_labels[phi] + ": " + codegrees[phi].to_string() + " != " +
                    K.characters.codegrees[phi].to_string());
    }
  }
  return report;
}

}  // namespace twv
