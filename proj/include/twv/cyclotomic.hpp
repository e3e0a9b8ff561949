#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace twv {

using Rational = mpq_class;

/// Conductor ceiling shared by every lcm computation. Default 1000.
long conductor_ceiling();
void set_conductor_ceiling(long ceiling);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(long n);
long euler_phi(long n);

/// An element of Q(zeta_n), stored in the power basis 1, z, ..., z^(phi(n)-1).
///
/// Coordinates are always reduced modulo the n-th cyclotomic polynomial, so two
/// values with the same conductor are equal iff their coordinates agree. The
/// conductor need not be minimal; comparisons lift to the lcm first.
class CycNum {
 public:
  CycNum() : CycNum(Rational(0)) {}
  CycNum(long value) : CycNum(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  CycNum(int value) : CycNum(Rational(value)) {}   // NOLINT(google-explicit-constructor)
  CycNum(Rational value);                          // NOLINT(google-explicit-constructor)

  /// zeta_n^k.
  static CycNum zeta(long n, long k = 1);

  /// Sum of coeffs[k] * zeta_n^k for arbitrary k >= 0 (reduced mod n, then mod Phi_n).
  static CycNum from_exponents(long n, std::span<const Rational> coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coords() const { return coords_; }

  /// Same field element written at conductor m (a multiple of the current conductor).
  CycNum lifted(long m) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Throws if the value is not rational.
  Rational rational_value() const;
  /// True iff the value is a rational integer.
  bool is_integer() const;

  CycNum conj() const;
  /// Galois automorphism zeta_n -> zeta_n^j, gcd(j, n) = 1.
  CycNum galois(long j) const;
  CycNum inverse() const;
  CycNum pow(long e) const;

  /// Principal embedding zeta_n -> exp(2 pi i / n) in double precision.
  std::complex<double> approx() const;
  /// Embedding zeta_n -> exp(2 pi i j / n) in double precision.
  std::complex<double> approx(long j) const;

  std::string to_string() const;

  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

 private:
  CycNum(long conductor, std::vector<Rational> coords)
      : conductor_(conductor), coords_(std::move(coords)) {}

  long conductor_ = 1;
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& a);

enum class FieldOp { add, sub, mul, div };
CycNum field_op(const CycNum& a, const CycNum& b, FieldOp kind);

/// Lift every value to the lcm of all conductors.
std::vector<CycNum> normalize_conductor(std::span<const CycNum> values);

// --- embeddings -------------------------------------------------------------

/// A complex number known to lie within `error_bound` (in each of the real and
/// imaginary parts) of (real, imag).
struct ComplexEnclosure {
  std::string real;
  std::string imag;
  double real_approx = 0;
  double imag_approx = 0;
  double error_bound = 0;  // rounded up
  int digits = 0;
};

/// Evaluate the embedding zeta_n -> exp(2 pi i j / n) where n is the conductor of
/// `a` lifted to `conductor` (0 keeps a's conductor).
ComplexEnclosure galois_embed(const CycNum& a, long j, int digits = 30, long conductor = 0);

enum class Tri { no, yes, undecided };
std::string to_string(Tri t);

struct IntegralityPositivity {
  bool is_algebraic_integer = false;
  bool is_totally_real = false;
  Tri is_totally_positive = Tri::no;
};

/// Default starting precision in decimal digits for positivity decisions. 30.
int default_precision();
void set_default_precision(int digits);

/// Starting precision (decimal digits, 0 for the default) for positivity
/// decisions; doubled until every embedding is separated from zero or
/// `max_digits` is passed.
IntegralityPositivity integrality_and_positivity(const CycNum& a, int start_digits = 0,
                                                 int max_digits = 960);

/// Power-basis integrality, which characterises Z[zeta_n].
bool is_algebraic_integer(const CycNum& a);

/// True iff `a` lies in the subfield Q(zeta_m).
bool lies_in_subfield(const CycNum& a, long m);

/// If `a` is a root of unity, returns (k, j) with a = exp(2 pi i j / k) and k minimal.
struct RootOfUnity {
  long order = 0;
  long exponent = 0;
};
bool as_root_of_unity(const CycNum& a, RootOfUnity* out = nullptr);

// --- square roots ------------------------------------------------------------

/// sqrt(m) for squarefree m >= 1, positive under the principal embedding, built
/// from quadratic Gauss sums.
CycNum real_sqrt(long m);

/// Square root of a totally positive value, positive under the principal
/// embedding. Rationals are always handled; other values are searched for in a
/// few cyclotomic overfields and verified exactly. Throws if none is found.
CycNum sqrt_totally_positive(const CycNum& a);

}  // namespace twv
