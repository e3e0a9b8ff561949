#include "twv/cyclotomic.hpp"

#include <mpfr.h>

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "twv/errors.hpp"

namespace twv {

namespace {

std::atomic<long> g_conductor_ceiling{1000};
std::atomic<int> g_default_precision{30};

long checked_lcm(long a, long b) {
  const long l = std::lcm(a, b);
  if (l > g_conductor_ceiling.load()) throw ConductorOverflow(l);
  return l;
}

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo Phi_n, padded to exactly phi(n) coefficients.
std::vector<Rational> reduce(Poly p, long n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) p[i - deg + j] -= c * static_cast<long>(phi[j]);
    }
  }
  p.resize(deg);
  return p;
}

// q, r with a = q*b + r, deg r < deg b. b must be trimmed and nonzero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const Rational c = r.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

int moebius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

using IntPoly = std::vector<long long>;

IntPoly int_mul_binomial(const IntPoly& p, long d) {  // p * (x^d - 1)
  IntPoly out(p.size() + d, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + d] += p[i];
    out[i] -= p[i];
  }
  return out;
}

IntPoly int_div_binomial(const IntPoly& p, long d) {  // exact p / (x^d - 1)
  IntPoly q(p.size() - d, 0);
  IntPoly r = p;
  for (std::size_t i = r.size(); i-- > static_cast<std::size_t>(d);) {
    const long long c = r[i];
    q[i - d] = c;
    r[i] -= c;
    r[i - d] += c;
  }
  return q;
}

bool is_squarefree(long m) {
  for (long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

long legendre(long a, long p) {
  long result = 1;
  long base = ((a % p) + p) % p;
  long e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : (result == 0 ? 0 : -1);
}

std::vector<long> units_mod(long n) {
  std::vector<long> out;
  if (n <= 2) return {1};
  for (long j = 1; j < n; ++j) {
    if (std::gcd(j, n) == 1) out.push_back(j);
  }
  return out;
}

// RAII handle around an mpfr_t.
class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(value_, prec); mpfr_set_zero(value_, 1); }
  ~MpReal() { mpfr_clear(value_); }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

struct MpEmbedding {
  explicit MpEmbedding(mpfr_prec_t prec) : re(prec), im(prec), bound(64) {}
  MpReal re;
  MpReal im;
  MpReal bound;  // upper bound on the absolute error of re and of im
};

mpfr_prec_t precision_for(const CycNum& a, int digits) {
  Rational abs_sum = 0;
  for (const auto& c : a.coords()) abs_sum += abs(c);
  const double scale = std::max(1.0, abs_sum.get_d()) * (a.coords().size() + 64.0);
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280949 + std::log2(scale))) + 16;
}

// Evaluates a at zeta_n -> exp(2 pi i j / n). Every elementary operation is
// rounded once; the bound (terms + 64) * sum|c_k| * 2^-prec dominates the
// accumulated rounding, with angles reduced to [0, 2 pi).
void embed_mp(const CycNum& a, long j, mpfr_prec_t prec, MpEmbedding& out) {
  const long n = a.conductor();
  MpReal angle(prec), c(prec), s(prec), coef(prec), term(prec);
  Rational abs_sum = 0;
  std::size_t terms = 0;
  mpfr_set_zero(out.re.get(), 1);
  mpfr_set_zero(out.im.get(), 1);
  for (std::size_t k = 0; k < a.coords().size(); ++k) {
    const Rational& ck = a.coords()[k];
    if (ck == 0) continue;
    ++terms;
    abs_sum += abs(ck);
    const long t = static_cast<long>((static_cast<long long>(j % n + n) * static_cast<long long>(k)) % n);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_si(angle.get(), angle.get(), 2 * t, MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), n, MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    mpfr_set_q(coef.get(), ck.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), coef.get(), c.get(), MPFR_RNDN);
    mpfr_add(out.re.get(), out.re.get(), term.get(), MPFR_RNDN);
    mpfr_mul(term.get(), coef.get(), s.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), out.im.get(), term.get(), MPFR_RNDN);
  }
  if (a.is_rational()) {
    mpfr_set_zero(out.im.get(), 1);
    mpfr_set_q(out.re.get(), a.coords()[0].get_mpq_t(), MPFR_RNDN);
  }
  mpfr_set_q(out.bound.get(), abs_sum.get_mpq_t(), MPFR_RNDU);
  mpfr_mul_ui(out.bound.get(), out.bound.get(), terms + 64, MPFR_RNDU);
  mpfr_mul_2si(out.bound.get(), out.bound.get(), -static_cast<long>(prec), MPFR_RNDU);
}

std::string mp_to_string(mpfr_srcptr x, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

long conductor_ceiling() { return g_conductor_ceiling.load(); }
void set_conductor_ceiling(long ceiling) {
  if (ceiling < 1) throw Error("conductor ceiling must be positive");
  g_conductor_ceiling.store(ceiling);
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(long n) {
  static std::mutex mutex;
  static std::map<long, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  IntPoly p{1};
  std::vector<long> denominators;
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(n / d);
    if (mu == 1) p = int_mul_binomial(p, d);
    if (mu == -1) denominators.push_back(d);
  }
  for (long d : denominators) p = int_div_binomial(p, d);
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return cache.emplace(n, std::move(p)).first->second;
}

// --- CycNum -------------------------------------------------------------------

CycNum::CycNum(Rational value) : conductor_(1), coords_{std::move(value)} {
  coords_[0].canonicalize();
}

CycNum CycNum::zeta(long n, long k) {
  if (n < 1) throw Error("conductor must be positive");
  if (n > g_conductor_ceiling.load()) throw ConductorOverflow(n);
  Poly p(n, Rational(0));
  p[((k % n) + n) % n] = 1;
  return CycNum(n, reduce(std::move(p), n));
}

CycNum CycNum::from_exponents(long n, std::span<const Rational> coeffs) {
  if (n < 1) throw Error("conductor must be positive");
  if (n > g_conductor_ceiling.load()) throw ConductorOverflow(n);
  Poly p(n, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) p[k % n] += coeffs[k];
  return CycNum(n, reduce(std::move(p), n));
}

CycNum CycNum::lifted(long m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw Error("cannot lift conductor " + std::to_string(conductor_) +
                                       " to " + std::to_string(m));
  if (m > g_conductor_ceiling.load()) throw ConductorOverflow(m);
  const long step = m / conductor_;
  if (conductor_ == 1) {
    std::vector<Rational> c(euler_phi(m), Rational(0));
    c[0] = coords_[0];
    return CycNum(m, std::move(c));
  }
  Poly p(m, Rational(0));
  for (std::size_t k = 0; k < coords_.size(); ++k) p[k * step] = coords_[k];
  return CycNum(m, reduce(std::move(p), m));
}

bool CycNum::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw Error("value " + to_string() + " is not rational");
  return coords_[0];
}

bool CycNum::is_integer() const {
  return is_rational() && coords_[0].get_den() == 1;
}

CycNum CycNum::conj() const {
  if (is_rational()) return *this;
  Poly p(conductor_, Rational(0));
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    p[(conductor_ - static_cast<long>(k)) % conductor_] += coords_[k];
  }
  return CycNum(conductor_, reduce(std::move(p), conductor_));
}

CycNum CycNum::galois(long j) const {
  const long n = conductor_;
  if (std::gcd(((j % n) + n) % n, n) != 1 && n > 1) {
    throw Error("Galois exponent " + std::to_string(j) + " is not coprime to " + std::to_string(n));
  }
  if (is_rational()) return *this;
  const long jj = ((j % n) + n) % n;
  Poly p(n, Rational(0));
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    p[static_cast<long>((static_cast<long long>(jj) * static_cast<long long>(k)) % n)] += coords_[k];
  }
  return CycNum(n, reduce(std::move(p), n));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycNum(Rational(1) / coords_[0]);
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  Poly r0;
  for (long long c : phi_int) r0.emplace_back(static_cast<long>(c));
  Poly r1 = coords_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  Poly q, r;
  while (!r1.empty()) {
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_n is irreducible.
  const Rational g = r0[0];
  for (auto& c : s0) c /= g;
  return CycNum(conductor_, reduce(std::move(s0), conductor_));
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1);
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> CycNum::approx() const { return approx(1); }

std::complex<double> CycNum::approx(long j) const {
  std::complex<double> sum = 0;
  const long n = conductor_;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    const long t = static_cast<long>((static_cast<long long>((j % n + n) % n) * static_cast<long long>(k)) % n);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
    sum += coords_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::string CycNum::to_string() const {
  if (is_rational()) return coords_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    Rational c = coords_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z" << conductor_;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

CycNum& CycNum::operator+=(const CycNum& other) {
  if (other.conductor_ == 1) {
    coords_[0] += other.coords_[0];
    return *this;
  }
  if (conductor_ != other.conductor_) {
    const long m = checked_lcm(conductor_, other.conductor_);
    *this = lifted(m);
    if (other.conductor_ != m) return *this += other.lifted(m);
  }
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  if (other.conductor_ == 1) {
    for (auto& c : coords_) c *= other.coords_[0];
    return *this;
  }
  if (conductor_ == 1) {
    const Rational scale = coords_[0];
    *this = other;
    for (auto& c : coords_) c *= scale;
    return *this;
  }
  const long m = checked_lcm(conductor_, other.conductor_);
  const CycNum a = lifted(m);
  const CycNum b = other.lifted(m);
  *this = CycNum(m, reduce(poly_mul(a.coords_, b.coords_), m));
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& other) { return *this *= other.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.conductor_ == b.conductor_) return a.coords_ == b.coords_;
  if (a.is_rational() && b.is_rational()) return a.coords_[0] == b.coords_[0];
  const long m = std::lcm(a.conductor_, b.conductor_);
  return a.lifted(m).coords_ == b.lifted(m).coords_;
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.to_string(); }

CycNum field_op(const CycNum& a, const CycNum& b, FieldOp kind) {
  switch (kind) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
  }
  throw Error("unknown field operation");
}

std::vector<CycNum> normalize_conductor(std::span<const CycNum> values) {
  long m = 1;
  for (const auto& v : values) m = checked_lcm(m, v.conductor());
  std::vector<CycNum> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.lifted(m));
  return out;
}

// --- embeddings ---------------------------------------------------------------

ComplexEnclosure galois_embed(const CycNum& a, long j, int digits, long conductor) {
  const CycNum lifted = conductor > 0 ? a.lifted(std::lcm(conductor, a.conductor())) : a;
  const long n = lifted.conductor();
  if (n > 2 && std::gcd(((j % n) + n) % n, n) != 1) {
    throw Error("embedding index " + std::to_string(j) + " is not coprime to " + std::to_string(n));
  }
  if (digits < 1) throw Error("precision must be at least one digit");
  ComplexEnclosure out;
  out.digits = digits;
  const mpfr_prec_t prec = precision_for(lifted, digits);
  MpEmbedding e(prec);
  embed_mp(lifted, j, prec, e);
  out.real = mp_to_string(e.re.get(), digits);
  out.imag = mp_to_string(e.im.get(), digits);
  out.real_approx = mpfr_get_d(e.re.get(), MPFR_RNDN);
  out.imag_approx = mpfr_get_d(e.im.get(), MPFR_RNDN);
  out.error_bound = lifted.is_rational() ? 0.0 : mpfr_get_d(e.bound.get(), MPFR_RNDU);
  return out;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    case Tri::undecided: return "undecided";
  }
  return "undecided";
}

bool is_algebraic_integer(const CycNum& a) {
  return std::all_of(a.coords().begin(), a.coords().end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

int default_precision() { return g_default_precision.load(); }
void set_default_precision(int digits) {
  if (digits < 1) throw Error("precision must be positive");
  g_default_precision.store(digits);
}

IntegralityPositivity integrality_and_positivity(const CycNum& a, int start_digits, int max_digits) {
  if (start_digits <= 0) start_digits = default_precision();
  if (max_digits < start_digits) max_digits = start_digits;
  IntegralityPositivity out;
  out.is_algebraic_integer = is_algebraic_integer(a);
  out.is_totally_real = a.conj() == a;
  if (!out.is_totally_real || a.is_zero()) {
    out.is_totally_positive = Tri::no;
    return out;
  }
  if (a.is_rational()) {
    out.is_totally_positive = a.rational_value() > 0 ? Tri::yes : Tri::no;
    return out;
  }
  for (int digits = start_digits; digits <= max_digits; digits *= 2) {
    const mpfr_prec_t prec = precision_for(a, digits);
    bool inconclusive = false;
    for (long j : units_mod(a.conductor())) {
      MpEmbedding e(prec);
      embed_mp(a, j, prec, e);
      MpReal margin(prec);
      mpfr_sub(margin.get(), e.re.get(), e.bound.get(), MPFR_RNDD);
      if (mpfr_sgn(margin.get()) > 0) continue;
      mpfr_add(margin.get(), e.re.get(), e.bound.get(), MPFR_RNDU);
      if (mpfr_sgn(margin.get()) < 0) {
        out.is_totally_positive = Tri::no;
        return out;
      }
      inconclusive = true;
    }
    if (!inconclusive) {
      out.is_totally_positive = Tri::yes;
      return out;
    }
  }
  out.is_totally_positive = Tri::undecided;
  return out;
}

bool lies_in_subfield(const CycNum& a, long m) {
  if (a.is_rational()) return true;
  const long l = checked_lcm(a.conductor(), m);
  const CycNum b = a.lifted(l);
  for (long j : units_mod(l)) {
    if (j % m != 1 % m) continue;
    if (b.galois(j) != b) return false;
  }
  return true;
}

bool as_root_of_unity(const CycNum& a, RootOfUnity* out) {
  if (a.is_zero() || a * a.conj() != CycNum(1)) return false;
  const long l = std::lcm(2L, a.conductor());
  for (long k = 1; k <= l; ++k) {
    if (l % k != 0 || a.pow(k) != CycNum(1)) continue;
    for (long j = 0; j < k; ++j) {
      if (std::gcd(j, k) == 1 && CycNum::zeta(k, j) == a) {
        if (out) *out = RootOfUnity{k, j};
        return true;
      }
    }
  }
  return false;
}

// --- square roots ---------------------------------------------------------------

CycNum real_sqrt(long m) {
  if (m < 1) throw Error("real_sqrt requires m >= 1");
  if (!is_squarefree(m)) throw Error(std::to_string(m) + " is not squarefree");
  CycNum result(1);
  long rest = m;
  for (long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    rest /= p;
    if (p == 2) {
      result *= CycNum::zeta(8, 1) + CycNum::zeta(8, 7);
      continue;
    }
    std::vector<Rational> gauss(p, Rational(0));
    for (long a = 1; a < p; ++a) gauss[a] = legendre(a, p);
    CycNum g = CycNum::from_exponents(p, gauss);
    if (p % 4 == 3) g *= CycNum::zeta(4, 3);  // g = i sqrt(p) here
    result *= g;
  }
  if (result.approx().real() < 0) result = -result;
  if (result * result != CycNum(m)) throw Error("internal: square root check failed");
  return result;
}

namespace {

CycNum sqrt_positive_rational(const Rational& q) {
  // sqrt(p/q) = s * sqrt(m) / den, where p*den = s^2 * m with m squarefree.
  mpz_class radicand = q.get_num() * q.get_den();
  mpz_class square_part = 1;
  mpz_class squarefree = 1;
  for (mpz_class p = 2; p * p <= radicand; ++p) {
    if (p > 1000000) throw Error("rational square root: radicand too large to factor");
    int e = 0;
    while (radicand % p == 0) {
      radicand /= p;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) square_part *= p;
    if (e % 2 == 1) squarefree *= p;
  }
  squarefree *= radicand;
  if (!squarefree.fits_slong_p()) throw Error("rational square root: squarefree part too large");
  return CycNum(Rational(square_part, q.get_den())) * real_sqrt(squarefree.get_si());
}

// Search Q(zeta_m) for an algebraic integer s with s^2 = t, t totally positive.
// s is totally real, so each real embedding is +-sqrt(embedding of t); all sign
// patterns are tried (principal sign +) and the integer coordinates recovered
// from the Vandermonde system are verified exactly.
bool search_integral_sqrt(const CycNum& t, long m, CycNum& out) {
  const long phi = euler_phi(m);
  const std::vector<long> units = units_mod(m);
  std::vector<long> reps;
  for (long j : units) {
    if (2 * j < m || m <= 2) reps.push_back(j);
  }
  std::vector<double> roots(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto v = t.approx(units[i]);
    if (v.real() <= 0) return false;
    roots[i] = std::sqrt(v.real());
  }
  Eigen::MatrixXcd vandermonde(phi, phi);
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (long k = 0; k < phi; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((units[i] * k) % m) / m;
      vandermonde(static_cast<long>(i), k) = std::polar(1.0, angle);
    }
  }
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(vandermonde);
  const std::size_t free_signs = reps.size() - 1;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << free_signs); ++pattern) {
    Eigen::VectorXcd rhs(phi);
    for (std::size_t i = 0; i < units.size(); ++i) {
      const long j = units[i];
      const long rep = std::min(j, m - j);
      const auto pos = std::find(reps.begin(), reps.end(), m <= 2 ? j : rep) - reps.begin();
      const bool negative = pos > 0 && ((pattern >> (pos - 1)) & 1U);
      rhs(static_cast<long>(i)) = negative ? -roots[i] : roots[i];
    }
    const Eigen::VectorXcd coords = lu.solve(rhs);
    std::vector<Rational> candidate(phi);
    bool near_integral = true;
    for (long k = 0; k < phi && near_integral; ++k) {
      const double re = coords(k).real();
      const double r = std::round(re);
      if (std::abs(re - r) > 1e-6 || std::abs(coords(k).imag()) > 1e-6) near_integral = false;
      candidate[k] = Rational(static_cast<long>(r));
    }
    if (!near_integral) continue;
    CycNum s = CycNum::from_exponents(m, candidate);
    if (s * s == t) {
      out = s.approx().real() < 0 ? -s : s;
      return true;
    }
  }
  return false;
}

}  // namespace

CycNum sqrt_totally_positive(const CycNum& a) {
  if (a.is_zero()) return CycNum(0);
  if (a.is_rational()) {
    const Rational q = a.rational_value();
    if (q < 0) throw Error("square root of a negative rational is not totally real");
    return sqrt_positive_rational(q);
  }
  mpz_class den = 1;
  for (const auto& c : a.coords()) den = lcm(den, mpz_class(c.get_den()));
  const CycNum t = a * CycNum(Rational(den * den));
  const long n = a.conductor();
  std::vector<long> candidates;
  for (long extra : {1L, 4L, 8L, 3L, 12L, 5L, 24L, 20L, 40L, 7L, 16L}) {
    const long m = std::lcm(n, extra);
    if (m > conductor_ceiling() || euler_phi(m) > 24) continue;
    if (std::find(candidates.begin(), candidates.end(), m) == candidates.end()) candidates.push_back(m);
  }
  for (long m : candidates) {
    CycNum s;
    if (search_integral_sqrt(t, m, s)) return s / CycNum(Rational(den));
  }
  throw Error("no cyclotomic square root found for " + a.to_string());
}

}  // namespace twv
