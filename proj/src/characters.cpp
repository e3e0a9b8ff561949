#include "twv/characters.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "twv/errors.hpp"

namespace twv {

namespace {

std::string pair_witness(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

// Lexicographic on (re, im) of each entry, treating differences below 1e-7 as ties.
bool numeric_row_less(const NumericCharacter& a, const NumericCharacter& b) {
  constexpr double eps = 1e-7;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const auto x = a.values[i];
    const auto y = b.values[i];
    if (std::abs(x.real() - y.real()) > eps) return x.real() < y.real();
    if (std::abs(x.imag() - y.imag()) > eps) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

CycMatrix CharacterTable::matrix() const {
  if (rows.empty()) return {};
  CycMatrix m(rows.size(), rows.front().values.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].values.size(); ++j) m(i, j) = rows[i].values[j];
  return m;
}

CycMatrix CharacterTable::codegree_matrix() const {
  CycMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) m(i, i) = rows[i].codegree;
  return m;
}

bool is_multiplicative(const BasedRing& ring, std::span<const CycNum> values, std::string* witness) {
  const std::size_t r = ring.rank();
  if (values[ring.unit()] != CycNum(1)) {
    if (witness) *witness = "value at unit is not 1";
    return false;
  }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      CycNum rhs;
      for (std::size_t c = 0; c < r; ++c) {
        if (const long n = ring.N(a, b, c); n != 0) rhs += CycNum(n) * values[c];
      }
      if (values[a] * values[b] != rhs) {
        if (witness) *witness = pair_witness(ring.labels().name(a), ring.labels().name(b));
        return false;
      }
    }
  return true;
}

void alpha_and_codegree(const BasedRing& ring, Character& rho) {
  const std::size_t r = ring.rank();
  rho.alpha.assign(r, CycNum());
  CycNum f;
  for (std::size_t c = 0; c < r; ++c) {
    rho.alpha[ring.star(c)] = rho.values[c];
    f += rho.values[c] * rho.values[ring.star(c)];
  }
  if (f.is_zero()) throw CheckFailure("character " + rho.label + " has zero codegree");
  const auto props = integrality_and_positivity(f);
  if (!props.is_algebraic_integer) {
    throw CheckFailure("codegree of " + rho.label + " is not an algebraic integer: " + f.to_string());
  }
  if (props.is_totally_positive == Tri::no) {
    throw CheckFailure("codegree of " + rho.label + " is not totally positive: " + f.to_string());
  }
  rho.codegree = f;
  rho.codegree_positive = props.is_totally_positive;
}

void alpha_and_codegree(const BasedRing& ring, NumericCharacter& rho) {
  const std::size_t r = ring.rank();
  rho.alpha.assign(r, 0.0);
  std::complex<double> f = 0;
  for (std::size_t c = 0; c < r; ++c) {
    rho.alpha[ring.star(c)] = rho.values[c];
    f += rho.values[c] * rho.values[ring.star(c)];
  }
  if (std::abs(f) < 1e-12) throw CheckFailure("numeric character " + rho.label + " has zero codegree");
  rho.codegree = f;
}

CharacterTable characters_from_S(const BasedRing& ring, const CycMatrix& S, std::span<const CycNum> dims) {
  const std::size_t r = ring.rank();
  if (S.rows() != r || S.cols() != r) throw CheckFailure("S-matrix must be square over the ring labels");
  if (dims.size() != r) throw CheckFailure("dimension vector has the wrong length");
  for (std::size_t c = 0; c < r; ++c) {
    if (dims[c].is_zero()) throw CheckFailure("dimension of " + ring.labels().name(c) + " is zero");
    if (S(ring.unit(), c) != dims[c]) {
      throw CheckFailure("S row of the unit differs from dims at " + ring.labels().name(c));
    }
  }
  CharacterTable table;
  for (std::size_t c = 0; c < r; ++c) {
    Character rho;
    rho.label = ring.labels().name(c);
    const CycNum inv = dims[c].inverse();
    for (std::size_t d = 0; d < r; ++d) rho.values.push_back(S(c, d) * inv);
    std::string witness;
    if (!is_multiplicative(ring, rho.values, &witness)) {
      throw CheckFailure("row " + rho.label + " of S/dim is not multiplicative at " + witness);
    }
    alpha_and_codegree(ring, rho);
    table.rows.push_back(std::move(rho));
  }
  return table;
}

NumericCharacterTable characters_numeric(const BasedRing& ring, double tolerance, std::uint64_t seed) {
  const long r = static_cast<long>(ring.rank());
  std::vector<Eigen::MatrixXd> fusion(r, Eigen::MatrixXd::Zero(r, r));
  for (long a = 0; a < r; ++a)
    for (long b = 0; b < r; ++b)
      for (long c = 0; c < r; ++c) fusion[a](c, b) = static_cast<double>(ring.N(a, b, c));

  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= kEigenRetryBound; ++attempt) {
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
    for (long a = 0; a < r; ++a) combo += static_cast<double>(1 + rng() % 997) / 997.0 * fusion[a];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<std::complex<double>>());
    if (solver.info() != Eigen::Success) continue;
    const auto& lambda = solver.eigenvalues();
    double scale = 1.0;
    for (long i = 0; i < r; ++i) scale = std::max(scale, std::abs(lambda(i)));
    bool collision = false;
    for (long i = 0; i < r && !collision; ++i)
      for (long j = i + 1; j < r; ++j) {
        if (std::abs(lambda(i) - lambda(j)) < 1e-6 * scale) {
          collision = true;
          break;
        }
      }
    if (collision) continue;

    NumericCharacterTable table;
    table.attempts = attempt;
    table.seed_used = seed;
    bool consistent = true;
    for (long i = 0; i < r && consistent; ++i) {
      const Eigen::VectorXcd v = solver.eigenvectors().col(i);
      const std::complex<double> norm = v.squaredNorm();
      NumericCharacter rho;
      for (long a = 0; a < r; ++a) rho.values.push_back(v.dot(fusion[a].cast<std::complex<double>>() * v) / norm);
      for (long a = 0; a < r && consistent; ++a)
        for (long b = 0; b < r; ++b) {
          std::complex<double> rhs = 0;
          double magnitude = 1.0;
          for (long c = 0; c < r; ++c) {
            rhs += static_cast<double>(ring.N(a, b, c)) * rho.values[c];
            magnitude += ring.N(a, b, c) * std::abs(rho.values[c]);
          }
          if (std::abs(rho.values[a] * rho.values[b] - rhs) > tolerance * magnitude) {
            consistent = false;
            break;
          }
        }
      table.rows.push_back(std::move(rho));
    }
    if (!consistent) continue;
    std::sort(table.rows.begin(), table.rows.end(), numeric_row_less);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      table.rows[i].label = "#" + std::to_string(i);
      alpha_and_codegree(ring, table.rows[i]);
    }
    return table;
  }
  throw CheckFailure("numeric characters: eigenvalues stayed degenerate after " + std::to_string(kEigenRetryBound) +
                     " attempts (non-semisimple input?)");
}

Report verify_character_orthogonality(const CharacterTable& table) {
  Report report;
  report.title = "character orthogonality";
  auto& ortho = report.add("<alpha_rho, alpha_rho'> = delta f_rho");
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      const CycNum inner = hermitian_form(table.rows[i].alpha, table.rows[j].alpha);
      const CycNum expect = i == j ? table.rows[i].codegree : CycNum(0);
      if (inner != expect) ortho.fail(pair_witness(table.rows[i].label, table.rows[j].label));
    }
  auto& matrix = report.add("Ch Ch^dagger = Codeg");
  const CycMatrix ch = table.matrix();
  const CycMatrix gram = ch * conj_transpose(ch);
  const CycMatrix codeg = table.codegree_matrix();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      if (gram(i, j) != codeg(i, j)) matrix.fail(pair_witness(table.rows[i].label, table.rows[j].label));
    }
  auto& positive = report.add("codegrees totally positive");
  for (const auto& row : table.rows) {
    const auto props = integrality_and_positivity(row.codegree);
    if (!props.is_algebraic_integer || props.is_totally_positive == Tri::no) {
      positive.fail(row.label + ": " + row.codegree.to_string());
    } else if (props.is_totally_positive == Tri::undecided) {
      positive.undecided(row.label);
    }
  }
  return report;
}

Report verify_character_orthogonality(const NumericCharacterTable& table, double tolerance) {
  Report report;
  report.title = "numeric character orthogonality";
  auto& ortho = report.add("<alpha_rho, alpha_rho'> = delta f_rho (numeric)");
  double worst = 0;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      std::complex<double> inner = 0;
      for (std::size_t c = 0; c < table.rows[i].alpha.size(); ++c) {
        inner += table.rows[i].alpha[c] * std::conj(table.rows[j].alpha[c]);
      }
      const std::complex<double> expect = i == j ? table.rows[i].codegree : 0.0;
      const double err = std::abs(inner - expect) / std::max(1.0, std::abs(table.rows[i].codegree));
      worst = std::max(worst, err);
      if (err > tolerance) ortho.fail(pair_witness(table.rows[i].label, table.rows[j].label));
    }
  ortho.note("max relative error", std::to_string(worst));
  return report;
}

Report verify_minimal_idempotents(const BasedRing& ring, const CharacterTable& table) {
  Report report;
  report.title = "minimal idempotents";
  auto& check = report.add("alpha_rho / f_rho are orthogonal idempotents");
  std::vector<std::vector<CycNum>> idem;
  for (const auto& row : table.rows) {
    const CycNum inv = row.codegree.inverse();
    std::vector<CycNum> e;
    for (const auto& a : row.alpha) e.push_back(a * inv);
    idem.push_back(std::move(e));
  }
  const std::vector<CycNum> zero(ring.rank());
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = i; j < idem.size(); ++j) {
      const auto product = ring_multiply(ring, idem[i], idem[j]);
      if (product != (i == j ? idem[i] : zero)) check.fail(pair_witness(table.rows[i].label, table.rows[j].label));
    }
  return report;
}

Report codegree_spherical_check(const CharacterTable& table, std::span<const CycNum> dims, const CycNum& global_dim) {
  Report report;
  report.title = "spherical codegrees";
  auto& total = report.add("dim C = sum dim^2");
  CycNum sum;
  for (const auto& d : dims) sum += d * d;
  if (sum != global_dim) total.fail("sum of squares " + sum.to_string() + " != " + global_dim.to_string());
  auto& codeg = report.add("f_{phi_C} = dim C / dim(C)^2");
  if (table.size() != dims.size()) {
    codeg.fail("table has " + std::to_string(table.size()) + " rows for " + std::to_string(dims.size()) + " labels");
    return report;
  }
  for (std::size_t c = 0; c < table.size(); ++c) {
    const CycNum expect = global_dim / (dims[c] * dims[c]);
    codeg.note(table.rows[c].label, table.rows[c].codegree.to_string());
    if (table.rows[c].codegree != expect) codeg.fail(table.rows[c].label);
  }
  return report;
}

double table_distance(const CharacterTable& exact, const NumericCharacterTable& numeric) {
  const std::size_t r = exact.size();
  if (numeric.size() != r) return std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> cost(r, std::vector<double>(r, 0.0));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::complex<double>> approx;
    for (const auto& v : exact.rows[i].values) approx.push_back(v.approx());
    for (std::size_t j = 0; j < r; ++j) {
      if (numeric.rows[j].values.size() != approx.size()) return std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < approx.size(); ++c) {
        cost[i][j] = std::max(cost[i][j], std::abs(approx[c] - numeric.rows[j].values[c]));
      }
    }
  }
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  if (r <= 8) {
    do {
      double worst = 0;
      for (std::size_t i = 0; i < r; ++i) worst = std::max(worst, cost[i][perm[i]]);
      best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }
  std::vector<bool> used(r, false);
  best = 0;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t pick = r;
    for (std::size_t j = 0; j < r; ++j) {
      if (!used[j] && (pick == r || cost[i][j] < cost[i][pick])) pick = j;
    }
    used[pick] = true;
    best = std::max(best, cost[i][pick]);
  }
  return best;
}

}  // namespace twv
