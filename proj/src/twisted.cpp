#include "twv/twisted.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "twv/errors.hpp"

namespace twv {

namespace {

std::string pair_witness(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

std::vector<std::size_t> fixed_characters(const CharacterTable& table, std::span<const std::size_t> F,
                                          std::optional<std::size_t> module_rank) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& values = table.rows[i].values;
    if (F.size() != values.size()) throw CheckFailure("F is not defined on the character labels");
    bool fixed = true;
    for (std::size_t c = 0; c < values.size() && fixed; ++c) fixed = values[F[c]] == values[c];
    if (fixed) out.push_back(i);
  }
  if (module_rank && out.size() != *module_rank) {
    throw CheckFailure(std::to_string(out.size()) + " F-fixed characters but the module has rank " +
                       std::to_string(*module_rank));
  }
  return out;
}

std::vector<std::size_t> fixed_characters(const NumericCharacterTable& table, std::span<const std::size_t> F,
                                          std::optional<std::size_t> module_rank, double tolerance) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& values = table.rows[i].values;
    if (F.size() != values.size()) throw CheckFailure("F is not defined on the character labels");
    bool fixed = true;
    for (std::size_t c = 0; c < values.size() && fixed; ++c) {
      fixed = std::abs(values[F[c]] - values[c]) <= tolerance * std::max(1.0, std::abs(values[c]));
    }
    if (fixed) out.push_back(i);
  }
  if (module_rank && out.size() != *module_rank) {
    throw CheckFailure(std::to_string(out.size()) + " F-fixed numeric characters but the module has rank " +
                       std::to_string(*module_rank));
  }
  return out;
}

CycMatrix twisted_projector(const Character& rho, const BasedModule& dual) {
  const BasedRing& ring = dual.ring();
  const std::size_t m = dual.rank();
  CycMatrix P(m, m);
  for (std::size_t c = 0; c < ring.rank(); ++c) {
    if (rho.values[c].is_zero()) continue;
    const std::size_t cs = ring.star(c);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        if (const long a = dual.A(cs, p, q); a != 0) P(q, p) += rho.values[c] * CycNum(a);
      }
  }
  const CycNum inv = rho.codegree.inverse();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) P(q, p) *= inv;
  return P;
}

std::vector<TwistedCharacter> extract_twisted_characters(const CharacterTable& table,
                                                         std::span<const std::size_t> fixed,
                                                         const BasedModule& module, const BasedModule& dual) {
  const std::size_t m = dual.rank();
  if (module.rank() != m) throw CheckFailure("module and dual module ranks differ");
  std::vector<TwistedCharacter> out;
  for (std::size_t idx : fixed) {
    const Character& rho = table.rows.at(idx);
    const CycMatrix P = twisted_projector(rho, dual);
    const std::size_t rank = exact_rank(P);
    if (rank != 1) {
      throw CheckFailure("projector of " + rho.label + " on K(M^-1) has rank " + std::to_string(rank) +
                         ", expected 1");
    }
    std::vector<CycNum> v;
    for (std::size_t col = 0; col < m && v.empty(); ++col) {
      std::vector<CycNum> column(m);
      bool nonzero = false;
      for (std::size_t row = 0; row < m; ++row) {
        column[row] = P(row, col);
        nonzero = nonzero || !column[row].is_zero();
      }
      if (nonzero) v = std::move(column);
    }
    if (v.empty()) throw CheckFailure("projector image of " + rho.label + " is zero");
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    const CycNum inv_lead = v[lead].inverse();
    for (auto& x : v) x *= inv_lead;
    const CycNum norm = hermitian_form(v, v);
    const CycNum scale = sqrt_totally_positive(rho.codegree / norm);
    TwistedCharacter tw;
    tw.base = idx;
    tw.label = rho.label;
    for (auto& x : v) tw.vector.push_back(x * scale);
    for (std::size_t x = 0; x < module.rank(); ++x) tw.values.push_back(tw.vector[module.star(x)]);
    out.push_back(std::move(tw));
  }
  return out;
}

std::vector<NumericTwistedCharacter> extract_twisted_characters(const NumericCharacterTable& table,
                                                                std::span<const std::size_t> fixed,
                                                                const BasedModule& module, const BasedModule& dual,
                                                                double tolerance) {
  const BasedRing& ring = dual.ring();
  const long m = static_cast<long>(dual.rank());
  std::vector<NumericTwistedCharacter> out;
  for (std::size_t idx : fixed) {
    const NumericCharacter& rho = table.rows.at(idx);
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(m, m);
    for (std::size_t c = 0; c < ring.rank(); ++c) {
      const std::size_t cs = ring.star(c);
      for (long p = 0; p < m; ++p)
        for (long q = 0; q < m; ++q) P(q, p) += rho.values[c] * static_cast<double>(dual.A(cs, p, q));
    }
    P /= rho.codegree;
    if ((P * P - P).norm() > 1e3 * tolerance * std::max(1.0, P.norm()) ||
        std::abs(P.trace() - 1.0) > 1e3 * tolerance) {
      throw CheckFailure("numeric projector of " + rho.label + " is not a rank-one idempotent");
    }
    long best = 0;
    for (long col = 1; col < m; ++col) {
      if (P.col(col).norm() > P.col(best).norm()) best = col;
    }
    Eigen::VectorXcd v = P.col(best);
    long lead = 0;
    while (lead < m && std::abs(v(lead)) < 1e-8 * v.norm()) ++lead;
    if (lead == m) throw CheckFailure("numeric projector image of " + rho.label + " is zero");
    v /= v(lead);
    const double scale = std::sqrt(rho.codegree.real() / v.squaredNorm());
    NumericTwistedCharacter tw;
    tw.base = idx;
    tw.label = rho.label;
    for (long i = 0; i < m; ++i) tw.vector.push_back(v(i) * scale);
    for (std::size_t x = 0; x < module.rank(); ++x) tw.values.push_back(tw.vector[module.star(x)]);
    out.push_back(std::move(tw));
  }
  return out;
}

Report verify_twisted_orthogonality(const CharacterTable& table, std::span<const TwistedCharacter> twisted) {
  Report report;
  report.title = "twisted orthogonality";
  auto& check = report.add("<t~alpha_rho, t~alpha_rho'> = delta f_rho");
  for (std::size_t i = 0; i < twisted.size(); ++i)
    for (std::size_t j = 0; j < twisted.size(); ++j) {
      const CycNum inner = hermitian_form(twisted[i].vector, twisted[j].vector);
      const CycNum expect = i == j ? table.rows[twisted[i].base].codegree : CycNum(0);
      if (inner != expect) check.fail(pair_witness(twisted[i].label, twisted[j].label));
    }
  return report;
}

Report verify_twisted_action(const CharacterTable& table, std::span<const TwistedCharacter> twisted,
                             const BasedModule& dual) {
  Report report;
  report.title = "twisted action";
  auto& action = report.add("alpha_rho' t~alpha_rho = delta f_rho t~alpha_rho");
  for (const auto& tw : twisted) {
    for (std::size_t k = 0; k < table.size(); ++k) {
      const auto& rho = table.rows[k];
      const auto image = module_act(dual, rho.alpha, tw.vector);
      std::vector<CycNum> expect(tw.vector.size());
      if (k == tw.base) {
        for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = rho.codegree * tw.vector[i];
      }
      if (image != expect) action.fail(pair_witness(rho.label, tw.label));
    }
  }
  auto& span = report.add("t~alpha span K(M^-1)");
  CycMatrix rows(twisted.size(), dual.rank());
  for (std::size_t i = 0; i < twisted.size(); ++i)
    for (std::size_t j = 0; j < dual.rank(); ++j) rows(i, j) = twisted[i].vector[j];
  const std::size_t rank = exact_rank(rows);
  span.note("rank", std::to_string(rank));
  if (rank != dual.rank()) span.fail("rank " + std::to_string(rank) + " < " + std::to_string(dual.rank()));
  return report;
}

BridgeResult crossed_S_bridge(const CharacterTable& table, std::span<const TwistedCharacter> twisted,
                              std::span<const CycNum> dims, const CycMatrix* supplied) {
  BridgeResult result;
  const std::size_t cols = twisted.empty() ? 0 : twisted.front().values.size();
  result.computed = CycMatrix(twisted.size(), cols);
  for (std::size_t i = 0; i < twisted.size(); ++i) {
    const CycNum& d = dims[twisted[i].base];
    for (std::size_t j = 0; j < cols; ++j) result.computed(i, j) = d * twisted[i].values[j];
  }
  if (!supplied) return result;
  if (supplied->rows() != result.computed.rows() || supplied->cols() != cols) {
    throw CheckFailure("supplied crossed S-matrix has the wrong shape");
  }
  for (std::size_t i = 0; i < twisted.size(); ++i) {
    const std::string& label = table.rows[twisted[i].base].label;
    std::size_t lead = 0;
    while (lead < cols && result.computed(i, lead).is_zero()) ++lead;
    if (lead == cols) throw CheckFailure("computed crossed S row " + label + " vanishes");
    const CycNum phase = (*supplied)(i, lead) / result.computed(i, lead);
    for (std::size_t j = 0; j < cols; ++j) {
      if ((*supplied)(i, j) != phase * result.computed(i, j)) {
        throw CheckFailure("crossed S row " + label + " is not a multiple of the computed row");
      }
    }
    RowPhase rp{label, phase, {}};
    if (!as_root_of_unity(phase, &rp.root)) {
      throw CheckFailure("crossed S row " + label + " differs by " + phase.to_string() +
                         ", which is not a root of unity");
    }
    result.phases.push_back(std::move(rp));
  }
  return result;
}

Report verify_crossed_unitarity(const CycMatrix& crossed, const CycNum& global_dim) {
  Report report;
  report.title = "crossed unitarity";
  auto& shape = report.add("square |O_C^F| = |O_M|");
  if (crossed.rows() != crossed.cols()) {
    shape.fail(std::to_string(crossed.rows()) + "x" + std::to_string(crossed.cols()));
    return report;
  }
  const std::size_t n = crossed.rows();
  const CycMatrix left = crossed * conj_transpose(crossed);
  const CycMatrix right = conj_transpose(crossed) * crossed;
  auto& l = report.add("X X^dagger = dim C I");
  auto& r = report.add("X^dagger X = dim C I");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CycNum expect = i == j ? global_dim : CycNum(0);
      if (left(i, j) != expect) l.fail("(" + std::to_string(i) + "," + std::to_string(j) + ") = " + left(i, j).to_string());
      if (right(i, j) != expect) r.fail("(" + std::to_string(i) + "," + std::to_string(j) + ") = " + right(i, j).to_string());
    }
  return report;
}

Report verify_integrality_ratios(const CycMatrix& crossed, std::span<const CycNum> dims_fixed,
                                 std::span<const CycNum> dims_module, const CycNum& global_dim) {
  Report report;
  report.title = "crossed integrality";
  auto& byc = report.add("X(C,M) / dim C algebraic integer");
  auto& bym = report.add("X(C,M) / dim M algebraic integer");
  if (dims_fixed.size() != crossed.rows() || dims_module.size() != crossed.cols()) {
    byc.fail("dimension vectors do not match the crossed S shape");
    return report;
  }
  for (std::size_t i = 0; i < crossed.rows(); ++i)
    for (std::size_t j = 0; j < crossed.cols(); ++j) {
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!is_algebraic_integer(crossed(i, j) / dims_fixed[i])) byc.fail(at);
      if (!is_algebraic_integer(crossed(i, j) / dims_module[j])) bym.fail(at);
    }
  auto& norm = report.add("dim C = sum dim(M)^2");
  CycNum sum;
  for (const auto& d : dims_module) sum += d * d;
  if (sum != global_dim) norm.fail(sum.to_string() + " != " + global_dim.to_string());
  return report;
}

}  // namespace twv
