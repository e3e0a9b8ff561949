#pragma once

// Small fusion data built directly in code, independent of the bundled JSON files.

#include <memory>
#include <string>
#include <vector>

#include "twv/cyclotomic.hpp"
#include "twv/fusion.hpp"
#include "twv/verlinde.hpp"

namespace fixtures {

using twv::BasedModule;
using twv::BasedRing;
using twv::CycMatrix;
using twv::CycNum;
using twv::LabelSet;

inline CycNum sqrt2() { return CycNum::zeta(8, 1) + CycNum::zeta(8, 7); }
inline CycNum sqrt3() { return CycNum::zeta(12, 1) + CycNum::zeta(12, 11); }
inline CycNum sqrt5() { return CycNum::zeta(5, 1) - CycNum::zeta(5, 2) - CycNum::zeta(5, 3) + CycNum::zeta(5, 4); }
inline CycNum golden() { return (CycNum(1) + sqrt5()) / CycNum(2); }

inline std::shared_ptr<BasedRing> fibonacci_ring(long tau_tau_tau = 1) {
  auto R = std::make_shared<BasedRing>(LabelSet({"1", "τ"}), 0, std::vector<std::size_t>{0, 1});
  for (std::size_t b = 0; b < 2; ++b) {
    R->N(0, b, b) = 1;
    R->N(b, 0, b) = 1;
  }
  R->N(1, 1, 0) = 1;
  R->N(1, 1, 1) = tau_tau_tau;
  return R;
}

// Z/2 x Z/2 with labels 1, e, m, ψ = e m.
inline std::shared_ptr<BasedRing> toric_ring() {
  auto R = std::make_shared<BasedRing>(LabelSet({"1", "e", "m", "ψ"}), 0, std::vector<std::size_t>{0, 1, 2, 3});
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) R->N(a, b, a ^ b) = 1;
  return R;
}

// Z/n with labels "0".."n-1".
inline std::shared_ptr<BasedRing> cyclic_ring(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::size_t> star;
  for (std::size_t x = 0; x < n; ++x) {
    names.push_back(std::to_string(x));
    star.push_back((n - x) % n);
  }
  auto R = std::make_shared<BasedRing>(LabelSet(names), 0, star);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) R->N(a, b, (a + b) % n) = 1;
  return R;
}

inline std::shared_ptr<BasedRing> ising_ring() {
  auto R = std::make_shared<BasedRing>(LabelSet({"1", "σ", "ψ"}), 0, std::vector<std::size_t>{0, 1, 2});
  for (std::size_t b = 0; b < 3; ++b) {
    R->N(0, b, b) = 1;
    R->N(b, 0, b) = 1;
  }
  R->N(1, 1, 0) = 1;
  R->N(1, 1, 2) = 1;
  R->N(1, 2, 1) = 1;
  R->N(2, 1, 1) = 1;
  R->N(2, 2, 0) = 1;
  return R;
}

// Defects σ+, σ- of the toric code: e and m swap them, ψ fixes them.
inline BasedModule toric_defects(std::shared_ptr<const BasedRing> R) {
  BasedModule M(R, LabelSet({"σ+", "σ-"}));
  for (std::size_t x = 0; x < 2; ++x) {
    M.A(0, x, x) = 1;
    M.A(1, x, 1 - x) = 1;
    M.A(2, x, 1 - x) = 1;
    M.A(3, x, x) = 1;
  }
  return M;
}

inline CycMatrix matrix(std::vector<std::vector<CycNum>> rows) {
  CycMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline twv::SphericalDatum fibonacci_spherical() {
  const CycNum p = golden();
  twv::SphericalDatum s;
  s.dims_C = {1, p};
  s.dims_M = s.dims_C;
  s.S = matrix({{1, p}, {p, -1}});
  s.Scross = s.S;
  s.fixed = {0, 1};
  s.global_dim = CycNum(1) + p * p;
  return s;
}

inline CycMatrix toric_S() {
  return matrix({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}});
}

inline twv::SphericalDatum toric_spherical() {
  const CycNum r = sqrt2();
  twv::SphericalDatum s;
  s.dims_C = {1, 1, 1, 1};
  s.dims_M = {r, r};
  s.S = toric_S();
  s.Scross = matrix({{r, r}, {r, -r}});
  s.fixed = {0, 3};
  s.global_dim = 4;
  return s;
}

}  // namespace fixtures
