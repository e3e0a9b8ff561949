#include "twv/fusion.hpp"

#include <algorithm>
#include <sstream>

#include "twv/errors.hpp"

namespace twv {

namespace {

template <typename... Names>
std::string tuple_witness(const Names&... names) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  ((os << (first ? "" : ",") << names, first = false), ...);
  os << ")";
  return os.str();
}

bool is_permutation_of(std::span<const std::size_t> perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

}  // namespace

// --- LabelSet -------------------------------------------------------------------

LabelSet::LabelSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw Error("duplicate label '" + names_[i] + "'");
  }
}

std::optional<std::size_t> LabelSet::find(const std::string& name) const {
  if (auto it = index_.find(name); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t LabelSet::index(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw Error("unknown label '" + name + "'");
}

// --- BasedRing / BasedModule -------------------------------------------------------

BasedRing::BasedRing(LabelSet labels, std::size_t unit, std::vector<std::size_t> star)
    : labels_(std::move(labels)), unit_(unit), star_(std::move(star)) {
  const std::size_t r = labels_.size();
  if (unit_ >= r) throw Error("unit label out of range");
  if (star_.empty()) {
    star_.resize(r);
    for (std::size_t i = 0; i < r; ++i) star_[i] = i;
  }
  if (star_.size() != r) throw Error("star must be defined on every label");
  constants_.assign(r * r * r, 0);
}

BasedModule::BasedModule(std::shared_ptr<const BasedRing> ring, LabelSet labels, std::vector<std::size_t> star)
    : ring_(std::move(ring)), labels_(std::move(labels)), star_(std::move(star)) {
  if (!ring_) throw Error("module requires a ring");
  const std::size_t r = labels_.size();
  if (star_.empty()) {
    star_.resize(r);
    for (std::size_t i = 0; i < r; ++i) star_[i] = i;
  }
  if (star_.size() != r) throw Error("module star must be defined on every label");
  constants_.assign(ring_->rank() * r * r, 0);
}

// --- validation ------------------------------------------------------------------

Report validate_based_ring(const BasedRing& ring) {
  Report report;
  report.title = "based ring";
  const std::size_t r = ring.rank();
  const auto& L = ring.labels();

  auto& star = report.add("star involution");
  if (!is_permutation_of(ring.star(), r)) {
    star.fail("star is not a permutation");
    return report;
  }
  for (std::size_t a = 0; a < r; ++a) {
    if (ring.star(ring.star(a)) != a) star.fail(tuple_witness(L.name(a)));
  }
  if (ring.star(ring.unit()) != ring.unit()) star.fail("unit is not self-dual");

  auto& nonneg = report.add("non-negativity");
  auto& comm = report.add("commutativity");
  auto& unit = report.add("unit");
  auto& duality = report.add("duality");
  auto& rigidity = report.add("rigidity");
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      const long delta_unit = b == ring.star(a) ? 1 : 0;
      if (ring.N(a, b, ring.unit()) != delta_unit) duality.fail(tuple_witness(L.name(a), L.name(b)));
      for (std::size_t c = 0; c < r; ++c) {
        const long n = ring.N(a, b, c);
        if (n < 0) nonneg.fail(tuple_witness(L.name(a), L.name(b), L.name(c)));
        if (n != ring.N(b, a, c)) comm.fail(tuple_witness(L.name(a), L.name(b), L.name(c)));
        if (n != ring.N(a, ring.star(c), ring.star(b))) {
          rigidity.fail(tuple_witness(L.name(a), L.name(b), L.name(c)));
        }
      }
      const long expect = a == b ? 1 : 0;
      if (ring.N(ring.unit(), a, b) != expect) unit.fail(tuple_witness(L.name(ring.unit()), L.name(a), L.name(b)));
    }
  }

  auto& assoc = report.add("associativity");
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = 0; d < r; ++d) {
          long lhs = 0;
          long rhs = 0;
          for (std::size_t e = 0; e < r; ++e) {
            lhs += ring.N(a, b, e) * ring.N(e, c, d);
            rhs += ring.N(b, c, e) * ring.N(a, e, d);
          }
          if (lhs != rhs) assoc.fail(tuple_witness(L.name(a), L.name(b), L.name(c), L.name(d)));
        }
  return report;
}

Report validate_based_module(const BasedModule& module) {
  Report report;
  report.title = "based module";
  const BasedRing& ring = module.ring();
  const std::size_t r = ring.rank();
  const std::size_t m = module.rank();
  const auto& L = ring.labels();
  const auto& ML = module.labels();

  auto& nonneg = report.add("non-negativity");
  auto& unit = report.add("unit action");
  auto& rigidity = report.add("rigidity");
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        if (module.A(c, x, y) < 0) nonneg.fail(tuple_witness(L.name(c), ML.name(x), ML.name(y)));
        if (module.A(c, x, y) != module.A(ring.star(c), y, x)) {
          rigidity.fail(tuple_witness(L.name(c), ML.name(x), ML.name(y)));
        }
      }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (module.A(ring.unit(), x, y) != (x == y ? 1 : 0)) unit.fail(tuple_witness(L.name(ring.unit()), ML.name(x), ML.name(y)));
    }

  auto& assoc = report.add("module associativity");
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          long lhs = 0;
          long rhs = 0;
          for (std::size_t e = 0; e < r; ++e) lhs += ring.N(a, b, e) * module.A(e, x, y);
          for (std::size_t p = 0; p < m; ++p) rhs += module.A(b, x, p) * module.A(a, p, y);
          if (lhs != rhs) assoc.fail(tuple_witness(L.name(a), L.name(b), ML.name(x), ML.name(y)));
        }
  return report;
}

Report validate_graded_datum(const GradedFusionDatum& datum) {
  Report report;
  report.title = "graded datum";
  const BasedRing& ring = *datum.ring;
  const std::size_t r = ring.rank();
  const auto& L = ring.labels();

  auto& modulus = report.add("grading modulus");
  if (datum.modulus < 1) modulus.fail("N = " + std::to_string(datum.modulus));

  auto& perm = report.add("F permutation");
  if (!is_permutation_of(datum.F, r)) {
    perm.fail("F is not a permutation of the ring labels");
    return report;
  }
  if (datum.F[ring.unit()] != ring.unit()) perm.fail("F moves the unit");

  auto& star = report.add("F commutes with star");
  for (std::size_t a = 0; a < r; ++a) {
    if (datum.F[ring.star(a)] != ring.star(datum.F[a])) star.fail(tuple_witness(L.name(a)));
  }

  auto& constants = report.add("F preserves structure constants");
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        if (ring.N(datum.F[a], datum.F[b], datum.F[c]) != ring.N(a, b, c)) {
          constants.fail(tuple_witness(L.name(a), L.name(b), L.name(c)));
        }
      }

  auto& count = report.add("fixed points of F match module rank");
  const std::size_t fixed = fixed_points(datum.F).size();
  count.note("fixed", std::to_string(fixed));
  count.note("module rank", std::to_string(datum.module.rank()));
  if (fixed != datum.module.rank()) {
    count.fail(std::to_string(fixed) + " fixed labels vs " + std::to_string(datum.module.rank()) + " module labels");
  }

  // Grade -1 must be the star-dual of grade 1: A'(c, m*, n*) = A(c*, m, n).
  auto& dual = report.add("grade -1 is dual to grade 1");
  const BasedModule& M = datum.module;
  const BasedModule& D = datum.dual;
  if (D.rank() != M.rank() || !is_permutation_of(M.star(), D.rank())) {
    dual.fail("dual labels do not pair with module labels");
    return report;
  }
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t x = 0; x < M.rank(); ++x)
      for (std::size_t y = 0; y < M.rank(); ++y) {
        if (D.A(c, M.star(x), M.star(y)) != M.A(ring.star(c), x, y)) {
          dual.fail(tuple_witness(L.name(c), D.labels().name(M.star(x)), D.labels().name(M.star(y))));
        }
      }
  return report;
}

// --- matrices and products --------------------------------------------------------

CycMatrix fusion_matrix(const BasedRing& ring, std::size_t a) {
  if (a >= ring.rank()) throw Error("unknown label index");
  CycMatrix m(ring.rank(), ring.rank());
  for (std::size_t b = 0; b < ring.rank(); ++b)
    for (std::size_t c = 0; c < ring.rank(); ++c) m(c, b) = CycNum(ring.N(a, b, c));
  return m;
}

CycMatrix fusion_matrix(const BasedRing& ring, const std::string& a) {
  return fusion_matrix(ring, ring.labels().index(a));
}

CycMatrix action_matrix(const BasedModule& module, std::size_t c) {
  CycMatrix m(module.rank(), module.rank());
  for (std::size_t x = 0; x < module.rank(); ++x)
    for (std::size_t y = 0; y < module.rank(); ++y) m(y, x) = CycNum(module.A(c, x, y));
  return m;
}

BasedModule dual_module(const BasedModule& module) {
  const BasedRing& ring = module.ring();
  std::vector<std::string> names;
  for (const auto& name : module.labels().names()) names.push_back(name + "*");
  // The dual's own star points back at the original labels.
  std::vector<std::size_t> back(module.rank());
  for (std::size_t x = 0; x < module.rank(); ++x) back[module.star(x)] = x;
  BasedModule dual(module.ring_ptr(), LabelSet(std::move(names)), back);
  for (std::size_t c = 0; c < ring.rank(); ++c)
    for (std::size_t x = 0; x < module.rank(); ++x)
      for (std::size_t y = 0; y < module.rank(); ++y) {
        dual.A(c, module.star(x), module.star(y)) = module.A(ring.star(c), x, y);
      }
  return dual;
}

BasedModule regular_module(std::shared_ptr<const BasedRing> ring) {
  const BasedRing& R = *ring;
  BasedModule module(ring, R.labels());
  for (std::size_t a = 0; a < R.rank(); ++a)
    for (std::size_t b = 0; b < R.rank(); ++b)
      for (std::size_t c = 0; c < R.rank(); ++c) module.A(a, b, c) = R.N(a, b, c);
  return module;
}

std::vector<CycNum> ring_multiply(const BasedRing& ring, std::span<const CycNum> x, std::span<const CycNum> y) {
  const std::size_t r = ring.rank();
  if (x.size() != r || y.size() != r) throw Error("ring_multiply: vector length mismatch");
  std::vector<CycNum> out(r);
  for (std::size_t a = 0; a < r; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < r; ++b) {
      if (y[b].is_zero()) continue;
      const CycNum xy = x[a] * y[b];
      for (std::size_t c = 0; c < r; ++c) {
        if (const long n = ring.N(a, b, c); n != 0) out[c] += xy * CycNum(n);
      }
    }
  }
  return out;
}

std::vector<CycNum> module_act(const BasedModule& module, std::span<const CycNum> x, std::span<const CycNum> v) {
  const std::size_t r = module.ring().rank();
  const std::size_t m = module.rank();
  if (x.size() != r || v.size() != m) throw Error("module_act: vector length mismatch");
  std::vector<CycNum> out(m);
  for (std::size_t c = 0; c < r; ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t p = 0; p < m; ++p) {
      if (v[p].is_zero()) continue;
      const CycNum xv = x[c] * v[p];
      for (std::size_t q = 0; q < m; ++q) {
        if (const long a = module.A(c, p, q); a != 0) out[q] += xv * CycNum(a);
      }
    }
  }
  return out;
}

CycNum hermitian_form(std::span<const CycNum> x, std::span<const CycNum> y) {
  if (x.size() != y.size()) throw Error("hermitian_form: index sets differ");
  CycNum sum;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i].conj();
  return sum;
}

std::vector<std::size_t> fixed_points(std::span<const std::size_t> perm) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] == i) out.push_back(i);
  }
  return out;
}

}  // namespace twv
