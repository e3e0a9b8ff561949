#include "twv/dataset.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "twv/errors.hpp"

namespace twv {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw DatasetError("schema error at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) schema_error(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(require_string(j[i], where + "/" + std::to_string(i)));
  return out;
}

std::size_t label_index(const LabelSet& labels, const json& j, const std::string& where) {
  const std::string name = require_string(j, where);
  if (auto i = labels.find(name)) return *i;
  schema_error(where, "unknown label '" + name + "'");
}

// Reads a label -> label map into a permutation-like vector; omitted labels map to themselves.
std::vector<std::size_t> label_map(const json& j, const LabelSet& from, const LabelSet& to, const std::string& where) {
  std::vector<std::size_t> out(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (auto k = to.find(from.name(i))) {
      out[i] = *k;
    } else if (from.size() == to.size()) {
      out[i] = i;
    } else {
      out[i] = 0;
    }
  }
  if (j.is_null()) return out;
  if (!j.is_object()) schema_error(where, "expected an object mapping labels to labels");
  for (const auto& [key, value] : j.items()) {
    const auto src = from.find(key);
    if (!src) schema_error(where, "unknown label '" + key + "'");
    out[*src] = label_index(to, value, where + "/" + key);
  }
  return out;
}

long nonneg_coefficient(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where, "structure constants must be integers");
  const long v = j.get<long>();
  if (v < 0) schema_error(where, "negativity: structure constant " + std::to_string(v) + " < 0");
  return v;
}

template <typename Setter>
void read_products(const json& list, const char* left_key, const LabelSet& left, const char* right_key,
                   const LabelSet& right, const LabelSet& target, const std::string& where,
                   std::vector<std::vector<bool>>& listed, Setter set) {
  if (list.is_null()) return;
  if (!list.is_array()) schema_error(where, "expected an array of products");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const std::size_t a = label_index(left, require(list[i], left_key, at), at + "/" + left_key);
    const std::size_t b = label_index(right, require(list[i], right_key, at), at + "/" + right_key);
    if (listed[a][b]) schema_error(at, "product listed twice");
    listed[a][b] = true;
    const json& sum = require(list[i], "sum", at);
    if (!sum.is_object()) schema_error(at + "/sum", "expected an object label -> coefficient");
    for (const auto& [key, value] : sum.items()) {
      const auto c = target.find(key);
      if (!c) schema_error(at + "/sum", "unknown label '" + key + "'");
      set(a, b, *c, nonneg_coefficient(value, at + "/sum/" + key));
    }
  }
}

BasedModule read_module_action(const json& j, std::shared_ptr<const BasedRing> ring, LabelSet labels,
                               std::vector<std::size_t> star, const std::string& where) {
  const BasedRing& R = *ring;
  BasedModule module(ring, labels, std::move(star));
  std::vector<std::vector<bool>> listed(R.rank(), std::vector<bool>(labels.size(), false));
  read_products(j.value("action", json()), "c", R.labels(), "m", labels, labels, where + "/action", listed,
                [&](std::size_t c, std::size_t m, std::size_t n, long v) { module.A(c, m, n) = v; });
  for (std::size_t m = 0; m < labels.size(); ++m) {
    if (!listed[R.unit()][m]) module.A(R.unit(), m, m) = 1;
  }
  return module;
}

CycMatrix read_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) schema_error(where, "expected " + std::to_string(rows) + " rows");
  CycMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string at = where + "/" + std::to_string(i);
    if (!j[i].is_array() || j[i].size() != cols) schema_error(at, "expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = cyc_from_json(j[i][k], at + "/" + std::to_string(k));
  }
  return m;
}

std::vector<CycNum> read_dims(const json& j, const LabelSet& labels, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object label -> value");
  std::vector<CycNum> out(labels.size());
  std::vector<bool> seen(labels.size(), false);
  for (const auto& [key, value] : j.items()) {
    const auto i = labels.find(key);
    if (!i) schema_error(where, "unknown label '" + key + "'");
    out[*i] = cyc_from_json(value, where + "/" + key);
    seen[*i] = true;
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen[i]) schema_error(where, "missing dimension for '" + labels.name(i) + "'");
  }
  return out;
}

}  // namespace

// --- CycNum encoding --------------------------------------------------------------

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^\s*(-?[0-9]+)(\s*/\s*([0-9]+))?\s*$)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw DatasetError("not an exact rational: '" + text + "'");
  mpz_class num(match[1].str());
  mpz_class den(match[3].matched ? match[3].str() : std::string("1"));
  if (den == 0) throw DatasetError("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

CycNum cyc_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return CycNum(j.get<long>());
  if (j.is_number()) schema_error(where, "floating-point values are not allowed; use exact rationals");
  if (j.is_string()) {
    try {
      return CycNum(parse_rational(j.get<std::string>()));
    } catch (const DatasetError& e) {
      schema_error(where, e.what());
    }
  }
  if (!j.is_object()) schema_error(where, "expected a cyclotomic number");
  const json& cj = require(j, "conductor", where);
  if (!cj.is_number_integer() || cj.get<long>() < 1) schema_error(where + "/conductor", "expected a positive integer");
  const long n = cj.get<long>();
  if (n > conductor_ceiling()) schema_error(where + "/conductor", "exceeds the conductor ceiling");
  const json& coords = require(j, "coords", where);
  if (!coords.is_object()) schema_error(where + "/coords", "expected an object exponent -> rational");
  std::vector<Rational> c(n, Rational(0));
  for (const auto& [key, value] : coords.items()) {
    const std::string at = where + "/coords/" + key;
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
      schema_error(at, "exponent keys must be non-negative integers");
    }
    const long k = std::stol(key);
    if (k >= n) schema_error(at, "exponent must be below the conductor");
    Rational q;
    if (value.is_number_integer()) {
      q = Rational(value.get<long>());
    } else if (value.is_string()) {
      try {
        q = parse_rational(value.get<std::string>());
      } catch (const DatasetError& e) {
        schema_error(at, e.what());
      }
    } else {
      schema_error(at, "coordinates must be rational strings");
    }
    c[k] += q;
  }
  return CycNum::from_exponents(n, c);
}

nlohmann::ordered_json cyc_to_json(const CycNum& a) {
  nlohmann::ordered_json out;
  out["conductor"] = a.conductor();
  nlohmann::ordered_json coords = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < a.coords().size(); ++k) {
    if (a.coords()[k] != 0) coords[std::to_string(k)] = a.coords()[k].get_str();
  }
  out["coords"] = coords;
  return out;
}

// --- datasets ----------------------------------------------------------------------

GradedFusionDatum Dataset::graded() const {
  return GradedFusionDatum{modulus, ring, module, supplied_dual ? *supplied_dual : dual, F};
}

Dataset parse_dataset(const json& j, const std::string& source) {
  if (!j.is_object()) schema_error("", "dataset must be a JSON object");
  Dataset ds;
  ds.source = source;
  ds.name = require_string(require(j, "name", ""), "/name");
  if (j.contains("notes")) ds.notes = require_string(j.at("notes"), "/notes");
  if (j.contains("modulus")) {
    if (!j.at("modulus").is_number_integer() || j.at("modulus").get<long>() < 1) {
      schema_error("/modulus", "expected a positive integer");
    }
    ds.modulus = j.at("modulus").get<int>();
  }

  const json& rj = require(j, "ring", "");
  LabelSet labels;
  try {
    labels = LabelSet(string_list(require(rj, "labels", "/ring"), "/ring/labels"));
  } catch (const Error& e) {
    schema_error("/ring/labels", e.what());
  }
  if (labels.size() == 0) schema_error("/ring/labels", "ring must have at least one label");
  const std::size_t unit = label_index(labels, require(rj, "unit", "/ring"), "/ring/unit");
  auto ring = std::make_shared<BasedRing>(labels, unit, label_map(rj.value("star", json()), labels, labels, "/ring/star"));
  std::vector<std::vector<bool>> listed(labels.size(), std::vector<bool>(labels.size(), false));
  std::vector<std::vector<bool>> explicit_pair = listed;
  read_products(rj.value("products", json()), "a", labels, "b", labels, labels, "/ring/products", listed,
                [&](std::size_t a, std::size_t b, std::size_t c, long v) { ring->N(a, b, c) = v; });
  explicit_pair = listed;
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = 0; b < labels.size(); ++b) {
      if (explicit_pair[a][b]) continue;
      if (explicit_pair[b][a]) {
        for (std::size_t c = 0; c < labels.size(); ++c) ring->N(a, b, c) = ring->N(b, a, c);
      } else if (a == unit) {
        ring->N(a, b, b) = 1;
      } else if (b == unit) {
        ring->N(a, b, a) = 1;
      }
    }
  ds.ring = ring;

  ds.F = label_map(j.value("F", json()), labels, labels, "/F");

  if (j.contains("module") && !j.at("module").is_null()) {
    const json& mj = j.at("module");
    LabelSet mlabels;
    try {
      mlabels = LabelSet(string_list(require(mj, "labels", "/module"), "/module/labels"));
    } catch (const Error& e) {
      schema_error("/module/labels", e.what());
    }
    std::vector<std::size_t> identity(mlabels.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    std::vector<std::size_t> star = identity;
    if (mj.contains("dual")) {
      const json& dj = mj.at("dual");
      LabelSet dlabels;
      try {
        dlabels = LabelSet(string_list(require(dj, "labels", "/module/dual"), "/module/dual/labels"));
      } catch (const Error& e) {
        schema_error("/module/dual/labels", e.what());
      }
      if (dlabels.size() != mlabels.size()) schema_error("/module/dual/labels", "dual rank differs from module rank");
      star = label_map(mj.value("star", json()), mlabels, dlabels, "/module/star");
      std::vector<std::size_t> back(mlabels.size());
      for (std::size_t i = 0; i < star.size(); ++i) back[star[i]] = i;
      ds.supplied_dual = read_module_action(dj, ring, dlabels, back, "/module/dual");
    } else if (mj.contains("star")) {
      // Without an explicit dual the only meaningful pairing is the identity.
      const auto s = label_map(mj.at("star"), mlabels, mlabels, "/module/star");
      if (s != identity) schema_error("/module/star", "a non-identity module star requires an explicit dual");
    }
    ds.module = read_module_action(mj, ring, mlabels, star, "/module");
    ds.module_is_regular = false;
  } else {
    ds.module = regular_module(ring);
    ds.module_is_regular = true;
  }
  {
    // The synthesized dual pairs labels by index; reorder the module star accordingly.
    BasedModule canonical(ds.ring, ds.module.labels());
    for (std::size_t c = 0; c < labels.size(); ++c)
      for (std::size_t x = 0; x < ds.module.rank(); ++x)
        for (std::size_t y = 0; y < ds.module.rank(); ++y) canonical.A(c, x, y) = ds.module.A(c, x, y);
    ds.dual = dual_module(canonical);
  }

  if (j.contains("spherical") && !j.at("spherical").is_null()) {
    const json& sj = j.at("spherical");
    SphericalDatum sph;
    sph.dims_C = read_dims(require(sj, "dims_C", "/spherical"), labels, "/spherical/dims_C");
    if (sj.contains("dims_M")) {
      sph.dims_M = read_dims(sj.at("dims_M"), ds.module.labels(), "/spherical/dims_M");
    } else if (ds.module_is_regular) {
      sph.dims_M = sph.dims_C;
    } else {
      schema_error("/spherical", "missing key 'dims_M'");
    }
    sph.global_dim = cyc_from_json(require(sj, "global_dim", "/spherical"), "/spherical/global_dim");
    sph.S = read_matrix(require(sj, "S", "/spherical"), labels.size(), labels.size(), "/spherical/S");
    sph.fixed = fixed_points(ds.F);
    if (sj.contains("Scross")) {
      sph.Scross = read_matrix(sj.at("Scross"), sph.fixed.size(), ds.module.rank(), "/spherical/Scross");
    } else if (ds.module_is_regular) {
      sph.Scross = sph.S;
    } else {
      schema_error("/spherical", "missing key 'Scross'");
    }
    ds.spherical = std::move(sph);
  }
  return ds;
}

Report validate_dataset(const Dataset& ds) {
  Report report;
  report.title = "dataset " + ds.name;
  report.append(validate_based_ring(*ds.ring), "ring: ");
  if (!report.passed()) return report;
  report.append(validate_based_module(ds.module), "module: ");
  report.append(validate_graded_datum(ds.graded()), "graded: ");
  if (ds.supplied_dual) report.append(validate_based_module(*ds.supplied_dual), "dual module: ");
  if (ds.module_is_regular) {
    auto& regular = report.add("graded: regular module has trivial F");
    for (std::size_t c = 0; c < ds.F.size(); ++c) {
      if (ds.F[c] != c) regular.fail(ds.ring->labels().name(c));
    }
  }
  if (!ds.spherical) return report;

  const SphericalDatum& sph = *ds.spherical;
  const BasedRing& ring = *ds.ring;
  auto& unit_row = report.add("spherical: S row of the unit equals dims_C");
  for (std::size_t c = 0; c < ring.rank(); ++c) {
    if (sph.S(ring.unit(), c) != sph.dims_C[c]) unit_row.fail(ring.labels().name(c));
  }
  auto& dims = report.add("spherical: dims are nonzero totally real algebraic integers");
  auto check_dim = [&](const CycNum& d, const std::string& label) {
    const auto props = integrality_and_positivity(d);
    if (d.is_zero() || !props.is_algebraic_integer || !props.is_totally_real) dims.fail(label + " = " + d.to_string());
  };
  for (std::size_t c = 0; c < ring.rank(); ++c) check_dim(sph.dims_C[c], ring.labels().name(c));
  for (std::size_t m = 0; m < ds.module.rank(); ++m) check_dim(sph.dims_M[m], ds.module.labels().name(m));

  auto& gdim = report.add("spherical: global dimension is a totally positive algebraic integer");
  const auto gprops = integrality_and_positivity(sph.global_dim);
  if (!gprops.is_algebraic_integer || gprops.is_totally_positive == Tri::no) {
    gdim.fail(sph.global_dim.to_string());
  } else if (gprops.is_totally_positive == Tri::undecided) {
    gdim.undecided(sph.global_dim.to_string());
  }
  auto& sums = report.add("spherical: dim C = sum dims_C^2 = sum dims_M^2");
  CycNum sum_c;
  CycNum sum_m;
  for (const auto& d : sph.dims_C) sum_c += d * d;
  for (const auto& d : sph.dims_M) sum_m += d * d;
  if (sum_c != sph.global_dim) sums.fail("sum dims_C^2 = " + sum_c.to_string());
  if (sum_m != sph.global_dim) sums.fail("sum dims_M^2 = " + sum_m.to_string());
  return report;
}

// --- lookup ------------------------------------------------------------------------

json read_dataset_json(const std::string& spec, std::string* source) {
  namespace fs = std::filesystem;
  auto parse_file = [&](const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open " + path.string());
    try {
      json j = json::parse(in);
      if (source) *source = path.string();
      return j;
    } catch (const json::parse_error& e) {
      throw DatasetError("parse error in " + path.string() + ": " + e.what());
    }
  };
  std::error_code ec;
  if (fs::is_regular_file(spec, ec)) return parse_file(spec);
  if (const char* dir = std::getenv("TWV_DATASET_PATH"); dir && *dir) {
    const fs::path candidate = fs::path(dir) / (spec + ".json");
    if (fs::is_regular_file(candidate, ec)) return parse_file(candidate);
  }
  std::string name = spec;
  if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
  if (const char* text = bundled_dataset_text(name)) {
    if (source) *source = "bundled:" + name;
    return json::parse(text);
  }
  throw UnknownDataset(spec);
}

Dataset load_dataset(const std::string& spec) {
  std::string source;
  const json j = read_dataset_json(spec, &source);
  Dataset ds = parse_dataset(j, source);
  const Report report = validate_dataset(ds);
  if (!report.passed()) throw DatasetError("dataset " + ds.name + " violates " + report.first_failure());
  return ds;
}

}  // namespace twv
