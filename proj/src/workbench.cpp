#include "twv/workbench.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "twv/characters.hpp"
#include "twv/errors.hpp"
#include "twv/twisted.hpp"
#include "twv/verlinde.hpp"

namespace twv {

namespace {

std::string tuple_name(std::initializer_list<std::string> parts) {
  std::string out = "(";
  bool first = true;
  for (const auto& p : parts) {
    if (!first) out += ",";
    out += p;
    first = false;
  }
  return out + ")";
}

std::string root_name(const RootOfUnity& r) {
  if (r.order == 1) return "1";
  return "exp(2 pi i " + std::to_string(r.exponent) + "/" + std::to_string(r.order) + ")";
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs `fn`, turning any library error into a failed check named `name`.
template <typename Fn>
bool guarded(Report& report, const std::string& name, Fn&& fn) {
  try {
    fn();
    return true;
  } catch (const Error& e) {
    report.add(name).fail(e.what());
    return false;
  }
}

template <typename Fn>
bool stage(Report& report, const std::string& name, Fn&& fn) {
  Stopwatch watch;
  const bool ok = guarded(report, name, std::forward<Fn>(fn));
  report.timings_ms.emplace_back(name, watch.ms());
  return ok;
}

struct Exact {
  CharacterTable table;
  std::vector<std::size_t> fixed;
  std::vector<TwistedCharacter> twisted;
};

Exact exact_twisted(const Dataset& ds) {
  const SphericalDatum& sph = *ds.spherical;
  Exact e;
  e.table = characters_from_S(*ds.ring, sph.S, sph.dims_C);
  e.fixed = fixed_characters(e.table, ds.F, ds.module.rank());
  e.twisted = extract_twisted_characters(e.table, e.fixed, ds.module, ds.dual);
  return e;
}

std::vector<CycNum> draw_phases(std::size_t count, int modulus, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(0, modulus - 1);
  std::vector<CycNum> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(CycNum::zeta(modulus, pick(rng)));
  return out;
}

}  // namespace

// --- oracle sweep ------------------------------------------------------------------

Report oracle_compare(const Dataset& ds) {
  Report report;
  report.title = "oracle " + ds.name;
  const BasedRing& ring = *ds.ring;
  const BasedModule& module = ds.module;
  const LabelSet& rl = ring.labels();
  const LabelSet& ml = module.labels();
  const std::size_t r = ring.rank();
  const std::size_t m = module.rank();

  auto sweep_module = [&](Check& check, auto&& evaluate) {
    long count = 0;
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          const std::string at = tuple_name({rl.name(c), ml.name(x), ml.name(y)});
          ++count;
          try {
            const long value = evaluate(c, x, y);
            if (value != module.A(c, x, y)) {
              check.fail(at + ": " + std::to_string(value) + " != " + std::to_string(module.A(c, x, y)));
            }
          } catch (const Error& e) {
            check.fail(at + ": " + e.what());
          }
        }
    check.note("triples", std::to_string(count));
  };

  if (ds.spherical) {
    const SphericalDatum& sph = *ds.spherical;
    auto& classical = report.add("classical Verlinde = ring constants");
    long count = 0;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t c = 0; c < r; ++c) {
          const std::string at = tuple_name({rl.name(a), rl.name(b), rl.name(c)});
          ++count;
          try {
            const long value = verlinde_classical(sph, a, b, c);
            if (value != ring.N(a, b, c)) {
              classical.fail(at + ": " + std::to_string(value) + " != " + std::to_string(ring.N(a, b, c)));
            }
          } catch (const Error& e) {
            classical.fail(at + ": " + e.what());
          }
        }
    classical.note("triples", std::to_string(count));

    auto& spherical = report.add("module Verlinde from crossed S = module constants");
    sweep_module(spherical, [&](std::size_t c, std::size_t x, std::size_t y) {
      return verlinde_module_spherical(sph, c, x, y);
    });

    Exact exact;
    if (guarded(report, "module Verlinde from twisted characters = module constants",
                [&] { exact = exact_twisted(ds); })) {
      auto& chars = report.add("module Verlinde from twisted characters = module constants");
      sweep_module(chars, [&](std::size_t c, std::size_t x, std::size_t y) {
        return verlinde_module_chars(exact.table, exact.twisted, c, x, y);
      });
    }

    auto& twisted = report.add("twisted fusion constants: crossed S = algebra characters");
    const AlgebraCharacters achars = twisted_algebra_characters(sph.Scross, sph.dims_M, sph.global_dim);
    const std::size_t f = sph.fixed.size();
    for (std::size_t i = 0; i < f; ++i)
      for (std::size_t j = 0; j < f; ++j)
        for (std::size_t k = 0; k < f; ++k) {
          const std::string at =
              tuple_name({rl.name(sph.fixed[i]), rl.name(sph.fixed[j]), rl.name(sph.fixed[k])});
          try {
            const CycNum a = twisted_fusion_coeff_spherical(sph.Scross, sph.dims_M, sph.global_dim, ds.modulus, i,
                                                            j, k);
            const CycNum b = twisted_fusion_coeff_chars(achars, i, j, k);
            if (a != b) twisted.fail(at + ": " + a.to_string() + " != " + b.to_string());
            if (!a.is_zero()) twisted.note("a" + at, a.to_string());
          } catch (const Error& e) {
            twisted.fail(at + ": " + e.what());
          }
        }
    twisted.note("gauge", "dataset crossed S");
  }

  NumericCharacterTable num;
  std::vector<NumericTwistedCharacter> ntw;
  if (guarded(report, "module Verlinde from numeric twisted characters = module constants", [&] {
        num = characters_numeric(ring);
        const auto fixed = fixed_characters(num, ds.F, m);
        ntw = extract_twisted_characters(num, fixed, module, ds.dual);
      })) {
    auto& numeric = report.add("module Verlinde from numeric twisted characters = module constants");
    sweep_module(numeric, [&](std::size_t c, std::size_t x, std::size_t y) {
      return verlinde_module_chars(num, ntw, c, x, y);
    });
  }
  return report;
}

// --- gauge test --------------------------------------------------------------------

Report gauge_test(const Dataset& ds, std::uint64_t seed) {
  Report report;
  report.title = "gauge " + ds.name + " seed " + std::to_string(seed);
  if (!ds.spherical) {
    report.add("gauge test needs spherical data").fail("dataset has no crossed S-matrix");
    return report;
  }
  const SphericalDatum& sph = *ds.spherical;
  const LabelSet& rl = ds.ring->labels();
  const LabelSet& ml = ds.module.labels();
  const std::size_t f = sph.fixed.size();
  const std::vector<CycNum> phases = draw_phases(f, ds.modulus, seed);

  SphericalDatum scaled = sph;
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t x = 0; x < scaled.Scross.cols(); ++x) scaled.Scross(i, x) *= phases[i];

  auto& diag = report.add("row phases are N-th roots of unity");
  for (std::size_t i = 0; i < f; ++i) {
    RootOfUnity root;
    if (!as_root_of_unity(phases[i], &root) || ds.modulus % root.order != 0) diag.fail(rl.name(sph.fixed[i]));
    diag.note(rl.name(sph.fixed[i]), root_name(root));
  }

  auto& module = report.add("module multiplicities unchanged");
  for (std::size_t c = 0; c < ds.ring->rank(); ++c)
    for (std::size_t x = 0; x < ds.module.rank(); ++x)
      for (std::size_t y = 0; y < ds.module.rank(); ++y) {
        const std::string at = tuple_name({rl.name(c), ml.name(x), ml.name(y)});
        try {
          const long before = verlinde_module_spherical(sph, c, x, y);
          const long after = verlinde_module_spherical(scaled, c, x, y);
          if (before != after) module.fail(at + ": " + std::to_string(before) + " -> " + std::to_string(after));
        } catch (const Error& e) {
          module.fail(at + ": " + e.what());
        }
      }

  auto& law = report.add("twisted fusion constants scale by r_C r_C' conj(r_D)");
  const AlgebraCharacters achars = twisted_algebra_characters(scaled.Scross, scaled.dims_M, scaled.global_dim);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j)
      for (std::size_t k = 0; k < f; ++k) {
        const std::string at = tuple_name({rl.name(sph.fixed[i]), rl.name(sph.fixed[j]), rl.name(sph.fixed[k])});
        try {
          const CycNum before =
              twisted_fusion_coeff_spherical(sph.Scross, sph.dims_M, sph.global_dim, ds.modulus, i, j, k);
          const CycNum after =
              twisted_fusion_coeff_spherical(scaled.Scross, scaled.dims_M, scaled.global_dim, ds.modulus, i, j, k);
          const CycNum expect = phases[i] * phases[j] * phases[k].conj() * before;
          if (after != expect) law.fail(at + ": " + after.to_string() + " != " + expect.to_string());
          if (twisted_fusion_coeff_chars(achars, i, j, k) != after) law.fail(at + ": backends disagree");
        } catch (const Error& e) {
          law.fail(at + ": " + e.what());
        }
      }
  return report;
}

// --- full report -------------------------------------------------------------------

Report full_report(const Dataset& ds, const ReportOptions& options) {
  Report report;
  report.title = "report " + ds.name;
  const BasedRing& ring = *ds.ring;

  stage(report, "validation", [&] { report.append(validate_dataset(ds), "validate: "); });
  if (!report.passed()) return report;

  NumericCharacterTable num;
  stage(report, "numeric characters", [&] {
    num = characters_numeric(ring, kNumericTolerance, options.seed);
    Report ortho = verify_character_orthogonality(num);
    if (!ortho.checks.empty()) ortho.checks.front().note("attempts", std::to_string(num.attempts));
    report.append(ortho, "numeric characters: ");
  });

  if (!ds.spherical) {
    stage(report, "numeric twisted characters", [&] {
      const auto fixed = fixed_characters(num, ds.F, ds.module.rank());
      extract_twisted_characters(num, fixed, ds.module, ds.dual);
      report.add("numeric twisted characters: extracted").note("count", std::to_string(fixed.size()));
    });
    stage(report, "oracle", [&] { report.append(oracle_compare(ds), "oracle: "); });
    return report;
  }

  const SphericalDatum& sph = *ds.spherical;
  Exact exact;
  const bool have_exact = stage(report, "exact characters", [&] {
    exact.table = characters_from_S(ring, sph.S, sph.dims_C);
    report.append(verify_character_orthogonality(exact.table), "exact characters: ");
    report.append(verify_minimal_idempotents(ring, exact.table), "exact characters: ");
    report.append(codegree_spherical_check(exact.table, sph.dims_C, sph.global_dim), "exact characters: ");
    auto& positive = report.add("exact characters: codegree values");
    for (const auto& rho : exact.table.rows) {
      positive.note("f_" + rho.label, rho.codegree.to_string());
      if (rho.codegree_positive == Tri::no) positive.fail(rho.label);
      if (rho.codegree_positive == Tri::undecided) positive.undecided(rho.label);
    }
    auto& coherence = report.add("numeric characters match exact within 1e-9");
    const double distance = table_distance(exact.table, num);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", distance < 1e-15 ? 0.0 : distance);
    coherence.note("max distance", buf);
    if (!(distance <= kNumericTolerance)) coherence.fail(buf);
  });

  if (have_exact) {
    stage(report, "twisted characters", [&] {
      exact.fixed = fixed_characters(exact.table, ds.F, ds.module.rank());
      exact.twisted = extract_twisted_characters(exact.table, exact.fixed, ds.module, ds.dual);
      auto& fixed = report.add("twisted: F-fixed characters match module rank");
      std::string names;
      for (std::size_t i : exact.fixed) names += (names.empty() ? "" : ",") + exact.table.rows[i].label;
      fixed.note("fixed", names);
      report.append(verify_twisted_orthogonality(exact.table, exact.twisted), "twisted: ");
      report.append(verify_twisted_action(exact.table, exact.twisted, ds.dual), "twisted: ");
    });
    stage(report, "bridge", [&] {
      const BridgeResult bridge = crossed_S_bridge(exact.table, exact.twisted, sph.dims_C, &sph.Scross);
      auto& check = report.add("bridge: crossed S reproduced up to row phases");
      for (const auto& p : bridge.phases) check.note("phase " + p.label, root_name(p.root));
    });
  }

  stage(report, "crossed S", [&] {
    report.append(verify_crossed_unitarity(sph.Scross, sph.global_dim), "crossed S: ");
    report.append(verify_integrality_ratios(sph.Scross, sph.dims_fixed(), sph.dims_M, sph.global_dim),
                  "crossed S: ");
  });
  stage(report, "oracle", [&] { report.append(oracle_compare(ds), "oracle: "); });
  stage(report, "twisted algebra", [&] {
    const TwistedFusionAlgebra K = build_twisted_fusion_algebra(sph, ring, ds.module.labels(), ds.modulus);
    report.append(verify_frobenius_star(K), "twisted algebra: ");
  });
  stage(report, "gauge", [&] { report.append(gauge_test(ds, options.seed), "gauge: "); });
  return report;
}

// --- rendering ---------------------------------------------------------------------

nlohmann::ordered_json report_to_json(const Report& report, bool timings) {
  nlohmann::ordered_json j;
  j["title"] = report.title;
  j["verdict"] = to_string(report.verdict());
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    cj["mandatory"] = c.mandatory;
    cj["witnesses"] = c.witnesses;
    nlohmann::ordered_json info = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.info) info[k] = v;
    cj["info"] = info;
    checks.push_back(std::move(cj));
  }
  j["checks"] = checks;
  if (timings) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [stage, ms] : report.timings_ms) t[stage] = ms;
    j["timings_ms"] = t;
  }
  return j;
}

std::string report_to_text(const Report& report, bool timings) {
  std::ostringstream os;
  os << report.title << ": " << to_string(report.verdict()) << "\n";
  for (const auto& c : report.checks) {
    os << "  [" << to_string(c.status) << "] " << c.name << (c.mandatory ? "" : " (advisory)") << "\n";
    for (const auto& [k, v] : c.info) os << "      " << k << " = " << v << "\n";
    for (const auto& w : c.witnesses) os << "      witness: " << w << "\n";
  }
  if (timings) {
    for (const auto& [stage, ms] : report.timings_ms) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", ms);
      os << "  time " << stage << ": " << buf << " ms\n";
    }
  }
  return os.str();
}

// --- command line ------------------------------------------------------------------

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int exit_for(const Report& report) { return report.passed() ? kExitPass : kExitFail; }

std::string normalize_label(std::string s) {
  const std::string minus = "\xE2\x88\x92";  // U+2212
  for (std::size_t pos; (pos = s.find(minus)) != std::string::npos;) s.replace(pos, minus.size(), "-");
  return s;
}

std::size_t find_label(const LabelSet& labels, const std::string& name) {
  if (auto i = labels.find(name)) return *i;
  if (auto i = labels.find(normalize_label(name))) return *i;
  throw CLI::ValidationError("--triple", "unknown label '" + name + "'");
}

std::vector<std::string> split_triple(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw CLI::ValidationError("--triple", "expected three comma-separated labels");
  return parts;
}

void apply_environment() {
  if (const char* p = std::getenv("TWV_PRECISION"); p && *p) set_default_precision(std::stoi(p));
  if (const char* c = std::getenv("TWV_CONDUCTOR_CEILING"); c && *c) set_conductor_ceiling(std::stol(c));
}

std::string cplx(std::complex<double> z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", std::abs(z.real()) < 1e-13 ? 0.0 : z.real(),
                std::abs(z.imag()) < 1e-13 ? 0.0 : z.imag());
  return buf;
}

int cmd_validate(const std::string& spec, std::ostream& out) {
  std::string source;
  const auto json = read_dataset_json(spec, &source);
  Report report;
  try {
    const Dataset ds = parse_dataset(json, source);
    report = validate_dataset(ds);
  } catch (const UnknownDataset&) {
    throw;
  } catch (const DatasetError& e) {
    report.title = "dataset " + spec;
    report.add("schema").fail(e.what());
  }
  out << report_to_text(report);
  return exit_for(report);
}

int cmd_chars(const Dataset& ds, bool numeric, std::uint64_t seed, std::ostream& out) {
  const BasedRing& ring = *ds.ring;
  Report report;
  report.title = "characters " + ds.name;
  if (numeric || !ds.spherical) {
    const auto table = characters_numeric(ring, kNumericTolerance, seed);
    out << "numeric character table (" << table.size() << " rows, seed " << table.seed_used << ")\n";
    for (const auto& row : table.rows) {
      out << "  " << row.label << ":";
      for (const auto& v : row.values) out << " " << cplx(v);
      out << "  f = " << cplx(row.codegree) << "\n";
    }
    report.append(verify_character_orthogonality(table));
  } else {
    const auto table = characters_from_S(ring, ds.spherical->S, ds.spherical->dims_C);
    out << "character table (rows phi_C, columns";
    for (const auto& l : ring.labels().names()) out << " " << l;
    out << ")\n";
    for (const auto& row : table.rows) {
      out << "  phi_" << row.label << ":";
      for (const auto& v : row.values) out << " [" << v.to_string() << "]";
      out << "  f = " << row.codegree.to_string() << "  totally positive: " << to_string(row.codegree_positive)
          << "\n";
    }
    report.append(verify_character_orthogonality(table));
    report.append(verify_minimal_idempotents(ring, table));
  }
  out << report_to_text(report);
  return exit_for(report);
}

int cmd_twisted(const Dataset& ds, std::ostream& out) {
  if (!ds.spherical) throw CheckFailure("exact twisted characters need an S-matrix in the dataset");
  const SphericalDatum& sph = *ds.spherical;
  const BasedRing& ring = *ds.ring;
  const auto table = characters_from_S(ring, sph.S, sph.dims_C);
  const auto fixed = fixed_characters(table, ds.F, ds.module.rank());
  const auto twisted = extract_twisted_characters(table, fixed, ds.module, ds.dual);
  out << "F-fixed characters:";
  for (std::size_t i : fixed) out << " phi_" << table.rows[i].label;
  out << "\ntwisted characters (columns";
  for (const auto& l : ds.module.labels().names()) out << " " << l;
  out << ")\n";
  for (const auto& tw : twisted) {
    out << "  t~chi_" << tw.label << ":";
    for (const auto& v : tw.values) out << " [" << v.to_string() << "]";
    out << "\n";
  }
  const BridgeResult bridge = crossed_S_bridge(table, twisted, sph.dims_C, &sph.Scross);
  out << "crossed S from twisted characters\n";
  for (std::size_t i = 0; i < bridge.computed.rows(); ++i) {
    out << "  " << twisted[i].label << ":";
    for (std::size_t j = 0; j < bridge.computed.cols(); ++j) out << " [" << bridge.computed(i, j).to_string() << "]";
    out << "   dataset row = " << root_name(bridge.phases[i].root) << " * computed\n";
  }
  Report report;
  report.title = "twisted " + ds.name;
  report.append(verify_twisted_orthogonality(table, twisted));
  report.append(verify_twisted_action(table, twisted, ds.dual));
  out << report_to_text(report);
  return exit_for(report);
}

int cmd_verlinde(const Dataset& ds, const std::string& formula, const std::string& triple, bool numeric,
                 std::ostream& out) {
  const BasedRing& ring = *ds.ring;
  const LabelSet& rl = ring.labels();
  const LabelSet& ml = ds.module.labels();
  const bool needs_spherical = formula == "classical" || formula == "2" || formula == "2p" ||
                               (formula == "1") || (formula == "1p" && !numeric);
  if (needs_spherical && !ds.spherical) throw CheckFailure("this formula needs spherical data in the dataset");

  std::vector<std::array<std::size_t, 3>> triples;
  std::vector<std::string> first_labels;
  const LabelSet* a_labels = &rl;
  const LabelSet* b_labels = &ml;
  LabelSet fixed_labels;
  if (formula == "classical") {
    b_labels = &rl;
  } else if (formula == "2" || formula == "2p") {
    std::vector<std::string> names;
    for (std::size_t c : ds.spherical->fixed) names.push_back(rl.name(c));
    fixed_labels = LabelSet(names);
    a_labels = b_labels = &fixed_labels;
  }
  const LabelSet* c_labels = b_labels;
  if (!triple.empty()) {
    const auto parts = split_triple(triple);
    triples.push_back({find_label(*a_labels, parts[0]), find_label(*b_labels, parts[1]),
                       find_label(*c_labels, parts[2])});
  } else {
    for (std::size_t a = 0; a < a_labels->size(); ++a)
      for (std::size_t b = 0; b < b_labels->size(); ++b)
        for (std::size_t c = 0; c < c_labels->size(); ++c) triples.push_back({a, b, c});
  }

  Exact exact;
  NumericCharacterTable num;
  std::vector<NumericTwistedCharacter> ntw;
  AlgebraCharacters achars;
  if (formula == "1p") {
    if (numeric) {
      num = characters_numeric(ring);
      ntw = extract_twisted_characters(num, fixed_characters(num, ds.F, ds.module.rank()), ds.module, ds.dual);
    } else {
      exact = exact_twisted(ds);
    }
  } else if (formula == "2p") {
    achars = twisted_algebra_characters(ds.spherical->Scross, ds.spherical->dims_M, ds.spherical->global_dim);
  }

  const bool single = triples.size() == 1 && !triple.empty();
  bool ok = true;
  for (const auto& [a, b, c] : triples) {
    std::string value;
    std::string expected;
    if (formula == "classical") {
      value = std::to_string(verlinde_classical(*ds.spherical, a, b, c));
      expected = std::to_string(ring.N(a, b, c));
    } else if (formula == "1") {
      value = std::to_string(verlinde_module_spherical(*ds.spherical, a, b, c));
      expected = std::to_string(ds.module.A(a, b, c));
    } else if (formula == "1p") {
      value = std::to_string(numeric ? verlinde_module_chars(num, ntw, a, b, c)
                                     : verlinde_module_chars(exact.table, exact.twisted, a, b, c));
      expected = std::to_string(ds.module.A(a, b, c));
    } else if (formula == "2") {
      value = twisted_fusion_coeff_spherical(ds.spherical->Scross, ds.spherical->dims_M, ds.spherical->global_dim,
                                             ds.modulus, a, b, c)
                  .to_string();
    } else {
      const CycNum v = twisted_fusion_coeff_chars(achars, a, b, c);
      if (!is_algebraic_integer(v) || !lies_in_subfield(v, ds.modulus)) {
        throw CheckFailure("twisted fusion coefficient " +
                           tuple_name({a_labels->name(a), b_labels->name(b), c_labels->name(c)}) + " = " +
                           v.to_string() + " is not an algebraic integer in Q(zeta_" +
                           std::to_string(ds.modulus) + ")");
      }
      value = v.to_string();
    }
    if (!expected.empty() && expected != value) ok = false;
    if (single) {
      out << value << "\n";
    } else {
      out << a_labels->name(a) << "," << b_labels->name(b) << "," << c_labels->name(c) << ": " << value;
      if (!expected.empty() && expected != value) out << "  (structure constant " << expected << ")";
      out << "\n";
    }
  }
  if (formula == "2" || formula == "2p") out << "gauge: rows of the dataset crossed S as given\n";
  if (!ok) out << "mismatch with the dataset structure constants\n";
  return ok ? kExitPass : kExitFail;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Verlinde workbench: exact checks on graded fusion data", "twv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string dataset;
  bool numeric = false;
  bool exact = false;
  std::string formula = "1";
  std::string triple;
  std::uint64_t seed = 0;
  std::string out_path;
  bool timings = false;

  auto* validate = app.add_subcommand("validate", "Validate a dataset against the axioms");
  auto* chars = app.add_subcommand("chars", "Character table");
  auto* twisted = app.add_subcommand("twisted", "Fixed characters, twisted characters and the crossed S bridge");
  auto* verlinde = app.add_subcommand("verlinde", "Evaluate a Verlinde-type formula");
  auto* oracle = app.add_subcommand("oracle", "Sweep every formula against the structure constants");
  auto* gauge = app.add_subcommand("gauge-test", "Row-phase invariance of the crossed S formulas");
  auto* report = app.add_subcommand("report", "Run everything and write a machine-readable report");
  for (auto* sub : {validate, chars, twisted, verlinde, oracle, gauge, report}) {
    sub->add_option("dataset", dataset, "Dataset file or bundled name")->required();
  }
  auto* numeric_flag = chars->add_flag("--numeric", numeric, "Floating-point backend");
  chars->add_flag("--exact", exact, "Exact backend from the S-matrix (default)")->excludes(numeric_flag);
  chars->add_option("--seed", seed, "Seed for the numeric backend");
  verlinde->add_option("--theorem", formula, "Formula: 1, 1p, 2, 2p or classical")
      ->check(CLI::IsMember({"1", "1p", "2", "2p", "classical"}));
  verlinde->add_option("--triple", triple, "Labels a,b,c (default: full table)");
  verlinde->add_flag("--numeric", numeric, "Numeric characters (formula 1p only)");
  gauge->add_option("--seed", seed, "Seed for the row phases");
  report->add_option("--out", out_path, "Write the JSON report here (default: stdout)");
  report->add_flag("--timings", timings, "Include stage timings");
  report->add_option("--seed", seed, "Seed for the numeric backend and the gauge test");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("twv");
  for (const auto& a : args) argv_storage.push_back(a);
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "twv: " << e.what() << "\n" << "run 'twv --help' for usage\n";
    return kExitUsage;
  }

  try {
    apply_environment();
    if (validate->parsed()) return cmd_validate(dataset, out);
    const Dataset ds = load_dataset(dataset);
    if (chars->parsed()) return cmd_chars(ds, numeric, seed, out);
    if (twisted->parsed()) return cmd_twisted(ds, out);
    if (verlinde->parsed()) return cmd_verlinde(ds, formula, triple, numeric, out);
    if (oracle->parsed()) {
      const Report r = oracle_compare(ds);
      out << report_to_text(r);
      return exit_for(r);
    }
    if (gauge->parsed()) {
      const Report r = gauge_test(ds, seed);
      out << report_to_text(r);
      return exit_for(r);
    }
    if (report->parsed()) {
      ReportOptions options;
      options.seed = seed;
      options.timings = timings;
      const Report r = full_report(ds, options);
      const std::string json = report_to_json(r, timings).dump(2) + "\n";
      if (out_path.empty()) {
        out << json;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw Error("cannot write " + out_path);
        file << json;
        out << report_to_text(r, timings);
      }
      return exit_for(r);
    }
  } catch (const UnknownDataset& e) {
    err << "twv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "twv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "twv: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    err << "twv: bad environment setting: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace twv
