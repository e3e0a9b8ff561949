#pragma once

#include <memory>
#include "json.hpp"
#include <optional>
#include <string>
#include <vector>

#include "twv/cyclotomic.hpp"
#include "twv/fusion.hpp"
#include "twv/report.hpp"
#include "twv/verlinde.hpp"

namespace twv {

/// One self-describing dataset: K(C), an optional K(M) (the regular module when
/// absent), F, the grading modulus and optional spherical data.
struct Dataset {
  std::string name;
  std::string notes;
  std::string source;
  int modulus = 1;
  std::shared_ptr<const BasedRing> ring;
  BasedModule module;
  bool module_is_regular = false;
  BasedModule dual;                          // synthesized K(M^-1)
  std::optional<BasedModule> supplied_dual;  // cross-validation only
  std::vector<std::size_t> F;
  std::optional<SphericalDatum> spherical;

  std::vector<std::size_t> fixed_labels() const { return fixed_points(F); }
  GradedFusionDatum graded() const;
};

/// `{"conductor": n, "coords": {"k": "p/q", ...}}`; integers and "p/q" strings
/// are accepted as rationals. Floats are rejected.
CycNum cyc_from_json(const nlohmann::json& j, const std::string& where = "");
/// Canonical encoding: nonzero coordinates only, exponents below phi(n).
nlohmann::ordered_json cyc_to_json(const CycNum& a);
Rational parse_rational(const std::string& text);

/// Schema-level parse; throws DatasetError with a location on malformed input
/// or negative structure constants. Axioms are checked by validate_dataset.
Dataset parse_dataset(const nlohmann::json& j, const std::string& source = "<memory>");

/// Ring, module and graded-datum validators plus the spherical constraints.
Report validate_dataset(const Dataset& ds);

/// Reads `spec` as a path, then $TWV_DATASET_PATH/<spec>.json, then a bundled
/// name. Throws DatasetError if nothing matches.
nlohmann::json read_dataset_json(const std::string& spec, std::string* source = nullptr);

/// parse_dataset + validate_dataset; throws DatasetError naming the first
/// failed identity and its witness.
Dataset load_dataset(const std::string& spec);

std::vector<std::string> bundled_dataset_names();
/// nullptr when unknown.
const char* bundled_dataset_text(const std::string& name);

}  // namespace twv
