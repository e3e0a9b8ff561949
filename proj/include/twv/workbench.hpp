#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "twv/dataset.hpp"
#include "twv/report.hpp"

namespace twv {

/// Every applicable Verlinde-type formula on every triple, diffed against the
/// dataset's structure constants (module and classical forms) or against each
/// other (twisted fusion constants).
Report oracle_compare(const Dataset& ds);

/// Rescales the crossed S rows by seeded N-th roots of unity and checks that the
/// module multiplicities are unchanged while the twisted fusion constants pick
/// up exactly r_C r_C' conj(r_D).
Report gauge_test(const Dataset& ds, std::uint64_t seed);

struct ReportOptions {
  std::uint64_t seed = 0;
  bool timings = false;
};

/// Validation, both character backends, twisted extraction, the bridge,
/// unitarity, integrality, oracle sweep, Frobenius structure and one gauge test.
Report full_report(const Dataset& ds, const ReportOptions& options = {});

/// Canonical machine-readable form. Timings are included only on request so
/// that identical runs are byte-identical.
nlohmann::ordered_json report_to_json(const Report& report, bool timings = false);
std::string report_to_text(const Report& report, bool timings = false);

/// The command-line surface. Returns 0 on a passing verdict, 1 on a check
/// failure and 2 on usage errors or unknown datasets.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twv
