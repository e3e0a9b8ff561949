#pragma once

#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace twv {

enum class Status { pass, fail, undecided };
std::string to_string(Status s);

/// One named identity check. Witnesses name the labels at which it failed.
struct Check {
  std::string name;
  Status status = Status::pass;
  bool mandatory = true;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::string>> info;

  void fail(std::string witness) {
    status = Status::fail;
    witnesses.push_back(std::move(witness));
  }
  void undecided(std::string witness) {
    if (status == Status::pass) status = Status::undecided;
    witnesses.push_back(std::move(witness));
  }
  void note(std::string key, std::string value) { info.emplace_back(std::move(key), std::move(value)); }
  bool passed() const { return status == Status::pass; }
};

struct Report {
  std::string title;
  std::deque<Check> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  Check& add(std::string name, bool mandatory = true) {
    checks.push_back(Check{std::move(name), Status::pass, mandatory, {}, {}});
    return checks.back();
  }
  void append(const Report& other, const std::string& prefix = "");

  /// pass iff every mandatory check passes; otherwise fail if any mandatory check failed.
  Status verdict() const;
  bool passed() const { return verdict() == Status::pass; }
  /// First failing witness, for error messages.
  std::string first_failure() const;
};

}  // namespace twv
