#include "twv/report.hpp"

namespace twv {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::undecided: return "undecided";
  }
  return "undecided";
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Check c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
  for (const auto& [stage, ms] : other.timings_ms) timings_ms.emplace_back(prefix + stage, ms);
}

Status Report::verdict() const {
  bool undecided = false;
  for (const auto& c : checks) {
    if (!c.mandatory) continue;
    if (c.status == Status::fail) return Status::fail;
    if (c.status == Status::undecided) undecided = true;
  }
  return undecided ? Status::undecided : Status::pass;
}

std::string Report::first_failure() const {
  for (const auto& c : checks) {
    if (c.mandatory && c.status != Status::pass) {
      return c.name + (c.witnesses.empty() ? std::string() : ": " + c.witnesses.front());
    }
  }
  return {};
}

}  // namespace twv
