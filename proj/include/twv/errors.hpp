#pragma once

#include <stdexcept>
#include <string>

namespace twv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

class ConductorOverflow : public Error {
 public:
  explicit ConductorOverflow(long requested)
      : Error("conductor " + std::to_string(requested) + " exceeds the configured ceiling") {}
};

// Raised by dataset parsing: malformed JSON, schema violations, negative constants.
class DatasetError : public Error {
 public:
  using Error::Error;
};

class UnknownDataset : public DatasetError {
 public:
  explicit UnknownDataset(const std::string& spec) : DatasetError("unknown dataset '" + spec + "'") {}
};

// An identity that must hold for consistent input did not (the message carries the witness).
class CheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace twv
