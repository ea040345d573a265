#pragma once

#include <stdexcept>
#include <string>

namespace ssshapelets {

// Malformed input data or arguments (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters that cannot be satisfied by the data, e.g. a chain longer than
// the series (CLI exit code 3).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ErrorKind { kInput, kInfeasible, kInternal };

// Error raised by the pipeline, tagged with the stage that failed.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, ErrorKind kind, const std::string& what)
      : std::runtime_error(stage + ": " + what),
        stage_(std::move(stage)),
        kind_(kind) {}

  const std::string& stage() const { return stage_; }
  ErrorKind kind() const { return kind_; }

 private:
  std::string stage_;
  ErrorKind kind_;
};

}  // namespace ssshapelets
