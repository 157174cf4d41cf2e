// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace eonplan {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorKind {
  validation = 2,  // malformed or inconsistent input
  infeasible = 3,  // well-formed input with no solution (blocking, no disjoint pair, ...)
  internal = 4,    // broken invariant; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

inline Error validation_error(const std::string& message) {
  return Error(ErrorKind::validation, message);
}

inline Error infeasible_error(const std::string& message) {
  return Error(ErrorKind::infeasible, message);
}

inline Error internal_error(const std::string& message) {
  return Error(ErrorKind::internal, message);
}

}  // namespace eonplan
