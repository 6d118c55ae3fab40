#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace coxres {

// Bad arguments to an operation (wrong range, non-coprime, unknown label...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Group parameters violating an admissibility condition; carries its name.
struct AdmissibilityError : ParameterError {
  std::string condition;
  AdmissibilityError(const std::string& cond, const std::string& msg)
      : ParameterError(msg), condition(cond) {}
};

// Enumeration closure exceeded the configured cap.
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An identity the construction guarantees failed to hold; signals a bug.
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

// More than one candidate survived a search that expects a unique answer.
struct AmbiguityError : std::runtime_error {
  std::vector<std::string> candidates;
  AmbiguityError(const std::string& msg, std::vector<std::string> cands)
      : std::runtime_error(msg), candidates(std::move(cands)) {}
};

}  // namespace coxres
