#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

// Thrown when an operation would exceed its enumeration / pair-scan budget.
// Callers can catch this and either raise the budget or fall back to a
// sampled / formula-based path; it is not a correctness failure.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an input fails a declared expectation (e.g. an asserted
// minimum distance that enumeration disproves, or a preset requirement
// the supplied code does not meet).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cstar
