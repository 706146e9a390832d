#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Malformed textual or JSON input.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that violates a mathematical precondition
// (determinant != 1, non-prime modulus, mismatched backends, ...).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration exceeded the configured coset budget. Never silently
// truncated; callers decide whether to retry with a larger budget.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hecke
