#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hecke/pair.hpp"

namespace hecke {

// Deterministic generator for the property suites; the raw engine is fully
// specified by the standard, and bounded draws avoid library-dependent
// distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  bool coin() { return (next() & 1) != 0; }

  // Inclusive range.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational small_rational(long max_abs_num, long max_den) {
    long num = uniform(-max_abs_num, max_abs_num);
    long den = uniform(1, max_den);
    return Rational(num, den);
  }

 private:
  std::mt19937_64 eng_;
};

struct PropertyOutcome {
  std::string suite;
  std::string name;
  unsigned trials;
  bool passed;
  std::string failure;  // reproducing input when failed
};

struct VerifyOptions {
  std::string suite = "all";  // all | core | algebra | spherical | growth
  unsigned trials = 100;
  std::uint64_t seed = 0;
  std::size_t budget = Backend::kDefaultBudget;
};

// Runs the property suites; outcomes are deterministic for fixed options.
std::vector<PropertyOutcome> run_verification(const VerifyOptions& options);

} // namespace hecke
