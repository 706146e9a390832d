#pragma once

#include <optional>
#include <set>

#include "hecke/algebra.hpp"

namespace hecke {

// Finite set of double cosets of one backend.
class CosetSet {
 public:
  explicit CosetSet(const Backend& backend) : backend_(&backend) {}

  const Backend& backend() const { return *backend_; }
  const std::set<DoubleCoset>& cosets() const { return cosets_; }
  bool empty() const { return cosets_.empty(); }
  std::size_t size() const { return cosets_.size(); }

  void insert(const DoubleCoset& d) { cosets_.insert(d); }
  void insert_element(const GroupElement& g) {
    cosets_.insert(backend_->canonical_double_coset(g));
  }
  bool contains(const DoubleCoset& d) const { return cosets_.count(d) != 0; }

  bool operator==(const CosetSet& o) const;

 private:
  const Backend* backend_;
  std::set<DoubleCoset> cosets_;
};

// AB = the double cosets meeting some Gamma a Gamma b Gamma; computed as
// the union of supports of e_[a] * e_[b] over pairs, reusing the
// convolution engine.
CosetSet set_product(const CosetSet& a, const CosetSet& b);

// L(A) = sum of left-coset counts over the members.
std::uint64_t total_L(const CosetSet& a);

struct GrowthRow {
  unsigned n;
  std::size_t set_size;
  std::uint64_t l_value;
  std::optional<double> root;   // L(A^n)^(1/n), n >= 1
  std::optional<double> ratio;  // L(A^n)/L(A^(n-1)), n >= 1
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  bool truncated = false;       // enumeration budget hit; rows end early
  std::string classification;   // heuristic label, see growth_sequence
  double band;
  unsigned window;
};

// Iterates A^0 = A, A^n = A * A^(n-1) and reports exact L values with
// derived roots/ratios. The classification is heuristic: "subexponential
// evidence" when every ratio in the last `window` rows lies within `band`
// of 1, "no subexponential evidence" otherwise, "inconclusive" when fewer
// rows exist.
GrowthReport growth_sequence(const CosetSet& a, unsigned nmax, double band = 0.1,
                             unsigned window = 3);

} // namespace hecke
