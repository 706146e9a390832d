#pragma once

#include <map>
#include <mutex>

#include "hecke/pair.hpp"

namespace hecke {

// The pair (SL2 over Q restricted to q-power denominators, entrywise
// q-integral matrices). This dense subgroup meets every double coset of
// (SL2(Q_q), SL2(Z_q)) and every left coset inside them, so all coset-level
// data of the p-adic pair is computed here with exact rationals.
//
// Double cosets are indexed by n >= 0 with canonical rep
// diag(q^n, q^-n); n(g) = -(minimum entry valuation), zero iff g is
// q-integral. Left cosets have the upper-triangular canonical form
// [[q^a, b], [0, q^-a]] with b a q-power-denominator rational in [0, q^a).
class Sl2Backend : public Backend {
 public:
  explicit Sl2Backend(long q, std::size_t budget = kDefaultBudget);

  std::string name() const override;
  long q() const { return q_; }

  GroupElement identity() const override;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  bool in_gamma(const GroupElement& a) const override;
  void validate(const GroupElement& a) const override;

  LeftCoset canonical_left_coset(const GroupElement& g) const override;
  DoubleCoset canonical_double_coset(const GroupElement& g) const override;
  std::vector<LeftCoset> left_cosets_of(const DoubleCoset& d) const override;

  std::vector<GroupElement> gamma_generators() const override;

  GroupElement parse_element(const nlohmann::json& j) const override;
  nlohmann::json element_json(const GroupElement& g) const override;

  // diag(q^n, q^-n).
  Sl2Element diag_rep(long n) const;
  DoubleCoset coset_of_index(long n) const { return DoubleCoset{diag_rep(n)}; }
  // n for a canonical double coset.
  long coset_index(const DoubleCoset& d) const;
  // Matrix [[q, k], [0, 1/q]].
  Sl2Element upper_rep(long k) const;

 private:
  long q_;
  mutable std::mutex cache_mutex_;
  mutable std::map<long, std::vector<LeftCoset>> coset_cache_;
};

} // namespace hecke
