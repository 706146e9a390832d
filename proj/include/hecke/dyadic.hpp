#pragma once

#include "hecke/pair.hpp"

namespace hecke {

// The dyadic affine pair: G = { (b, k) : b in Z[1/2], k in Z } with
// (b,k)(b',k') = (b + 2^k b', k+k'), Gamma = { (n, 0) : n in Z }.
// Non-unimodular: Delta((b,k)) = 2^k.
class DyadicBackend : public Backend {
 public:
  explicit DyadicBackend(std::size_t budget = kDefaultBudget) : Backend(budget) {}

  std::string name() const override { return "dyadic"; }

  GroupElement identity() const override { return DyadicElement{Rational(0), 0}; }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  bool in_gamma(const GroupElement& a) const override;
  void validate(const GroupElement& a) const override;

  LeftCoset canonical_left_coset(const GroupElement& g) const override;
  DoubleCoset canonical_double_coset(const GroupElement& g) const override;
  std::vector<LeftCoset> left_cosets_of(const DoubleCoset& d) const override;

  std::vector<GroupElement> gamma_generators() const override {
    return {DyadicElement{Rational(1), 0}};
  }

  GroupElement parse_element(const nlohmann::json& j) const override;
  nlohmann::json element_json(const GroupElement& g) const override;
};

} // namespace hecke
