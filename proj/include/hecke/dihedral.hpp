#pragma once

#include "hecke/pair.hpp"

namespace hecke {

// The pair G = Z x| (Z/2Z), Gamma = {(0,+1), (0,-1)}. Double cosets are
// indexed by |n|; every non-identity one splits into the two left cosets
// with reps (n, +1) and (-n, +1).
class DihedralBackend : public Backend {
 public:
  explicit DihedralBackend(std::size_t budget = kDefaultBudget) : Backend(budget) {}

  std::string name() const override { return "dihedral"; }

  GroupElement identity() const override { return DihedralElement{0, 1}; }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  bool in_gamma(const GroupElement& a) const override;
  void validate(const GroupElement& a) const override;

  LeftCoset canonical_left_coset(const GroupElement& g) const override;
  DoubleCoset canonical_double_coset(const GroupElement& g) const override;
  std::vector<LeftCoset> left_cosets_of(const DoubleCoset& d) const override;

  std::vector<GroupElement> gamma_generators() const override {
    return {DihedralElement{0, -1}};
  }

  GroupElement parse_element(const nlohmann::json& j) const override;
  nlohmann::json element_json(const GroupElement& g) const override;
};

} // namespace hecke
