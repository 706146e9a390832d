#pragma once

#include <map>
#include <memory>

#include "hecke/pair.hpp"

namespace hecke {

// Input description of a finite permutation pair.
struct FinitePairSpec {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> group_gens;
  std::vector<std::vector<std::uint32_t>> subgroup_gens;

  static FinitePairSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// A finite Hecke pair with full element tables, double cosets enumerated by
// brute force. The same class also models reductions: elements are stored
// canonical with respect to a normal subgroup `core` (the min of the block
// g*core in lexicographic one-line order), so a quotient pair is just
// another instance with a non-trivial core.
class FiniteBackend : public Backend {
 public:
  static constexpr std::size_t kDefaultOrderBudget = 10000;

  // Builds the tables; rejects subgroup generators outside the group and
  // groups larger than order_budget.
  static std::unique_ptr<FiniteBackend> load(const FinitePairSpec& spec,
                                             std::size_t budget = kDefaultBudget,
                                             std::size_t order_budget = kDefaultOrderBudget);

  std::string name() const override { return "finite"; }

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

  std::uint32_t degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t gamma_order() const { return gamma_.size(); }
  const std::vector<FiniteElement>& elements() const { return elements_; }
  const std::vector<FiniteElement>& gamma_members() const { return gamma_; }

  // All double cosets, sorted by canonical rep.
  std::vector<DoubleCoset> double_cosets() const;

  // The normal core of Gamma in G: the largest normal subgroup of G
  // contained in Gamma, as a sorted element set.
  std::vector<FiniteElement> core_subgroup() const;

  struct Reduction {
    std::unique_ptr<FiniteBackend> pair;           // (G/core, Gamma/core)
    std::map<DoubleCoset, DoubleCoset> coset_map;  // original -> reduced
    bool already_reduced = false;
  };
  // Quotient by the normal core; the reduced pair has trivial core.
  Reduction reduce() const;

 private:
  FiniteBackend(std::uint32_t n, std::vector<FiniteElement> elements,
                std::vector<FiniteElement> gamma, std::vector<FiniteElement> gamma_gens,
                std::vector<FiniteElement> group_gens, std::vector<FiniteElement> core,
                std::size_t budget);

  FiniteElement canonical(const FiniteElement& g) const;
  const FiniteElement& as_member(const GroupElement& g) const;
  std::vector<FiniteElement> double_coset_members(const FiniteElement& g) const;

  std::uint32_t n_;
  std::vector<FiniteElement> elements_;    // sorted canonical reps
  std::vector<FiniteElement> gamma_;       // sorted canonical reps
  std::vector<FiniteElement> gamma_gens_;  // canonical, closed under inverse
  std::vector<FiniteElement> group_gens_;  // canonical, closed under inverse
  std::vector<FiniteElement> core_;        // raw block members for canonicalization
};

} // namespace hecke
