#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hecke/scalar.hpp"

namespace hecke {

// Element of a finite permutation pair (or its reduction): one-line image
// arrays, stored block-canonical for the owning backend.
struct FiniteElement {
  std::vector<std::uint32_t> perm;

  bool operator==(const FiniteElement&) const = default;
  bool operator<(const FiniteElement& o) const { return perm < o.perm; }
};

// Element of Z x| (Z/2Z): pairs (n, s) with (n,s)(m,t) = (n + s*m, s*t).
struct DihedralElement {
  long n = 0;
  int s = 1;  // +1 or -1

  bool operator==(const DihedralElement&) const = default;
  bool operator<(const DihedralElement& o) const {
    return std::tie(n, s) < std::tie(o.n, o.s);
  }
};

// Element of the dyadic affine pair: (b, k)(b', k') = (b + 2^k b', k + k'),
// b a rational with 2-power denominator.
struct DyadicElement {
  Rational b;
  long k = 0;

  bool operator==(const DyadicElement&) const = default;
  bool operator<(const DyadicElement& o) const {
    if (k != o.k) return k < o.k;
    return b < o.b;
  }
};

// 2x2 determinant-1 matrix over rationals with q-power denominators.
struct Sl2Element {
  Rational a, b, c, d;

  bool operator==(const Sl2Element&) const = default;
  bool operator<(const Sl2Element& o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
  }
};

using GroupElement = std::variant<FiniteElement, DihedralElement, DyadicElement, Sl2Element>;

// std::variant's relational operators compare alternative index first, then
// the held value; each alternative defines a total order on canonical reps,
// so GroupElement ordering is total and deterministic.

// Canonical representative of a coset gGamma. Two LeftCosets are equal iff
// their reps are equal.
struct LeftCoset {
  GroupElement rep;

  bool operator==(const LeftCoset& o) const { return rep == o.rep; }
  bool operator<(const LeftCoset& o) const { return rep < o.rep; }
};

// Canonical representative of a double coset Gamma g Gamma.
struct DoubleCoset {
  GroupElement rep;

  bool operator==(const DoubleCoset& o) const { return rep == o.rep; }
  bool operator<(const DoubleCoset& o) const { return rep < o.rep; }
};

// The Hecke-pair backend contract. Backends are immutable after
// construction and all operations are pure; internal memo tables behave as
// pure caches. Elements are plain values; mixing elements across backends
// is guarded by the operations that take two of them.
class Backend {
 public:
  explicit Backend(std::size_t budget) : budget_(budget) {}
  virtual ~Backend() = default;

  Backend(const Backend&) = delete;
  Backend& operator=(const Backend&) = delete;

  virtual std::string name() const = 0;

  virtual GroupElement identity() const = 0;
  virtual GroupElement mul(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inverse(const GroupElement& a) const = 0;
  virtual bool in_gamma(const GroupElement& a) const = 0;

  // Rejects malformed elements (wrong variant, determinant != 1, ...).
  virtual void validate(const GroupElement& a) const = 0;

  // Constant on g*Gamma; the returned rep is itself in g*Gamma.
  virtual LeftCoset canonical_left_coset(const GroupElement& g) const = 0;
  // Constant on Gamma*g*Gamma.
  virtual DoubleCoset canonical_double_coset(const GroupElement& g) const = 0;

  // Pairwise-distinct cosets whose union is the double coset, sorted by
  // canonical rep. Throws budget_error past the enumeration cap.
  virtual std::vector<LeftCoset> left_cosets_of(const DoubleCoset& d) const = 0;

  // Generators of Gamma inside the backend's element set (with their
  // inverses reachable by words); used by enumeration-style checks.
  virtual std::vector<GroupElement> gamma_generators() const = 0;

  virtual GroupElement parse_element(const nlohmann::json& j) const = 0;
  virtual nlohmann::json element_json(const GroupElement& g) const = 0;

  std::size_t budget() const { return budget_; }

  static constexpr std::size_t kDefaultBudget = 1000000;

 protected:
  std::size_t budget_;
};

struct CosetCounts {
  std::uint64_t left;
  std::uint64_t right;
};

// L via left_cosets_of; R as L of the inverse's double coset (L(g) = R(g^-1)).
CosetCounts coset_counts(const Backend& backend, const DoubleCoset& d);

// Number of left cosets in the double coset.
std::uint64_t left_count(const Backend& backend, const DoubleCoset& d);

// Modular function Delta = L/R as an exact rational.
Rational delta(const Backend& backend, const DoubleCoset& d);

} // namespace hecke
