#include "hecke/dyadic.hpp"

#include <nlohmann/json.hpp>

namespace hecke {

namespace {

const DyadicElement& as_dyadic(const GroupElement& g) {
  const auto* e = std::get_if<DyadicElement>(&g);
  if (!e) throw domain_error("dyadic backend: element of wrong kind");
  return *e;
}

// b reduced into [0, m) modulo the lattice m*Z.
Rational reduce_mod(const Rational& b, const Rational& m) {
  Rational t = b / m;
  return b - m * Rational(t.floor());
}

} // namespace

GroupElement DyadicBackend::mul(const GroupElement& a, const GroupElement& b) const {
  const auto& x = as_dyadic(a);
  const auto& y = as_dyadic(b);
  return DyadicElement{x.b + Rational::power(2, x.k) * y.b, x.k + y.k};
}

GroupElement DyadicBackend::inverse(const GroupElement& a) const {
  const auto& x = as_dyadic(a);
  return DyadicElement{-(Rational::power(2, -x.k) * x.b), -x.k};
}

bool DyadicBackend::in_gamma(const GroupElement& a) const {
  const auto& x = as_dyadic(a);
  return x.k == 0 && x.b.is_integer();
}

void DyadicBackend::validate(const GroupElement& a) const {
  const auto& x = as_dyadic(a);
  if (!has_q_power_denominator(x.b, 2))
    throw domain_error("dyadic translation part needs a 2-power denominator");
}

LeftCoset DyadicBackend::canonical_left_coset(const GroupElement& g) const {
  validate(g);
  const auto& x = as_dyadic(g);
  // g*Gamma = { (b + 2^k n, k) : n in Z }, so b is well-defined mod 2^k Z.
  return LeftCoset{DyadicElement{reduce_mod(x.b, Rational::power(2, x.k)), x.k}};
}

DoubleCoset DyadicBackend::canonical_double_coset(const GroupElement& g) const {
  validate(g);
  const auto& x = as_dyadic(g);
  // Gamma*g*Gamma translates b by the lattice Z + 2^k Z = 2^min(k,0) Z.
  Rational m = Rational::power(2, x.k < 0 ? x.k : 0);
  return DoubleCoset{DyadicElement{reduce_mod(x.b, m), x.k}};
}

std::vector<LeftCoset> DyadicBackend::left_cosets_of(const DoubleCoset& d) const {
  const auto& x = as_dyadic(d.rep);
  if (x.k <= 0) return {LeftCoset{x}};
  // 2^k left cosets, reps (b + j, k) for 0 <= j < 2^k; already reduced
  // since the double-coset rep has b in [0, 1).
  if (x.k >= 63 || (std::uint64_t{1} << x.k) > budget_)
    throw budget_error("dyadic coset enumeration exceeds budget");
  std::uint64_t count = std::uint64_t{1} << x.k;
  std::vector<LeftCoset> out;
  out.reserve(count);
  for (std::uint64_t j = 0; j < count; ++j)
    out.push_back(LeftCoset{DyadicElement{x.b + Rational(static_cast<long>(j)), x.k}});
  return out;
}

GroupElement DyadicBackend::parse_element(const nlohmann::json& j) const {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_number_integer())
    throw parse_error("dyadic element must be [\"num/den\", k]");
  DyadicElement e{Rational::parse(j[0].get<std::string>()), j[1].get<long>()};
  validate(GroupElement{e});
  return e;
}

nlohmann::json DyadicBackend::element_json(const GroupElement& g) const {
  const auto& x = as_dyadic(g);
  return nlohmann::json::array({x.b.str(), x.k});
}

} // namespace hecke
