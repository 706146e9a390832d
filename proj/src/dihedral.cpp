#include "hecke/dihedral.hpp"

#include <nlohmann/json.hpp>

namespace hecke {

namespace {

const DihedralElement& as_dihedral(const GroupElement& g) {
  const auto* e = std::get_if<DihedralElement>(&g);
  if (!e) throw domain_error("dihedral backend: element of wrong kind");
  return *e;
}

} // namespace

GroupElement DihedralBackend::mul(const GroupElement& a, const GroupElement& b) const {
  const auto& x = as_dihedral(a);
  const auto& y = as_dihedral(b);
  return DihedralElement{x.n + x.s * y.n, x.s * y.s};
}

GroupElement DihedralBackend::inverse(const GroupElement& a) const {
  const auto& x = as_dihedral(a);
  return DihedralElement{-x.s * x.n, x.s};
}

bool DihedralBackend::in_gamma(const GroupElement& a) const {
  return as_dihedral(a).n == 0;
}

void DihedralBackend::validate(const GroupElement& a) const {
  const auto& x = as_dihedral(a);
  if (x.s != 1 && x.s != -1) throw domain_error("dihedral sign must be +1 or -1");
}

LeftCoset DihedralBackend::canonical_left_coset(const GroupElement& g) const {
  validate(g);
  return LeftCoset{DihedralElement{as_dihedral(g).n, 1}};
}

DoubleCoset DihedralBackend::canonical_double_coset(const GroupElement& g) const {
  validate(g);
  long n = as_dihedral(g).n;
  return DoubleCoset{DihedralElement{n < 0 ? -n : n, 1}};
}

std::vector<LeftCoset> DihedralBackend::left_cosets_of(const DoubleCoset& d) const {
  long n = as_dihedral(d.rep).n;
  if (n == 0) return {LeftCoset{DihedralElement{0, 1}}};
  return {LeftCoset{DihedralElement{-n, 1}}, LeftCoset{DihedralElement{n, 1}}};
}

GroupElement DihedralBackend::parse_element(const nlohmann::json& j) const {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw parse_error("dihedral element must be [n, s]");
  DihedralElement e{j[0].get<long>(), j[1].get<int>()};
  validate(GroupElement{e});
  return e;
}

nlohmann::json DihedralBackend::element_json(const GroupElement& g) const {
  const auto& x = as_dihedral(g);
  return nlohmann::json::array({x.n, x.s});
}

} // namespace hecke
