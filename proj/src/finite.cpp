#include "hecke/finite.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace hecke {

namespace {

using Perm = std::vector<std::uint32_t>;

Perm compose(const Perm& p, const Perm& q) {
  // (p o q)(i) = p(q(i)): apply q first.
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm identity_perm(std::uint32_t n) {
  Perm r(n);
  for (std::uint32_t i = 0; i < n; ++i) r[i] = i;
  return r;
}

void check_perm(const Perm& p, std::uint32_t n) {
  if (p.size() != n) throw domain_error("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (auto v : p) {
    if (v >= n || seen[v]) throw domain_error("not a permutation");
    seen[v] = true;
  }
}

// Closure of a generator set, budget-capped.
std::set<Perm> generate(const std::vector<Perm>& gens, std::uint32_t n,
                        std::size_t order_budget) {
  std::set<Perm> seen{identity_perm(n)};
  std::vector<Perm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens) {
        Perm h = compose(f, g);
        if (seen.insert(h).second) {
          if (seen.size() > order_budget)
            throw budget_error("finite pair order budget exceeded");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

} // namespace

FinitePairSpec FinitePairSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("group_gens") ||
      !j.contains("subgroup_gens"))
    throw parse_error("finite pair spec needs n, group_gens, subgroup_gens");
  FinitePairSpec spec;
  if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() <= 0)
    throw parse_error("finite pair spec: n must be a positive integer");
  spec.n = j["n"].get<std::uint32_t>();
  auto read_gens = [&](const nlohmann::json& arr) {
    if (!arr.is_array()) throw parse_error("generator list must be an array");
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& g : arr) {
      if (!g.is_array()) throw parse_error("generator must be a one-line array");
      std::vector<std::uint32_t> p;
      for (const auto& v : g) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
          throw parse_error("permutation images must be integers >= 0");
        p.push_back(v.get<std::uint32_t>());
      }
      out.push_back(std::move(p));
    }
    return out;
  };
  spec.group_gens = read_gens(j["group_gens"]);
  spec.subgroup_gens = read_gens(j["subgroup_gens"]);
  return spec;
}

nlohmann::json FinitePairSpec::to_json() const {
  return nlohmann::json{{"n", n}, {"group_gens", group_gens}, {"subgroup_gens", subgroup_gens}};
}

FiniteBackend::FiniteBackend(std::uint32_t n, std::vector<FiniteElement> elements,
                             std::vector<FiniteElement> gamma,
                             std::vector<FiniteElement> gamma_gens,
                             std::vector<FiniteElement> group_gens,
                             std::vector<FiniteElement> core, std::size_t budget)
    : Backend(budget),
      n_(n),
      elements_(std::move(elements)),
      gamma_(std::move(gamma)),
      gamma_gens_(std::move(gamma_gens)),
      group_gens_(std::move(group_gens)),
      core_(std::move(core)) {}

std::unique_ptr<FiniteBackend> FiniteBackend::load(const FinitePairSpec& spec,
                                                   std::size_t budget,
                                                   std::size_t order_budget) {
  std::uint32_t n = spec.n;
  std::vector<Perm> ggens, sgens;
  for (const auto& p : spec.group_gens) {
    check_perm(p, n);
    ggens.push_back(p);
    ggens.push_back(invert(p));
  }
  for (const auto& p : spec.subgroup_gens) {
    check_perm(p, n);
    sgens.push_back(p);
    sgens.push_back(invert(p));
  }

  std::set<Perm> group = generate(ggens, n, order_budget);
  for (const auto& p : sgens)
    if (!group.count(p)) throw domain_error("subgroup not contained in group");
  std::set<Perm> subgroup = generate(sgens, n, order_budget);

  auto wrap = [](const std::set<Perm>& s) {
    std::vector<FiniteElement> out;
    out.reserve(s.size());
    for (const auto& p : s) out.push_back(FiniteElement{p});
    return out;
  };
  std::vector<FiniteElement> ggens_e, sgens_e;
  for (const auto& p : ggens) ggens_e.push_back(FiniteElement{p});
  for (const auto& p : sgens) sgens_e.push_back(FiniteElement{p});
  std::sort(ggens_e.begin(), ggens_e.end());
  ggens_e.erase(std::unique(ggens_e.begin(), ggens_e.end()), ggens_e.end());
  std::sort(sgens_e.begin(), sgens_e.end());
  sgens_e.erase(std::unique(sgens_e.begin(), sgens_e.end()), sgens_e.end());
  if (sgens_e.empty()) sgens_e.push_back(FiniteElement{identity_perm(n)});
  if (ggens_e.empty()) ggens_e.push_back(FiniteElement{identity_perm(n)});

  return std::unique_ptr<FiniteBackend>(
      new FiniteBackend(n, wrap(group), wrap(subgroup), std::move(sgens_e),
                        std::move(ggens_e), {FiniteElement{identity_perm(n)}}, budget));
}

FiniteElement FiniteBackend::canonical(const FiniteElement& g) const {
  if (core_.size() == 1) return g;
  Perm best;
  for (const auto& m : core_) {
    Perm cur = compose(g.perm, m.perm);
    if (best.empty() || cur < best) best = std::move(cur);
  }
  return FiniteElement{std::move(best)};
}

const FiniteElement& FiniteBackend::as_member(const GroupElement& g) const {
  const auto* e = std::get_if<FiniteElement>(&g);
  if (!e) throw domain_error("finite backend: element of wrong kind");
  return *e;
}

GroupElement FiniteBackend::identity() const {
  return FiniteElement{identity_perm(n_)};
}

GroupElement FiniteBackend::mul(const GroupElement& a, const GroupElement& b) const {
  return canonical(FiniteElement{compose(as_member(a).perm, as_member(b).perm)});
}

GroupElement FiniteBackend::inverse(const GroupElement& a) const {
  return canonical(FiniteElement{invert(as_member(a).perm)});
}

bool FiniteBackend::in_gamma(const GroupElement& a) const {
  return std::binary_search(gamma_.begin(), gamma_.end(), canonical(as_member(a)));
}

void FiniteBackend::validate(const GroupElement& a) const {
  const auto& e = as_member(a);
  check_perm(e.perm, n_);
  if (!std::binary_search(elements_.begin(), elements_.end(), canonical(e)))
    throw domain_error("permutation is not an element of the group");
}

LeftCoset FiniteBackend::canonical_left_coset(const GroupElement& g) const {
  validate(g);
  FiniteElement cur = canonical(as_member(g));
  // min over the orbit of g under right multiplication by Gamma.
  std::set<FiniteElement> seen{cur};
  std::vector<FiniteElement> frontier{cur};
  while (!frontier.empty()) {
    std::vector<FiniteElement> next;
    for (const auto& f : frontier)
      for (const auto& s : gamma_gens_) {
        FiniteElement h = canonical(FiniteElement{compose(f.perm, s.perm)});
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return LeftCoset{*seen.begin()};
}

std::vector<FiniteElement> FiniteBackend::double_coset_members(const FiniteElement& g) const {
  FiniteElement start = canonical(g);
  std::set<FiniteElement> seen{start};
  std::vector<FiniteElement> frontier{start};
  while (!frontier.empty()) {
    std::vector<FiniteElement> next;
    for (const auto& f : frontier)
      for (const auto& s : gamma_gens_) {
        for (FiniteElement h : {canonical(FiniteElement{compose(f.perm, s.perm)}),
                                canonical(FiniteElement{compose(s.perm, f.perm)})}) {
          if (seen.insert(h).second) {
            if (seen.size() > budget_)
              throw budget_error("finite double coset enumeration exceeds budget");
            next.push_back(std::move(h));
          }
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

DoubleCoset FiniteBackend::canonical_double_coset(const GroupElement& g) const {
  validate(g);
  auto members = double_coset_members(as_member(g));
  return DoubleCoset{*std::min_element(members.begin(), members.end())};
}

std::vector<LeftCoset> FiniteBackend::left_cosets_of(const DoubleCoset& d) const {
  auto members = double_coset_members(as_member(d.rep));
  std::set<FiniteElement> unassigned(members.begin(), members.end());
  std::vector<LeftCoset> out;
  while (!unassigned.empty()) {
    // peel off the right-multiplication orbit (= left coset) of the least
    // remaining member; that member is the coset's canonical rep.
    FiniteElement rep = *unassigned.begin();
    std::vector<FiniteElement> frontier{rep};
    unassigned.erase(unassigned.begin());
    while (!frontier.empty()) {
      std::vector<FiniteElement> next;
      for (const auto& f : frontier)
        for (const auto& s : gamma_gens_) {
          FiniteElement h = canonical(FiniteElement{compose(f.perm, s.perm)});
          auto it = unassigned.find(h);
          if (it != unassigned.end()) {
            unassigned.erase(it);
            next.push_back(std::move(h));
          }
        }
      frontier = std::move(next);
    }
    out.push_back(LeftCoset{rep});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> FiniteBackend::gamma_generators() const {
  std::vector<GroupElement> out;
  for (const auto& g : gamma_gens_) out.push_back(g);
  return out;
}

std::vector<DoubleCoset> FiniteBackend::double_cosets() const {
  std::set<FiniteElement> unassigned(elements_.begin(), elements_.end());
  std::vector<DoubleCoset> out;
  while (!unassigned.empty()) {
    auto members = double_coset_members(*unassigned.begin());
    out.push_back(DoubleCoset{*std::min_element(members.begin(), members.end())});
    for (const auto& m : members) unassigned.erase(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteElement> FiniteBackend::core_subgroup() const {
  // Largest subset of Gamma closed under conjugation by the group's
  // generators; since it equals the intersection of the conjugates of
  // Gamma, it is automatically a subgroup.
  std::set<FiniteElement> core(gamma_.begin(), gamma_.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<FiniteElement> drop;
    for (const auto& g : core) {
      for (const auto& s : group_gens_) {
        FiniteElement conj =
            canonical(FiniteElement{compose(compose(s.perm, g.perm), invert(s.perm))});
        if (!core.count(conj)) {
          drop.push_back(g);
          break;
        }
      }
    }
    for (const auto& g : drop) {
      core.erase(g);
      changed = true;
    }
  }
  return {core.begin(), core.end()};
}

FiniteBackend::Reduction FiniteBackend::reduce() const {
  std::vector<FiniteElement> core = core_subgroup();
  Reduction red;
  red.already_reduced = (core.size() == 1);

  // The quotient's canonicalization blocks are the full preimages of the
  // new core in raw permutation terms.
  std::set<FiniteElement> new_core;
  for (const auto& k : core)
    for (const auto& m : core_) new_core.insert(FiniteElement{compose(k.perm, m.perm)});

  std::vector<FiniteElement> nc(new_core.begin(), new_core.end());
  auto project = [&](const std::vector<FiniteElement>& src) {
    std::set<FiniteElement> out;
    for (const auto& e : src) {
      FiniteElement best = e;
      Perm cur;
      for (const auto& m : nc) {
        cur = compose(e.perm, m.perm);
        if (cur < best.perm) best.perm = cur;
      }
      out.insert(best);
    }
    return std::vector<FiniteElement>(out.begin(), out.end());
  };

  red.pair = std::unique_ptr<FiniteBackend>(
      new FiniteBackend(n_, project(elements_), project(gamma_), project(gamma_gens_),
                        project(group_gens_), std::move(nc), budget_));

  for (const auto& dc : double_cosets()) {
    GroupElement image = red.pair->canonical(as_member(dc.rep));
    red.coset_map.emplace(dc, red.pair->canonical_double_coset(image));
  }
  return red;
}

GroupElement FiniteBackend::parse_element(const nlohmann::json& j) const {
  if (!j.is_array()) throw parse_error("finite element must be a one-line permutation array");
  Perm p;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw parse_error("permutation images must be integers >= 0");
    p.push_back(v.get<std::uint32_t>());
  }
  FiniteElement e{std::move(p)};
  validate(GroupElement{e});
  return canonical(e);
}

nlohmann::json FiniteBackend::element_json(const GroupElement& g) const {
  return nlohmann::json(as_member(g).perm);
}

} // namespace hecke
