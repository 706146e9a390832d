#include "hecke/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hecke/algebra.hpp"
#include "hecke/dihedral.hpp"
#include "hecke/dyadic.hpp"
#include "hecke/growth.hpp"
#include "hecke/json_io.hpp"
#include "hecke/spherical.hpp"

namespace hecke {

namespace {

// ---------------------------------------------------------------------
// sampling

GroupElement random_gamma_word(const Backend& b, Rng& rng, int max_len) {
  auto gens = b.gamma_generators();
  GroupElement g = b.identity();
  int len = static_cast<int>(rng.uniform(1, max_len));
  for (int i = 0; i < len; ++i) {
    GroupElement s = gens[static_cast<std::size_t>(rng.next() % gens.size())];
    if (rng.coin()) s = b.inverse(s);
    g = b.mul(g, s);
  }
  return g;
}

// Per-backend random elements sized so that triple convolutions stay cheap.
struct Sampler {
  const Backend* backend;
  std::function<GroupElement(Rng&)> element;

  GroupElement gamma(Rng& rng) const { return random_gamma_word(*backend, rng, 6); }

  GaussianRational coeff(Rng& rng, bool real_only) const {
    Rational re = rng.small_rational(3, 3);
    if (re.is_zero()) re = Rational(1);
    if (real_only || rng.coin()) return GaussianRational(re);
    return {re, rng.small_rational(3, 3)};
  }

  HeckeElement hecke(Rng& rng, int max_terms, bool real_only = false) const {
    HeckeElement f(*backend);
    int terms = static_cast<int>(rng.uniform(1, max_terms));
    for (int i = 0; i < terms; ++i)
      f.add_term(backend->canonical_double_coset(element(rng)), coeff(rng, real_only));
    return f;
  }

  CosetFunction coset_fn(Rng& rng, int max_terms) const {
    CosetFunction f(*backend);
    int terms = static_cast<int>(rng.uniform(1, max_terms));
    for (int i = 0; i < terms; ++i)
      f.add_term(backend->canonical_left_coset(element(rng)), coeff(rng, false));
    return f;
  }
};

Sampler dihedral_sampler(const DihedralBackend& b) {
  return {&b, [&b](Rng& rng) -> GroupElement {
            return DihedralElement{rng.uniform(-6, 6), rng.coin() ? 1 : -1};
          }};
}

Sampler dyadic_sampler(const DyadicBackend& b) {
  return {&b, [&b](Rng& rng) -> GroupElement {
            long e = rng.uniform(0, 3);
            Rational bpart = Rational(rng.uniform(-24, 24)) / Rational::power(2, e);
            return DyadicElement{bpart, rng.uniform(-2, 2)};
          }};
}

Sampler sl2_sampler(const Sl2Backend& b, long max_index) {
  return {&b, [&b, max_index](Rng& rng) -> GroupElement {
            GroupElement g = random_gamma_word(b, rng, 4);
            g = b.mul(g, b.diag_rep(rng.uniform(0, max_index)));
            return b.mul(g, random_gamma_word(b, rng, 4));
          }};
}

Sampler finite_sampler(const FiniteBackend& b) {
  return {&b, [&b](Rng& rng) -> GroupElement {
            const auto& all = b.elements();
            return all[static_cast<std::size_t>(rng.next() % all.size())];
          }};
}

std::string element_str(const Backend& b, const GroupElement& g) {
  return b.element_json(g).dump();
}

std::string hecke_str(const HeckeElement& f) { return hecke_element_json(f).dump(); }

// ---------------------------------------------------------------------
// fixtures

struct FiniteFixture {
  std::string label;
  std::unique_ptr<FiniteBackend> backend;
};

std::vector<FiniteFixture> make_fixtures(std::size_t budget) {
  std::vector<FiniteFixture> out;
  auto add = [&](std::string label, FinitePairSpec spec) {
    out.push_back({std::move(label), FiniteBackend::load(spec, budget)});
  };
  // S3 with the order-2 subgroup <(0 1)>.
  add("S3/<(01)>", {3, {{1, 0, 2}, {1, 2, 0}}, {{1, 0, 2}}});
  // S3 with the normal subgroup A3.
  add("S3/A3", {3, {{1, 0, 2}, {1, 2, 0}}, {{1, 2, 0}}});
  // S3 with the trivial subgroup: the full group algebra.
  add("S3/1", {3, {{1, 0, 2}, {1, 2, 0}}, {}});
  // S4 with the point stabilizer of 3 (isomorphic to S3).
  add("S4/Stab(3)", {4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, {{1, 0, 2, 3}, {1, 2, 0, 3}}});
  // C6 with C2; abelian, so the subgroup is normal with quotient C3.
  add("C6/C2", {6, {{1, 2, 3, 4, 5, 0}}, {{3, 4, 5, 0, 1, 2}}});
  // C2 x S3 with Gamma = C2 x <(2 3)>; the core C2 sits strictly inside Gamma.
  add("C2xS3/C2x<(23)>", {5, {{1, 0, 2, 3, 4}, {0, 1, 3, 2, 4}, {0, 1, 3, 4, 2}},
                          {{1, 0, 2, 3, 4}, {0, 1, 3, 2, 4}}});
  return out;
}

// ---------------------------------------------------------------------
// harness

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Runner {
  const VerifyOptions& options;
  std::vector<PropertyOutcome> outcomes;

  bool want(const std::string& suite) const {
    return options.suite == "all" || options.suite == suite;
  }

  // body returns a failure string, or empty for pass.
  void run(const std::string& suite, const std::string& name, unsigned trials,
           const std::function<std::string(unsigned, Rng&)>& body) {
    if (!want(suite)) return;
    Rng rng(options.seed ^ fnv1a(suite + "/" + name));
    std::string failure;
    for (unsigned t = 0; t < trials && failure.empty(); ++t) failure = body(t, rng);
    outcomes.push_back({suite, name, trials, failure.empty(), failure});
  }
};

// Right cosets of d enumerated directly: orbit of Gamma*rep under right
// multiplication by Gamma generators, keyed by the canonical left coset of
// the inverse.
std::uint64_t right_count_enumerated(const Backend& b, const DoubleCoset& d) {
  auto gens = b.gamma_generators();
  std::vector<GroupElement> sides;
  for (const auto& s : gens) {
    sides.push_back(s);
    sides.push_back(b.inverse(s));
  }
  std::set<LeftCoset> keys{b.canonical_left_coset(b.inverse(d.rep))};
  std::vector<GroupElement> frontier{d.rep};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier) {
      for (const auto& s : sides) {
        GroupElement y = b.mul(x, s);
        if (keys.insert(b.canonical_left_coset(b.inverse(y))).second) {
          if (keys.size() > b.budget())
            throw budget_error("right coset enumeration exceeds budget");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return keys.size();
}

// The convolution value at an arbitrary point of a double coset, computed
// from the definition; used to cross-check the engine.
GaussianRational definition_sum(const Backend& b, const HeckeElement& f1,
                                const HeckeElement& f2, const GroupElement& g) {
  GaussianRational total;
  for (const auto& [d1, c1] : f1.terms())
    for (const auto& h : b.left_cosets_of(d1)) {
      GaussianRational c2 =
          f2.coefficient(b.canonical_double_coset(b.mul(b.inverse(h.rep), g)));
      if (!c2.is_zero()) total += c1 * c2;
    }
  return total;
}

// ---------------------------------------------------------------------
// dense group-algebra helpers for the finite-backend inner product oracle

using DenseFn = std::map<FiniteElement, GaussianRational>;

DenseFn dense_of_coset_fn(const FiniteBackend& b, const CosetFunction& f) {
  DenseFn out;
  for (const auto& e : b.elements()) {
    GaussianRational v = f.coefficient(b.canonical_left_coset(e));
    if (!v.is_zero()) out.emplace(e, v);
  }
  return out;
}

DenseFn dense_convolve(const FiniteBackend& b, const DenseFn& f, const DenseFn& g) {
  Rational w(1, static_cast<long>(b.gamma_order()));
  DenseFn out;
  for (const auto& [x, fx] : f)
    for (const auto& [y, gy] : g) {
      FiniteElement xy = std::get<FiniteElement>(b.mul(x, y));
      out[xy] += fx * gy * w;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

DenseFn dense_star(const FiniteBackend& b, const DenseFn& f) {
  DenseFn out;
  for (const auto& [x, fx] : f)
    out.emplace(std::get<FiniteElement>(b.inverse(x)), fx.conj());
  return out;
}

} // namespace

std::vector<PropertyOutcome> run_verification(const VerifyOptions& options) {
  Runner runner{options, {}};

  DihedralBackend dihedral(options.budget);
  DyadicBackend dyadic(options.budget);
  Sl2Backend sl2q2(2, options.budget);
  Sl2Backend sl2q3(3, options.budget);
  auto fixtures = make_fixtures(options.budget);

  std::vector<Sampler> samplers;
  samplers.push_back(dihedral_sampler(dihedral));
  samplers.push_back(dyadic_sampler(dyadic));
  samplers.push_back(sl2_sampler(sl2q2, 2));
  samplers.push_back(sl2_sampler(sl2q3, 1));
  for (const auto& fx : fixtures) samplers.push_back(finite_sampler(*fx.backend));

  auto backend_label = [&](const Backend& b) -> std::string {
    for (const auto& fx : fixtures)
      if (fx.backend.get() == &b) return "finite " + fx.label;
    return b.name();
  };

  // ----------------------------- core -----------------------------
  for (const auto& sp : samplers) {
    const Backend& b = *sp.backend;
    std::string label = backend_label(b);

    runner.run("core", label + ": group axioms", options.trials,
               [&](unsigned, Rng& rng) -> std::string {
                 GroupElement x = sp.element(rng), y = sp.element(rng), z = sp.element(rng);
                 if (!(b.mul(b.mul(x, y), z) == b.mul(x, b.mul(y, z))))
                   return "associativity: " + element_str(b, x) + " " + element_str(b, y) +
                          " " + element_str(b, z);
                 if (!(b.mul(x, b.inverse(x)) == b.identity()))
                   return "inverse: " + element_str(b, x);
                 if (!(b.mul(b.identity(), x) == x && b.mul(x, b.identity()) == x))
                   return "identity: " + element_str(b, x);
                 return {};
               });

    runner.run("core", label + ": canonical coset invariance", options.trials,
               [&](unsigned, Rng& rng) -> std::string {
                 GroupElement g = sp.element(rng);
                 GroupElement g1 = sp.gamma(rng), g2 = sp.gamma(rng);
                 if (!b.in_gamma(g1) || !b.in_gamma(g2)) return "sampled gamma not in Gamma";
                 LeftCoset lc = b.canonical_left_coset(g);
                 if (!(b.canonical_left_coset(b.mul(g, g2)) == lc))
                   return "left coset: " + element_str(b, g) + " gamma " + element_str(b, g2);
                 if (!b.in_gamma(b.mul(b.inverse(lc.rep), g)))
                   return "left rep outside coset: " + element_str(b, g);
                 DoubleCoset dc = b.canonical_double_coset(g);
                 if (!(b.canonical_double_coset(b.mul(b.mul(g1, g), g2)) == dc))
                   return "double coset: " + element_str(b, g);
                 if (!(b.canonical_double_coset(dc.rep) == dc))
                   return "double rep not fixed: " + element_str(b, g);
                 return {};
               });

    runner.run("core", label + ": L(g) = R(g^-1) by enumeration",
               std::min<unsigned>(options.trials, 25u),
               [&](unsigned, Rng& rng) -> std::string {
                 GroupElement g = sp.element(rng);
                 DoubleCoset d = b.canonical_double_coset(g);
                 DoubleCoset dinv = b.canonical_double_coset(b.inverse(g));
                 std::uint64_t l = left_count(b, d);
                 std::uint64_t r_inv = right_count_enumerated(b, dinv);
                 if (l != r_inv)
                   return "L=" + std::to_string(l) + " R(inv)=" + std::to_string(r_inv) +
                          " at " + element_str(b, g);
                 return {};
               });

    runner.run("core", label + ": Delta homomorphism", options.trials,
               [&](unsigned, Rng& rng) -> std::string {
                 GroupElement x = sp.element(rng), y = sp.element(rng);
                 Rational dx = delta(b, b.canonical_double_coset(x));
                 Rational dy = delta(b, b.canonical_double_coset(y));
                 Rational dxy = delta(b, b.canonical_double_coset(b.mul(x, y)));
                 if (dxy != dx * dy)
                   return "Delta(" + element_str(b, x) + " * " + element_str(b, y) + ")";
                 return {};
               });

    runner.run("core", label + ": left coset decomposition",
               std::min<unsigned>(options.trials, 25u),
               [&](unsigned, Rng& rng) -> std::string {
                 GroupElement g = sp.element(rng);
                 DoubleCoset d = b.canonical_double_coset(g);
                 auto cosets = b.left_cosets_of(d);
                 for (std::size_t i = 0; i < cosets.size(); ++i) {
                   if (i > 0 && !(cosets[i - 1] < cosets[i])) return "not sorted/distinct";
                   if (!(b.canonical_double_coset(cosets[i].rep) == d))
                     return "coset escapes the double coset";
                   if (!(b.canonical_left_coset(cosets[i].rep) == cosets[i]))
                     return "rep not canonical";
                 }
                 // a random member's left coset must appear in the list
                 GroupElement member = b.mul(b.mul(sp.gamma(rng), d.rep), sp.gamma(rng));
                 LeftCoset lc = b.canonical_left_coset(member);
                 if (!std::binary_search(cosets.begin(), cosets.end(), lc))
                   return "member coset missing: " + element_str(b, member);
                 return {};
               });
  }

  // backend-specific structure
  for (Sl2Backend* s : {&sl2q2, &sl2q3}) {
    runner.run("core", s->name() + ": coset index vs membership", options.trials,
               [&, s](unsigned, Rng& rng) -> std::string {
                 Sampler sp = sl2_sampler(*s, 2);
                 GroupElement g = sp.element(rng);
                 long n = s->coset_index(s->canonical_double_coset(g));
                 if (n < 0) return "negative index at " + element_str(*s, g);
                 if ((n == 0) != s->in_gamma(g))
                   return "index/membership mismatch at " + element_str(*s, g);
                 return {};
               });
    runner.run("core", s->name() + ": L(x_n) = (q+1) q^(2n-1)", 2,
               [&, s](unsigned t, Rng&) -> std::string {
                 long n = static_cast<long>(t) + 1;
                 std::uint64_t expect = static_cast<std::uint64_t>(s->q() + 1);
                 for (long i = 0; i < 2 * n - 1; ++i) expect *= static_cast<std::uint64_t>(s->q());
                 std::uint64_t got = left_count(*s, s->coset_of_index(n));
                 if (got != expect)
                   return "n=" + std::to_string(n) + " got " + std::to_string(got);
                 return {};
               });
  }

  runner.run("core", "dyadic: Delta((b,k)) = 2^k", options.trials,
             [&](unsigned, Rng& rng) -> std::string {
               Sampler sp = dyadic_sampler(dyadic);
               GroupElement g = sp.element(rng);
               long k = std::get<DyadicElement>(g).k;
               if (delta(dyadic, dyadic.canonical_double_coset(g)) != Rational::power(2, k))
                 return "at " + element_str(dyadic, g);
               return {};
             });

  for (const auto& fx : fixtures) {
    runner.run("core", "finite " + fx.label + ": reduction structure constants", 1,
               [&](unsigned, Rng&) -> std::string {
                 auto red = fx.backend->reduce();
                 auto dcs = fx.backend->double_cosets();
                 for (const auto& da : dcs)
                   for (const auto& db : dcs) {
                     HeckeElement prod = convolve(HeckeElement::basis(*fx.backend, da.rep),
                                                  HeckeElement::basis(*fx.backend, db.rep));
                     HeckeElement rprod =
                         convolve(HeckeElement::basis(*red.pair, red.coset_map.at(da).rep),
                                  HeckeElement::basis(*red.pair, red.coset_map.at(db).rep));
                     for (const auto& [d, c] : prod.terms())
                       if (rprod.coefficient(red.coset_map.at(d)) != c)
                         return "constant mismatch under reduction bijection";
                     if (prod.support_size() != rprod.support_size())
                       return "support mismatch under reduction bijection";
                   }
                 // the reduced pair must itself be reduced
                 if (red.pair->core_subgroup().size() != 1)
                   return "reduced pair has nontrivial core";
                 return {};
               });
  }

  // ----------------------------- algebra -----------------------------
  for (const auto& sp : samplers) {
    const Backend& b = *sp.backend;
    std::string label = backend_label(b);

    runner.run("algebra", label + ": convolution associativity", options.trials,
               [&](unsigned, Rng& rng) -> std::string {
                 HeckeElement x = sp.hecke(rng, 2), y = sp.hecke(rng, 2), z = sp.hecke(rng, 2);
                 if (!(convolve(convolve(x, y), z) == convolve(x, convolve(y, z))))
                   return hecke_str(x) + " ; " + hecke_str(y) + " ; " + hecke_str(z);
                 return {};
               });

    runner.run("algebra", label + ": involution laws", options.trials,
               [&](unsigned, Rng& rng) -> std::string {
                 HeckeElement x = sp.hecke(rng, 2), y = sp.hecke(rng, 2);
                 if (!(star(star(x)) == x)) return "star not involutive: " + hecke_str(x);
                 if (!(star(convolve(x, y)) == convolve(star(y), star(x))))
                   return "star anti-multiplicative: " + hecke_str(x) + " ; " + hecke_str(y);
                 GaussianRational alpha = sp.coeff(rng, false), beta = sp.coeff(rng, false);
                 HeckeElement lin = x.scaled(alpha) + y.scaled(beta);
                 HeckeElement expect = star(x).scaled(alpha.conj()) + star(y).scaled(beta.conj());
                 if (!(star(lin) == expect)) return "star not conjugate-linear";
                 return {};
               });

    runner.run("algebra", label + ": unit laws", options.trials,
               [&](unsigned, Rng& rng) -> std::string {
                 HeckeElement u = HeckeElement::unit(b);
                 HeckeElement x = sp.hecke(rng, 2);
                 if (!(convolve(u, x) == x && convolve(x, u) == x)) return hecke_str(x);
                 if (!(star(u) == u && convolve(u, u) == u)) return "unit not a projection";
                 return {};
               });

    runner.run("algebra", label + ": L1 norm star isometry and submultiplicativity",
               options.trials, [&](unsigned, Rng& rng) -> std::string {
                 HeckeElement x = sp.hecke(rng, 2, /*real_only=*/true);
                 HeckeElement y = sp.hecke(rng, 2, /*real_only=*/true);
                 L1Norm nx = l1_norm(x), nsx = l1_norm(star(x));
                 if (!nx.exact || !nsx.exact) return "real element flagged approximate";
                 if (nx.value != nsx.value) return "star isometry: " + hecke_str(x);
                 L1Norm nxy = l1_norm(convolve(x, y));
                 if (nxy.value > nx.value * l1_norm(y).value)
                   return "submultiplicativity: " + hecke_str(x) + " ; " + hecke_str(y);
                 return {};
               });

    runner.run("algebra", label + ": convolution constant on double cosets",
               std::min<unsigned>(options.trials, 30u),
               [&](unsigned, Rng& rng) -> std::string {
                 HeckeElement x = sp.hecke(rng, 2), y = sp.hecke(rng, 2);
                 HeckeElement prod = convolve(x, y);
                 if (prod.is_zero()) return {};
                 // pick a support point, perturb two-sidedly, re-evaluate
                 auto it = prod.terms().begin();
                 std::advance(it, static_cast<long>(rng.next() % prod.terms().size()));
                 GroupElement moved = b.mul(b.mul(sp.gamma(rng), it->first.rep), sp.gamma(rng));
                 GaussianRational direct = definition_sum(b, x, y, moved);
                 if (direct != it->second)
                   return "value moved across the double coset: " + hecke_str(x) + " ; " +
                          hecke_str(y);
                 return {};
               });

    runner.run("algebra", label + ": r_inner representative independence and self-adjointness",
               options.trials, [&](unsigned, Rng& rng) -> std::string {
                 // build two coset functions from raw elements and their
                 // gamma-perturbed copies
                 CosetFunction f(b), fp(b), g(b), gp(b);
                 int terms = static_cast<int>(rng.uniform(1, 2));
                 for (int i = 0; i < terms; ++i) {
                   GroupElement h = sp.element(rng);
                   GaussianRational c = sp.coeff(rng, false);
                   f.add_term(b.canonical_left_coset(h), c);
                   fp.add_term(b.canonical_left_coset(b.mul(h, sp.gamma(rng))), c);
                   GroupElement k = sp.element(rng);
                   GaussianRational ck = sp.coeff(rng, false);
                   g.add_term(b.canonical_left_coset(k), ck);
                   gp.add_term(b.canonical_left_coset(b.mul(k, sp.gamma(rng))), ck);
                 }
                 if (!(r_inner(f, g) == r_inner(fp, gp)))
                   return "representative dependence detected";
                 HeckeElement ff = r_inner(f, f);
                 if (!(star(ff) == ff)) return "<f,f>_R not self-adjoint";
                 return {};
               });
  }

  for (const auto& fx : fixtures) {
    const FiniteBackend& b = *fx.backend;
    Sampler sp = finite_sampler(b);

    runner.run("algebra", "finite " + fx.label + ": group algebra oracle", options.trials,
               [&](unsigned, Rng& rng) -> std::string {
                 HeckeElement x = sp.hecke(rng, 3), y = sp.hecke(rng, 3);
                 OracleReport rep = group_algebra_oracle_check(b, x, y);
                 if (!rep.ok())
                   return rep.detail + " for " + hecke_str(x) + " ; " + hecke_str(y);
                 return {};
               });

    runner.run("algebra", "finite " + fx.label + ": r_inner matches group algebra",
               options.trials, [&](unsigned, Rng& rng) -> std::string {
                 CosetFunction f = sp.coset_fn(rng, 3), g = sp.coset_fn(rng, 3);
                 DenseFn dense =
                     dense_convolve(b, dense_star(b, dense_of_coset_fn(b, f)),
                                    dense_of_coset_fn(b, g));
                 HeckeElement inner = r_inner(f, g);
                 for (const auto& e : b.elements()) {
                   GaussianRational expect =
                       inner.coefficient(b.canonical_double_coset(e));
                   auto it = dense.find(e);
                   GaussianRational got = it == dense.end() ? GaussianRational() : it->second;
                   if (!(got == expect)) return "inner product differs from L1 oracle";
                 }
                 return {};
               });
  }

  // ----------------------------- spherical -----------------------------
  auto random_domain_z = [](long q, Rng& rng) {
    // |z| in [1/q, q], z != 1: z = +-num/den with q*num >= den, num <= q*den
    for (;;) {
      long den = rng.uniform(1, 6);
      long lo = (den + q - 1) / q;
      long num = rng.uniform(lo, q * den);
      Rational z(num, den);
      if (rng.coin()) z = -z;
      if (z != Rational(1)) return z;
    }
  };

  for (Sl2Backend* s : {&sl2q2, &sl2q3}) {
    runner.run("spherical", s->name() + ": phi symmetric under z <-> 1/z", options.trials,
               [&, s](unsigned, Rng& rng) -> std::string {
                 Rational z = random_domain_z(s->q(), rng);
                 unsigned long m = static_cast<unsigned long>(rng.uniform(0, 6));
                 if (spherical_phi(s->q(), z, m) != spherical_phi(s->q(), Rational(1) / z, m))
                   return "z=" + z.str() + " m=" + std::to_string(m);
                 return {};
               });

    if (runner.want("spherical")) {
      // products e_m * e_n computed once; each trial draws a fresh z
      auto products = std::make_shared<std::map<std::pair<long, long>, SphericalElement>>();
      for (long m = 0; m <= 2; ++m)
        for (long n = 0; n <= 2; ++n)
          products->emplace(
              std::make_pair(m, n),
              SphericalElement::from_hecke(
                  *s, convolve(HeckeElement::basis(*s, s->diag_rep(m)),
                               HeckeElement::basis(*s, s->diag_rep(n)))));
      runner.run("spherical", s->name() + ": characters multiplicative", options.trials,
                 [&, s, products](unsigned, Rng& rng) -> std::string {
                   Rational z = random_domain_z(s->q(), rng);
                   for (const auto& [mn, prod] : *products) {
                     SphericalElement em, en;
                     em.add_term(static_cast<unsigned long>(mn.first), Rational(1));
                     en.add_term(static_cast<unsigned long>(mn.second), Rational(1));
                     Rational lhs = character_eval(*s, z, prod);
                     Rational rhs =
                         character_eval(*s, z, em) * character_eval(*s, z, en);
                     if (lhs != rhs)
                       return "m=" + std::to_string(mn.first) +
                              " n=" + std::to_string(mn.second) + " z=" + z.str();
                   }
                   return {};
                 });
    }

    runner.run("spherical", s->name() + ": nonnegative on [1/q, q]", 1,
               [&, s](unsigned, Rng&) -> std::string {
                 CosetFunction f = counterexample_element(*s);
                 SphericalElement h = SphericalElement::from_hecke(*s, r_inner(f, f));
                 long q = s->q();
                 // 60 rationals 1/q + i (q - 1/q)/60, skipping z = 1
                 Rational lo(1, q);
                 Rational step = (Rational(q) - lo) / Rational(60);
                 int points = 0;
                 for (int i = 0; i <= 60; ++i) {
                   Rational z = lo + step * Rational(i);
                   if (z == Rational(1)) continue;
                   ++points;
                   if (character_eval(*s, z, h).sign() < 0)
                     return "negative inside [1/q,q] at z=" + z.str();
                 }
                 if (points < 50) return "grid too small";
                 return {};
               });
  }

  runner.run("spherical", "certificate soundness (scan + revalidate)", 1,
             [&](unsigned, Rng&) -> std::string {
               CosetFunction f = counterexample_element(sl2q2);
               ScanReport rep = scan_positivity(sl2q2, f, default_scan_grid(2));
               if (!rep.certificate) return "no certificate for the counterexample";
               if (!validate_certificate(sl2q2, *rep.certificate))
                 return "certificate failed revalidation";
               CosetFunction unit = CosetFunction::indicator(sl2q2, sl2q2.identity());
               ScanReport none = scan_positivity(sl2q2, unit, default_scan_grid(2));
               if (none.certificate) return "unit produced a certificate";
               return {};
             });

  runner.run("spherical", "negativity at z = -q for primes q <= 13", 6,
             [&](unsigned t, Rng&) -> std::string {
               static const long primes[] = {2, 3, 5, 7, 11, 13};
               long q = primes[t];
               Sl2Backend s(q, options.budget);
               CosetFunction f = counterexample_element(s);
               SphericalElement h = SphericalElement::from_hecke(s, r_inner(f, f));
               Rational value = character_eval(s, Rational(-q), h);
               Rational expect =
                   Rational(q + 1) - Rational(q * q * q + q + 2) / Rational(q + 1);
               if (value != expect) return "q=" + std::to_string(q) + " value " + value.str();
               if (value.sign() >= 0) return "q=" + std::to_string(q) + " not negative";
               // equivalent cubic criterion: (q+1) * (-value) = q^3 - q^2 - q + 1 > 0
               Rational cubic = Rational(q + 1) * (-value);
               if (cubic != Rational(q * q * q - q * q - q + 1) || cubic.sign() <= 0)
                 return "cubic criterion mismatch at q=" + std::to_string(q);
               return {};
             });

  // ----------------------------- growth -----------------------------
  for (const auto& sp : samplers) {
    const Backend& b = *sp.backend;
    std::string label = backend_label(b);

    runner.run("growth", label + ": set product associativity",
               std::min<unsigned>(options.trials, 30u),
               [&](unsigned, Rng& rng) -> std::string {
                 CosetSet x(b), y(b), z(b);
                 for (int i = 0; i < 2; ++i) {
                   x.insert_element(sp.element(rng));
                   y.insert_element(sp.element(rng));
                   z.insert_element(sp.element(rng));
                 }
                 if (!(set_product(set_product(x, y), z) ==
                       set_product(x, set_product(y, z))))
                   return "associativity failed";
                 return {};
               });

    runner.run("growth", label + ": monotone powers with the unit coset",
               std::min<unsigned>(options.trials, 20u),
               [&](unsigned, Rng& rng) -> std::string {
                 CosetSet a(b);
                 a.insert_element(b.identity());
                 a.insert_element(sp.element(rng));
                 CosetSet power = a;
                 for (int n = 0; n < 3; ++n) {
                   CosetSet next = set_product(a, power);
                   for (const auto& d : power.cosets())
                     if (!next.contains(d)) return "A^n not inside A^(n+1)";
                   power = next;
                 }
                 return {};
               });

    runner.run("growth", label + ": L(AB) <= L(A) L(B)",
               std::min<unsigned>(options.trials, 30u),
               [&](unsigned, Rng& rng) -> std::string {
                 CosetSet x(b), y(b);
                 for (int i = 0; i < 2; ++i) {
                   x.insert_element(sp.element(rng));
                   y.insert_element(sp.element(rng));
                 }
                 if (total_L(set_product(x, y)) > total_L(x) * total_L(y))
                   return "submultiplicativity failed";
                 return {};
               });
  }

  for (const auto& fx : fixtures) {
    runner.run("growth", "finite " + fx.label + ": growth matches the reduction", 1,
               [&](unsigned, Rng&) -> std::string {
                 auto red = fx.backend->reduce();
                 CosetSet a(*fx.backend), ar(*red.pair);
                 for (const auto& d : fx.backend->double_cosets()) {
                   a.insert(d);
                   ar.insert(red.coset_map.at(d));
                 }
                 GrowthReport ga = growth_sequence(a, 4);
                 GrowthReport gr = growth_sequence(ar, 4);
                 if (ga.rows.size() != gr.rows.size()) return "row count mismatch";
                 for (std::size_t i = 0; i < ga.rows.size(); ++i)
                   if (ga.rows[i].l_value != gr.rows[i].l_value)
                     return "L sequences differ at n=" + std::to_string(ga.rows[i].n);
                 return {};
               });
  }

  return runner.outcomes;
}

} // namespace hecke
