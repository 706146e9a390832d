#include "hecke/sl2.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include <nlohmann/json.hpp>

namespace hecke {

namespace {

const Sl2Element& as_sl2(const GroupElement& g) {
  const auto* e = std::get_if<Sl2Element>(&g);
  if (!e) throw domain_error("sl2 backend: element of wrong kind");
  return *e;
}

Sl2Element matmul(const Sl2Element& x, const Sl2Element& y) {
  return Sl2Element{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// Adjugate; valid because det = 1.
Sl2Element matinv(const Sl2Element& x) {
  return Sl2Element{x.d, -x.b, -x.c, x.a};
}

long min_valuation(const Sl2Element& x, long q) {
  bool seen = false;
  long m = 0;
  for (const Rational* e : {&x.a, &x.b, &x.c, &x.d}) {
    auto v = q_valuation(*e, q);
    if (!v) continue;
    if (!seen || *v < m) m = *v;
    seen = true;
  }
  assert(seen);
  return m;
}

} // namespace

Sl2Backend::Sl2Backend(long q, std::size_t budget) : Backend(budget), q_(q) {
  if (!is_prime(q)) throw domain_error("sl2 backend needs a prime q");
}

std::string Sl2Backend::name() const { return "sl2:" + std::to_string(q_); }

GroupElement Sl2Backend::identity() const {
  return Sl2Element{Rational(1), Rational(0), Rational(0), Rational(1)};
}

GroupElement Sl2Backend::mul(const GroupElement& a, const GroupElement& b) const {
  return matmul(as_sl2(a), as_sl2(b));
}

GroupElement Sl2Backend::inverse(const GroupElement& a) const {
  return matinv(as_sl2(a));
}

bool Sl2Backend::in_gamma(const GroupElement& a) const {
  const auto& x = as_sl2(a);
  for (const Rational* e : {&x.a, &x.b, &x.c, &x.d}) {
    auto v = q_valuation(*e, q_);
    if (v && *v < 0) return false;
  }
  return true;
}

void Sl2Backend::validate(const GroupElement& a) const {
  const auto& x = as_sl2(a);
  for (const Rational* e : {&x.a, &x.b, &x.c, &x.d})
    if (!has_q_power_denominator(*e, q_))
      throw domain_error("sl2 entries need q-power denominators");
  if (x.a * x.d - x.b * x.c != Rational(1))
    throw domain_error("sl2 element must have determinant 1");
}

Sl2Element Sl2Backend::diag_rep(long n) const {
  return Sl2Element{Rational::power(q_, n), Rational(0), Rational(0),
                    Rational::power(q_, -n)};
}

Sl2Element Sl2Backend::upper_rep(long k) const {
  return Sl2Element{Rational::power(q_, 1), Rational(k), Rational(0),
                    Rational::power(q_, -1)};
}

long Sl2Backend::coset_index(const DoubleCoset& d) const {
  return -min_valuation(as_sl2(d.rep), q_);
}

LeftCoset Sl2Backend::canonical_left_coset(const GroupElement& g) const {
  validate(g);
  const auto& x = as_sl2(g);

  // The bottom row (c, d) transforms by right multiplication, and
  // -min(val(c), val(d)) =: A is invariant under it. Scaling the row by
  // q^A gives a coprime integer pair (det = 1 makes the row unimodular),
  // so an extended gcd produces an integral column operation sending the
  // row to (0, q^-A).
  long A;
  {
    auto vc = q_valuation(x.c, q_);
    auto vd = q_valuation(x.d, q_);
    if (vc && vd)
      A = -std::min(*vc, *vd);
    else
      A = -(vc ? *vc : *vd);
  }
  Rational qa = Rational::power(q_, A);
  Rational c0r = x.c * qa;
  Rational d0r = x.d * qa;
  assert(c0r.is_integer() && d0r.is_integer());
  mpz_class c0 = c0r.numerator();
  mpz_class d0 = d0r.numerator();
  mpz_class gcd, u, v;
  mpz_gcdext(gcd.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), c0.get_mpz_t(),
             d0.get_mpz_t());
  assert(gcd == 1);

  // New top-right entry a*u + b*v; the top-left becomes q^A by det = 1.
  Rational beta = x.a * Rational(u) + x.b * Rational(v);

  // beta is well-defined modulo q^A * (q-integral rationals); the canonical
  // residue is q^A * t with t in [0,1), t a q-power-denominator fraction.
  Rational t = beta / qa;
  mpz_class den = t.denominator();  // a q-power
  mpz_class num;
  mpz_fdiv_r(num.get_mpz_t(), t.numerator().get_mpz_t(), den.get_mpz_t());
  Rational reduced = Rational(mpq_class(num) / mpq_class(den)) * qa;

  return LeftCoset{Sl2Element{qa, reduced, Rational(0), Rational::power(q_, -A)}};
}

DoubleCoset Sl2Backend::canonical_double_coset(const GroupElement& g) const {
  validate(g);
  long n = -min_valuation(as_sl2(g), q_);
  assert(n >= 0);
  return DoubleCoset{diag_rep(n)};
}

std::vector<GroupElement> Sl2Backend::gamma_generators() const {
  Sl2Element s{Rational(0), Rational(-1), Rational(1), Rational(0)};
  Sl2Element t{Rational(1), Rational(1), Rational(0), Rational(1)};
  return {s, t};
}

std::vector<LeftCoset> Sl2Backend::left_cosets_of(const DoubleCoset& d) const {
  long n = coset_index(d);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = coset_cache_.find(n);
    if (it != coset_cache_.end()) return it->second;
  }

  // Orbit closure of the seed coset diag(q^n, q^-n)*Gamma under left
  // multiplication by the integral generators and their inverses. The
  // integral matrices are dense in the q-adic stabilizers, so the orbit is
  // the full (finite) left-coset set of the double coset.
  Sl2Element s{Rational(0), Rational(-1), Rational(1), Rational(0)};
  Sl2Element t{Rational(1), Rational(1), Rational(0), Rational(1)};
  const Sl2Element gens[4] = {s, matinv(s), t, matinv(t)};

  std::set<LeftCoset> seen;
  std::vector<Sl2Element> frontier;
  LeftCoset seed = canonical_left_coset(diag_rep(n));
  seen.insert(seed);
  frontier.push_back(std::get<Sl2Element>(seed.rep));
  while (!frontier.empty()) {
    std::vector<Sl2Element> next;
    for (const auto& f : frontier) {
      for (const auto& gen : gens) {
        LeftCoset lc = canonical_left_coset(matmul(gen, f));
        if (seen.insert(lc).second) {
          if (seen.size() > budget_)
            throw budget_error("sl2 coset enumeration exceeds budget");
          next.push_back(std::get<Sl2Element>(lc.rep));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<LeftCoset> out(seen.begin(), seen.end());
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    coset_cache_.emplace(n, out);
  }
  return out;
}

GroupElement Sl2Backend::parse_element(const nlohmann::json& j) const {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() ||
      j[0].size() != 2 || j[1].size() != 2)
    throw parse_error("sl2 element must be [[\"a\",\"b\"],[\"c\",\"d\"]]");
  auto entry = [](const nlohmann::json& v) {
    if (!v.is_string()) throw parse_error("sl2 entries must be rational strings");
    return Rational::parse(v.get<std::string>());
  };
  Sl2Element e{entry(j[0][0]), entry(j[0][1]), entry(j[1][0]), entry(j[1][1])};
  validate(GroupElement{e});
  return e;
}

nlohmann::json Sl2Backend::element_json(const GroupElement& g) const {
  const auto& x = as_sl2(g);
  return nlohmann::json::array({nlohmann::json::array({x.a.str(), x.b.str()}),
                                nlohmann::json::array({x.c.str(), x.d.str()})});
}

} // namespace hecke
