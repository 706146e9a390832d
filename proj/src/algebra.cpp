#include "hecke/algebra.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace hecke {

namespace {

void require_same_backend(const Backend* a, const Backend* b) {
  if (a != b) throw domain_error("backend mismatch");
}

} // namespace

HeckeElement HeckeElement::basis(const Backend& backend, const GroupElement& g) {
  HeckeElement e(backend);
  e.add_term(backend.canonical_double_coset(g), GaussianRational(Rational(1)));
  return e;
}

HeckeElement HeckeElement::unit(const Backend& backend) {
  return basis(backend, backend.identity());
}

GaussianRational HeckeElement::coefficient(const DoubleCoset& d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

void HeckeElement::add_term(const DoubleCoset& d, const GaussianRational& c) {
  auto it = coeffs_.find(d);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  require_same_backend(backend_, o.backend_);
  HeckeElement out = *this;
  for (const auto& [d, c] : o.coeffs_) out.add_term(d, c);
  return out;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
  require_same_backend(backend_, o.backend_);
  HeckeElement out = *this;
  for (const auto& [d, c] : o.coeffs_) out.add_term(d, -c);
  return out;
}

HeckeElement HeckeElement::scaled(const GaussianRational& s) const {
  HeckeElement out(*backend_);
  for (const auto& [d, c] : coeffs_) out.add_term(d, c * s);
  return out;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
  require_same_backend(backend_, o.backend_);
  return coeffs_ == o.coeffs_;
}

CosetFunction CosetFunction::indicator(const Backend& backend, const GroupElement& g) {
  CosetFunction f(backend);
  f.add_term(backend.canonical_left_coset(g), GaussianRational(Rational(1)));
  return f;
}

GaussianRational CosetFunction::coefficient(const LeftCoset& c) const {
  auto it = coeffs_.find(c);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

void CosetFunction::add_term(const LeftCoset& c, const GaussianRational& v) {
  auto it = coeffs_.find(c);
  if (it == coeffs_.end()) {
    if (!v.is_zero()) coeffs_.emplace(c, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) coeffs_.erase(it);
}

bool CosetFunction::operator==(const CosetFunction& o) const {
  require_same_backend(backend_, o.backend_);
  return coeffs_ == o.coeffs_;
}

namespace {

// Counting sum for one candidate double coset, evaluated at an arbitrary
// element g of it: sum over left cosets h*Gamma of supp(f1) of
// f1(h) * f2(Gamma h^-1 g Gamma).
GaussianRational counting_sum(const Backend& backend,
                              const std::vector<std::pair<GroupElement, GaussianRational>>& exp1,
                              const HeckeElement& f2, const GroupElement& g) {
  GaussianRational total;
  for (const auto& [h, c1] : exp1) {
    DoubleCoset d2 = backend.canonical_double_coset(backend.mul(backend.inverse(h), g));
    GaussianRational c2 = f2.coefficient(d2);
    if (!c2.is_zero()) total += c1 * c2;
  }
  return total;
}

} // namespace

HeckeElement convolve(const HeckeElement& f1, const HeckeElement& f2) {
  require_same_backend(&f1.backend(), &f2.backend());
  const Backend& backend = f1.backend();

  // Expand supp(f1) into left cosets, each tagged with its coefficient.
  std::vector<std::pair<GroupElement, GaussianRational>> exp1;
  for (const auto& [d1, c1] : f1.terms())
    for (const auto& h : backend.left_cosets_of(d1)) exp1.emplace_back(h.rep, c1);

  // Candidate double cosets from products of left-coset reps; keep one
  // product representative per candidate for the constancy check.
  std::map<DoubleCoset, GroupElement> witness;
  for (const auto& [d2, c2] : f2.terms()) {
    (void)c2;
    auto cosets2 = backend.left_cosets_of(d2);
    for (const auto& [h, c1] : exp1) {
      (void)c1;
      for (const auto& k : cosets2) {
        GroupElement p = backend.mul(h, k.rep);
        witness.emplace(backend.canonical_double_coset(p), p);
      }
    }
  }

  HeckeElement out(backend);
  for (const auto& [dc, wit] : witness) {
    GaussianRational value = counting_sum(backend, exp1, f2, dc.rep);
    if (!(wit == dc.rep)) {
      // The sum is a class function of the double coset; recompute at the
      // witness product to catch canonicalization bugs.
      GaussianRational check = counting_sum(backend, exp1, f2, wit);
      if (check != value)
        throw std::logic_error("convolution sum not constant on a double coset");
    }
    if (!value.is_zero()) out.add_term(dc, value);
  }
  return out;
}

HeckeElement star(const HeckeElement& f) {
  const Backend& backend = f.backend();
  HeckeElement out(backend);
  for (const auto& [d, c] : f.terms()) {
    Rational dl = delta(backend, d);
    DoubleCoset dinv = backend.canonical_double_coset(backend.inverse(d.rep));
    out.add_term(dinv, c.conj() * dl);
  }
  return out;
}

namespace {

// Smallest k with (k/2^64)^2 >= s, as the rational k/2^64.
Rational sqrt_upper_bound(const Rational& s) {
  mpz_class num = s.numerator();
  mpz_class den = s.denominator();
  mpz_class scaled_num = num << 128;
  mpz_class target;  // ceil(num * 2^128 / den)
  mpz_cdiv_q(target.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
  mpz_class k;
  mpz_sqrt(k.get_mpz_t(), target.get_mpz_t());
  while (k * k * den < scaled_num) ++k;
  mpz_class two64 = mpz_class(1) << 64;
  return Rational(mpq_class(k) / mpq_class(two64));
}

} // namespace

L1Norm l1_norm(const HeckeElement& f) {
  const Backend& backend = f.backend();
  Rational total(0);
  bool exact = true;
  for (const auto& [d, c] : f.terms()) {
    Rational weight(static_cast<long>(left_count(backend, d)));
    Rational modulus;
    if (c.is_real()) {
      modulus = c.re.abs();
    } else if (c.re.is_zero()) {
      modulus = c.im.abs();
    } else {
      Rational ns = c.norm_square();
      mpz_class num = ns.numerator();
      mpz_class den = ns.denominator();
      if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        modulus = Rational(mpq_class(rn) / mpq_class(rd));
      } else {
        modulus = sqrt_upper_bound(ns);
        exact = false;
      }
    }
    total += modulus * weight;
  }
  return {total, exact};
}

HeckeElement r_inner(const CosetFunction& f, const CosetFunction& g) {
  require_same_backend(&f.backend(), &g.backend());
  const Backend& backend = f.backend();
  HeckeElement out(backend);
  for (const auto& [hc, a] : f.terms()) {
    GroupElement hinv = backend.inverse(hc.rep);
    for (const auto& [kc, b] : g.terms()) {
      DoubleCoset d = backend.canonical_double_coset(backend.mul(hinv, kc.rep));
      Rational weight =
          Rational(1) / Rational(static_cast<long>(left_count(backend, d)));
      out.add_term(d, a.conj() * b * weight);
    }
  }
  return out;
}

namespace {

using DenseFn = std::map<FiniteElement, GaussianRational>;

DenseFn embed(const FiniteBackend& backend, const HeckeElement& f) {
  DenseFn out;
  for (const auto& e : backend.elements()) {
    GaussianRational c = f.coefficient(backend.canonical_double_coset(e));
    if (!c.is_zero()) out.emplace(e, c);
  }
  return out;
}

// Convolution in the group algebra with each point weighted 1/|Gamma|
// (so the Gamma projection is idempotent).
DenseFn group_convolve(const FiniteBackend& backend, const DenseFn& f, const DenseFn& g) {
  Rational w(1, static_cast<long>(backend.gamma_order()));
  DenseFn out;
  for (const auto& [x, fx] : f) {
    for (const auto& [y, gy] : g) {
      FiniteElement xy = std::get<FiniteElement>(backend.mul(x, y));
      auto it = out.find(xy);
      GaussianRational add = fx * gy * w;
      if (it == out.end()) {
        if (!add.is_zero()) out.emplace(std::move(xy), add);
      } else {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

DenseFn gamma_projection(const FiniteBackend& backend) {
  DenseFn p;
  for (const auto& g : backend.gamma_members()) p.emplace(g, GaussianRational(Rational(1)));
  return p;
}

DenseFn group_star(const FiniteBackend& backend, const DenseFn& f) {
  DenseFn out;
  for (const auto& [x, fx] : f)
    out.emplace(std::get<FiniteElement>(backend.inverse(x)), fx.conj());
  return out;
}

bool matches_hecke(const FiniteBackend& backend, const DenseFn& dense,
                   const HeckeElement& h, std::string* why) {
  for (const auto& e : backend.elements()) {
    GaussianRational expect = h.coefficient(backend.canonical_double_coset(e));
    auto it = dense.find(e);
    GaussianRational got = it == dense.end() ? GaussianRational() : it->second;
    if (got != expect) {
      std::ostringstream os;
      os << "value mismatch at a group element: " << got.re.str() << "+" << got.im.str()
         << "i vs " << expect.re.str() << "+" << expect.im.str() << "i";
      *why = os.str();
      return false;
    }
  }
  return true;
}

} // namespace

OracleReport group_algebra_oracle_check(const FiniteBackend& backend,
                                        const HeckeElement& f1, const HeckeElement& f2) {
  require_same_backend(&f1.backend(), &backend);
  require_same_backend(&f2.backend(), &backend);

  OracleReport report;
  DenseFn d1 = embed(backend, f1);
  DenseFn d2 = embed(backend, f2);
  DenseFn p = gamma_projection(backend);

  DenseFn prod = group_convolve(backend, d1, d2);
  prod = group_convolve(backend, p, prod);
  prod = group_convolve(backend, prod, p);
  HeckeElement hecke_prod = convolve(f1, f2);
  report.product_match = matches_hecke(backend, prod, hecke_prod, &report.detail);

  DenseFn st = group_star(backend, d1);
  report.star_match = matches_hecke(backend, st, star(f1), &report.detail);
  return report;
}

} // namespace hecke
