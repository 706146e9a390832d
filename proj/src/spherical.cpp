#include "hecke/spherical.hpp"

namespace hecke {

SphericalElement SphericalElement::from_hecke(const Sl2Backend& backend,
                                              const HeckeElement& h) {
  if (&h.backend() != &backend) throw domain_error("backend mismatch");
  SphericalElement out;
  for (const auto& [d, c] : h.terms()) {
    if (!c.is_real())
      throw domain_error("spherical element needs real rational coefficients");
    long m = backend.coset_index(d);
    out.add_term(static_cast<unsigned long>(m), c.re);
  }
  return out;
}

Rational SphericalElement::coefficient(unsigned long m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SphericalElement::add_term(unsigned long m, const Rational& c) {
  auto it = coeffs_.find(m);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

namespace {

Rational rational_pow(const Rational& base, unsigned long e) {
  Rational out(1);
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

} // namespace

Rational spherical_phi(long q, const Rational& z, unsigned long m) {
  if (!is_prime(q)) throw domain_error("spherical_phi needs a prime q");
  if (z.is_zero() || z == Rational(1))
    throw domain_error("spherical character is singular at z = 0 and z = 1");
  Rational qr(q);
  Rational denom = (qr + Rational(1)) * (Rational(1) - z);
  Rational first = (Rational(1) - qr * z) / denom;
  Rational second = (qr - z) / denom;
  return first * rational_pow(z / qr, m) +
         second * rational_pow(Rational(1) / (qr * z), m);
}

bool character_domain_contains(long q, const Rational& z) {
  if (z == Rational(1)) return false;
  Rational a = z.abs();
  return Rational(1, q) <= a && a <= Rational(q);
}

Rational character_eval(const Sl2Backend& backend, const Rational& z,
                        const SphericalElement& h, bool allow_outside_domain) {
  long q = backend.q();
  if (z.is_zero() || z == Rational(1))
    throw domain_error("spherical character is singular at z = 0 and z = 1");
  if (!allow_outside_domain && !character_domain_contains(q, z))
    throw domain_error("z outside the character domain [-q,-1/q] u [1/q,q]");
  Rational total(0);
  for (const auto& [m, c] : h.terms()) {
    Rational count(static_cast<long>(
        left_count(backend, backend.coset_of_index(static_cast<long>(m)))));
    total += c * count * spherical_phi(q, z, m);
  }
  return total;
}

CosetFunction counterexample_element(const Sl2Backend& backend) {
  CosetFunction f(backend);
  f.add_term(backend.canonical_left_coset(backend.identity()), GaussianRational(Rational(1)));
  for (long k = 0; k < backend.q(); ++k)
    f.add_term(backend.canonical_left_coset(backend.upper_rep(k)),
               GaussianRational(Rational(1)));
  return f;
}

ScanReport scan_positivity(const Sl2Backend& backend, const CosetFunction& f,
                           const std::vector<Rational>& zs, bool allow_outside_domain) {
  ScanReport report;
  HeckeElement inner = r_inner(f, f);
  report.h = SphericalElement::from_hecke(backend, inner);
  for (const Rational& z : zs) {
    bool in_domain = character_domain_contains(backend.q(), z);
    if (!in_domain && !allow_outside_domain)
      throw domain_error("z outside the character domain (pass the override to scan anyway)");
    Rational value = character_eval(backend, z, report.h, true);
    report.values.push_back({z, value, in_domain});
    if (in_domain && value.sign() < 0 && !report.certificate)
      report.certificate =
          PositivityCertificate{backend.q(), z, report.h, value, f};
  }
  return report;
}

bool validate_certificate(const Sl2Backend& backend, const PositivityCertificate& cert) {
  if (cert.q != backend.q()) return false;
  if (!character_domain_contains(cert.q, cert.z)) return false;
  if (cert.value.sign() >= 0) return false;
  HeckeElement inner = r_inner(cert.input_f, cert.input_f);
  SphericalElement h = SphericalElement::from_hecke(backend, inner);
  if (!(h == cert.h)) return false;
  return character_eval(backend, cert.z, h, false) == cert.value;
}

std::vector<Rational> default_scan_grid(long q) {
  std::vector<Rational> zs;
  for (long k = q; k >= 1; --k) zs.push_back(Rational(-k));
  for (long k = 2; k <= q; ++k) zs.push_back(Rational(-1, k));
  for (long k = q; k >= 2; --k) zs.push_back(Rational(1, k));
  for (long k = 2; k <= q; ++k) zs.push_back(Rational(k));
  return zs;
}

} // namespace hecke
