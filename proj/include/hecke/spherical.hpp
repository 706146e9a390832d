#pragma once

#include <optional>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/sl2.hpp"

namespace hecke {

// Self-adjoint element of the commutative Hecke algebra of the sl2 pair,
// written in the basis of double-coset characteristic functions e_[x_m]
// with real rational coefficients.
class SphericalElement {
 public:
  SphericalElement() = default;

  // Projects a Hecke element of the sl2 backend; rejects coefficients with
  // a nonzero imaginary part.
  static SphericalElement from_hecke(const Sl2Backend& backend, const HeckeElement& h);

  const std::map<unsigned long, Rational>& terms() const { return coeffs_; }
  Rational coefficient(unsigned long m) const;
  void add_term(unsigned long m, const Rational& c);
  bool operator==(const SphericalElement& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::map<unsigned long, Rational> coeffs_;
};

// Value of the normalized spherical function at parameter z:
// (1-qz)/((q+1)(1-z)) (z/q)^m + (q-z)/((q+1)(1-z)) (1/(qz))^m.
// Singular at z = 0 and z = 1; rejected.
Rational spherical_phi(long q, const Rational& z, unsigned long m);

// z parameterizes a character of the L^1-completion exactly when
// 1/q <= |z| <= q (and z != 1).
bool character_domain_contains(long q, const Rational& z);

// Character value pi_z(h) = sum h_m L(x_m) phi(q, z, m). The coefficient
// L(x_m) is obtained from the backend by enumeration. The normalization is
// pinned by multiplicativity: pi_z(e_m * e_n) = pi_z(e_m) pi_z(e_n), which
// the verify suite checks against the convolution engine. Unless
// allow_outside_domain is set, z must lie in the character domain.
Rational character_eval(const Sl2Backend& backend, const Rational& z,
                        const SphericalElement& h, bool allow_outside_domain = false);

// The function with coefficient 1 on Gamma and on each coset
// [[q,k],[0,1/q]]*Gamma for 0 <= k <= q-1 (support size q+1).
CosetFunction counterexample_element(const Sl2Backend& backend);

// Exact witness that some character maps <f,f>_R to a negative value.
struct PositivityCertificate {
  long q;
  Rational z;
  SphericalElement h;  // r_inner(f, f), projected
  Rational value;      // pi_z(h), negative
  CosetFunction input_f;
};

struct ScanEntry {
  Rational z;
  Rational value;
  bool in_domain;
};

struct ScanReport {
  SphericalElement h;
  std::vector<ScanEntry> values;
  std::optional<PositivityCertificate> certificate;
};

// Evaluates pi_z(<f,f>_R) for each z; certificate is the first in-domain
// negative value in grid order. Out-of-domain z (only reachable with the
// override) are informational and never certify.
ScanReport scan_positivity(const Sl2Backend& backend, const CosetFunction& f,
                           const std::vector<Rational>& zs,
                           bool allow_outside_domain = false);

// Recomputes h = <f,f>_R and the character value from scratch.
bool validate_certificate(const Sl2Backend& backend, const PositivityCertificate& cert);

// z in {+-q, +-(q-1), ..., +-2, -1, +-1/2, ..., +-1/q}; z = 1 is excluded
// because the character formula is singular there.
std::vector<Rational> default_scan_grid(long q);

} // namespace hecke
