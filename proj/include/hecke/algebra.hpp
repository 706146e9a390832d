#pragma once

#include <map>

#include "hecke/finite.hpp"
#include "hecke/pair.hpp"

namespace hecke {

// Finitely supported function on double cosets with Gaussian-rational
// values; the element of the Hecke algebra of the backend's pair. Zero
// coefficients are pruned eagerly so supports are canonical. Immutable in
// spirit: mutating entry points canonicalize as they go.
class HeckeElement {
 public:
  explicit HeckeElement(const Backend& backend) : backend_(&backend) {}

  // Characteristic function of the double coset of g.
  static HeckeElement basis(const Backend& backend, const GroupElement& g);
  // The unit: characteristic function of Gamma.
  static HeckeElement unit(const Backend& backend);

  const Backend& backend() const { return *backend_; }
  const std::map<DoubleCoset, GaussianRational>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  GaussianRational coefficient(const DoubleCoset& d) const;
  void add_term(const DoubleCoset& d, const GaussianRational& c);

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement operator-(const HeckeElement& o) const;
  HeckeElement scaled(const GaussianRational& s) const;

  bool operator==(const HeckeElement& o) const;
  bool operator!=(const HeckeElement& o) const { return !(*this == o); }

 private:
  const Backend* backend_;
  std::map<DoubleCoset, GaussianRational> coeffs_;
};

// Finitely supported function on left cosets: an element of the module of
// compactly supported right-Gamma-invariant functions.
class CosetFunction {
 public:
  explicit CosetFunction(const Backend& backend) : backend_(&backend) {}

  // Characteristic function of the left coset of g.
  static CosetFunction indicator(const Backend& backend, const GroupElement& g);

  const Backend& backend() const { return *backend_; }
  const std::map<LeftCoset, GaussianRational>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  GaussianRational coefficient(const LeftCoset& c) const;
  void add_term(const LeftCoset& c, const GaussianRational& v);

  bool operator==(const CosetFunction& o) const;
  bool operator!=(const CosetFunction& o) const { return !(*this == o); }

 private:
  const Backend* backend_;
  std::map<LeftCoset, GaussianRational> coeffs_;
};

// Convolution (f1*f2)(Gamma g Gamma) = sum over h*Gamma in G/Gamma of
// f1(Gamma h Gamma) f2(Gamma h^-1 g Gamma). Candidate double cosets come
// from products of left-coset reps of the two supports; each candidate's
// counting sum is evaluated at two representatives and checked for
// agreement.
HeckeElement convolve(const HeckeElement& f1, const HeckeElement& f2);

// f*(Gamma g Gamma) = Delta(g^-1) conj(f(Gamma g^-1 Gamma)); on basis
// elements star(e_[a]) = Delta(a) e_[a^-1].
HeckeElement star(const HeckeElement& f);

struct L1Norm {
  Rational value;
  bool exact;  // false: value is a rounded-up bound with 64 fractional bits
};

// sum |f(Gamma g Gamma)| L(g); exact whenever every coefficient has a
// rational modulus.
L1Norm l1_norm(const HeckeElement& f);

// The right inner product <f,g>_R = f^* * g, landing in the Hecke algebra:
// sum conj(a_i) b_j (1 / L(h_i^-1 k_j)) e_[h_i^-1 k_j].
HeckeElement r_inner(const CosetFunction& f, const CosetFunction& g);

struct OracleReport {
  bool product_match = false;
  bool star_match = false;
  std::string detail;
  bool ok() const { return product_match && star_match; }
};

// Embeds f1, f2 as Gamma-biinvariant functions on the finite group,
// convolves in the full group algebra with the Haar normalization giving
// Gamma total mass 1, compresses by the Gamma projection, and compares
// with convolve(f1, f2) coefficientwise. Also checks star against the
// group-algebra involution.
OracleReport group_algebra_oracle_check(const FiniteBackend& backend,
                                        const HeckeElement& f1, const HeckeElement& f2);

} // namespace hecke
