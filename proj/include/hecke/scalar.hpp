#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "hecke/errors.hpp"

namespace hecke {

// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1. Immutable value semantics; every operation
// is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  Rational(long n, long d);
  explicit Rational(mpq_class v);
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Accepts "num" or "num/den" in base 10.
  static Rational parse(const std::string& s);

  // q^e for any integer e (q > 0).
  static Rational power(long q, long e);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return mpz_class(v_.get_num()); }
  mpz_class denominator() const { return mpz_class(v_.get_den()); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  // Largest integer <= *this.
  mpz_class floor() const;
  double to_double() const { return v_.get_d(); }

  // "num/den", den omitted when 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Complex number with rational real and imaginary parts. Conjugation is an
// involution and |c|^2 = re^2 + im^2 stays rational.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: rationals embed
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm_square() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator*(const Rational& s) const { return {re * s, im * s}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  // Multiplicative inverse; domain_error on zero.
  GaussianRational inverse() const;
  GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

// Deterministic primality test (exact for the word-sized inputs used here).
bool is_prime(long q);

// Largest v with x = q^v * (unit at q); nullopt encodes +infinity (x = 0).
// Rejects non-prime q.
std::optional<long> q_valuation(const Rational& x, long q);

// True when the denominator of x is a power of q (1 counts).
bool has_q_power_denominator(const Rational& x, long q);

} // namespace hecke
