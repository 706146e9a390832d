#include "hecke/scalar.hpp"

#include <ostream>

namespace hecke {

Rational::Rational(long n, long d) {
  if (d == 0) throw domain_error("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(const std::string& s) {
  mpq_class v;
  if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
    throw parse_error("bad rational: \"" + s + "\"");
  if (sgn(mpq_class(v.get_den())) == 0)
    throw parse_error("zero denominator: \"" + s + "\"");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::power(long q, long e) {
  if (q <= 0) throw domain_error("power base must be positive");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(e >= 0 ? e : -e));
  if (e >= 0) return Rational(p);
  return Rational(mpq_class(1) / mpq_class(p));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw domain_error("division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational GaussianRational::inverse() const {
  Rational n = norm_square();
  if (n.is_zero()) throw domain_error("inverse of zero");
  return {re / n, -im / n};
}

bool is_prime(long q) {
  if (q < 2) return false;
  mpz_class z(q);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

std::optional<long> q_valuation(const Rational& x, long q) {
  if (!is_prime(q)) throw domain_error("q_valuation requires a prime q");
  if (x.is_zero()) return std::nullopt;
  mpz_class qz(q);
  long v = 0;
  mpz_class num = x.numerator();
  mpz_class den = x.denominator();
  mpz_class r, t;
  for (;;) {
    mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), qz.get_mpz_t());
    if (r != 0) break;
    num = t;
    ++v;
  }
  for (;;) {
    mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), qz.get_mpz_t());
    if (r != 0) break;
    den = t;
    --v;
  }
  return v;
}

bool has_q_power_denominator(const Rational& x, long q) {
  mpz_class den = x.denominator();
  mpz_class qz(q), r, t;
  while (den != 1) {
    mpz_fdiv_qr(t.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), qz.get_mpz_t());
    if (r != 0) return false;
    den = t;
  }
  return true;
}

} // namespace hecke
