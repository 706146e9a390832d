// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Each criterion carries its own wall-clock limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/dihedral.hpp"
#include "hecke/growth.hpp"
#include "hecke/spherical.hpp"
#include "hecke/verify.hpp"

using namespace hecke;

namespace {

struct Criterion {
  std::string name;
  double time_limit_s;
  std::function<std::string()> body;  // empty string on pass
};

int run_all(const std::vector<Criterion>& criteria) {
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.body();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && elapsed > c.time_limit_s)
      why = "time limit exceeded: " + std::to_string(elapsed) + "s > " +
            std::to_string(c.time_limit_s) + "s";
    if (why.empty()) {
      std::printf("PASS %s (%.2fs)\n", c.name.c_str(), elapsed);
    } else {
      std::printf("FAIL %s (%.2fs): %s\n", c.name.c_str(), elapsed, why.c_str());
      ++failures;
    }
  }
  std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}

std::string criterion1_certificate() {
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L}) {
    Sl2Backend backend(q);
    CosetFunction f = counterexample_element(backend);
    ScanReport report = scan_positivity(backend, f, {Rational(-q)});
    if (!report.certificate) return "no certificate at q=" + std::to_string(q);
    Rational expect = Rational(q + 1) - Rational(q * q * q + q + 2) / Rational(q + 1);
    if (report.certificate->value != expect)
      return "q=" + std::to_string(q) + ": value " + report.certificate->value.str() +
             " != " + expect.str();
    if (report.certificate->value.sign() >= 0)
      return "q=" + std::to_string(q) + ": value not negative";
    if (!validate_certificate(backend, *report.certificate))
      return "q=" + std::to_string(q) + ": certificate failed revalidation";
  }
  return {};
}

std::string criterion2_product_ledger() {
  for (long q : {2L, 3L, 5L}) {
    Sl2Backend backend(q);
    CosetFunction f = counterexample_element(backend);
    HeckeElement inner = r_inner(f, f);
    HeckeElement expect(backend);
    expect.add_term(backend.coset_of_index(0), GaussianRational(Rational(q + 1)));
    expect.add_term(backend.coset_of_index(1), GaussianRational(Rational(1)));
    if (!(inner == expect))
      return "q=" + std::to_string(q) + ": <f,f>_R != (q+1) e0 + e1";
  }
  return {};
}

std::string criterion3_coset_counts() {
  for (long q : {2L, 3L}) {
    Sl2Backend backend(q);
    for (long n = 1; n <= 3; ++n) {
      std::uint64_t expect = static_cast<std::uint64_t>(q + 1);
      for (long i = 0; i < 2 * n - 1; ++i) expect *= static_cast<std::uint64_t>(q);
      DoubleCoset d = backend.coset_of_index(n);
      CosetCounts counts = coset_counts(backend, d);
      if (counts.left != expect)
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": L=" +
               std::to_string(counts.left) + " != " + std::to_string(expect);
      if (counts.left != counts.right)
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": L != R";
      if (delta(backend, d) != Rational(1))
        return "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": Delta != 1";
    }
  }
  return {};
}

std::string criterion4_character_consistency() {
  Rng rng(20260810);
  for (long q : {2L, 3L}) {
    Sl2Backend backend(q);

    // multiplicativity on >= 20 random admissible z per (m, n) pair
    for (long m = 0; m <= 2; ++m) {
      for (long n = 0; n <= 2; ++n) {
        SphericalElement prod = SphericalElement::from_hecke(
            backend, convolve(HeckeElement::basis(backend, backend.diag_rep(m)),
                              HeckeElement::basis(backend, backend.diag_rep(n))));
        SphericalElement em, en;
        em.add_term(static_cast<unsigned long>(m), Rational(1));
        en.add_term(static_cast<unsigned long>(n), Rational(1));
        int checked = 0;
        while (checked < 20) {
          long den = rng.uniform(1, 6);
          long lo = (den + q - 1) / q;
          long num = rng.uniform(lo, q * den);
          Rational z(num, den);
          if (rng.coin()) z = -z;
          if (z == Rational(1)) continue;
          ++checked;
          if (character_eval(backend, z, prod) !=
              character_eval(backend, z, em) * character_eval(backend, z, en))
            return "multiplicativity failed: q=" + std::to_string(q) +
                   " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                   " z=" + z.str();
        }
      }
    }

    // nonnegativity of pi_z(<f,f>_R) on a rational grid in [1/q, q]
    CosetFunction f = counterexample_element(backend);
    SphericalElement h = SphericalElement::from_hecke(backend, r_inner(f, f));
    Rational lo(1, q);
    Rational step = (Rational(q) - lo) / Rational(60);
    int points = 0;
    for (int i = 0; i <= 60; ++i) {
      Rational z = lo + step * Rational(i);
      if (z == Rational(1)) continue;
      ++points;
      if (character_eval(backend, z, h).sign() < 0)
        return "negative value inside [1/q,q] at q=" + std::to_string(q) +
               " z=" + z.str();
    }
    if (points < 50) return "grid smaller than 50 points";
  }
  return {};
}

std::string criterion5_oracle_equivalence() {
  struct Fixture {
    const char* label;
    FinitePairSpec spec;
  };
  std::vector<Fixture> fixtures = {
      {"S3/<(01)>", {3, {{1, 0, 2}, {1, 2, 0}}, {{1, 0, 2}}}},
      {"S3/A3", {3, {{1, 0, 2}, {1, 2, 0}}, {{1, 2, 0}}}},
      {"S3/1", {3, {{1, 0, 2}, {1, 2, 0}}, {}}},
      {"S4/Stab(3)", {4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, {{1, 0, 2, 3}, {1, 2, 0, 3}}}},
      {"C6/C2", {6, {{1, 2, 3, 4, 5, 0}}, {{3, 4, 5, 0, 1, 2}}}},
  };
  Rng rng(5);
  for (const auto& fx : fixtures) {
    auto backend = FiniteBackend::load(fx.spec);
    const auto& elements = backend->elements();
    for (int t = 0; t < 100; ++t) {
      HeckeElement f1(*backend), f2(*backend);
      for (int i = 0; i < 2; ++i) {
        const auto& g1 = elements[rng.next() % elements.size()];
        const auto& g2 = elements[rng.next() % elements.size()];
        GaussianRational c1(rng.small_rational(3, 2), rng.small_rational(3, 2));
        GaussianRational c2(rng.small_rational(3, 2), rng.small_rational(3, 2));
        f1.add_term(backend->canonical_double_coset(g1), c1);
        f2.add_term(backend->canonical_double_coset(g2), c2);
      }
      OracleReport report = group_algebra_oracle_check(*backend, f1, f2);
      if (!report.ok())
        return std::string(fx.label) + " trial " + std::to_string(t) + ": " + report.detail;
    }
  }
  return {};
}

std::string criterion6_growth_subexponential() {
  DihedralBackend backend;
  CosetSet a(backend);
  a.insert_element(backend.identity());
  a.insert_element(DihedralElement{1, 1});
  GrowthReport report = growth_sequence(a, 100);
  if (report.rows.size() != 101) return "missing rows";
  for (const auto& row : report.rows)
    if (row.l_value != 2ull * row.n + 3)
      return "L(A^" + std::to_string(row.n) + ") = " + std::to_string(row.l_value) +
             " != " + std::to_string(2 * row.n + 3);
  double last_ratio = *report.rows[100].ratio;
  if (!(last_ratio <= 1.01))
    return "ratio at n=100 is " + std::to_string(last_ratio) + " > 1.01";
  return {};
}

std::string criterion7_growth_exponential() {
  Sl2Backend backend(2);
  CosetSet a(backend);
  a.insert_element(backend.diag_rep(0));
  a.insert_element(backend.diag_rep(1));
  GrowthReport report = growth_sequence(a, 5);
  if (report.rows.size() != 6) return "missing rows";
  std::uint64_t expect = 8;  // 2 * 4^(n+1) at n = 0
  for (const auto& row : report.rows) {
    if (row.l_value != expect - 1)
      return "L(A^" + std::to_string(row.n) + ") = " + std::to_string(row.l_value) +
             " != " + std::to_string(expect - 1);
    expect *= 4;
  }
  // successive ratios in the n >= 3 region: both endpoints past the
  // transient, i.e. L(A^4)/L(A^3) and L(A^5)/L(A^4); within 0.5% of q^2 = 4
  for (unsigned n : {4u, 5u}) {
    double ratio = *report.rows[n].ratio;
    double rel = std::fabs(ratio - 4.0) / 4.0;
    std::printf("     ratio at n=%u: %.6f (relative error %.4f%%)\n", n, ratio, rel * 100);
    if (rel > 0.005)
      return "ratio at n=" + std::to_string(n) + " off by more than 0.5%";
  }
  return {};
}

std::string criterion8_property_suites() {
  VerifyOptions options;
  options.suite = "all";
  options.trials = 100;
  options.seed = 0;
  auto outcomes = run_verification(options);
  if (outcomes.empty()) return "no properties ran";
  unsigned failed = 0;
  std::string first;
  for (const auto& o : outcomes)
    if (!o.passed) {
      ++failed;
      if (first.empty()) first = "[" + o.suite + "] " + o.name + ": " + o.failure;
    }
  std::printf("     %zu properties, trials=100\n", outcomes.size());
  if (failed > 0) return std::to_string(failed) + " properties failed; first: " + first;

  // determinism under a fixed seed
  auto again = run_verification(options);
  if (again.size() != outcomes.size()) return "non-deterministic property count";
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    if (again[i].passed != outcomes[i].passed || again[i].failure != outcomes[i].failure)
      return "non-deterministic outcome for " + outcomes[i].name;
  return {};
}

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"criterion 1: negativity certificate at z=-q, q in {2,3,5,7,11,13}, exact", 5.0,
       criterion1_certificate},
      {"criterion 2: <f,f>_R = (q+1) e0 + e1 for q in {2,3,5}, exact", 5.0,
       criterion2_product_ledger},
      {"criterion 3: L(x_n) = (q+1) q^(2n-1), L = R, Delta = 1 (q in {2,3}, n <= 3)", 60.0,
       criterion3_coset_counts},
      {"criterion 4: character multiplicativity and nonnegativity on [1/q, q]", 60.0,
       criterion4_character_consistency},
      {"criterion 5: group algebra oracle on 5 fixtures x 100 random pairs", 30.0,
       criterion5_oracle_equivalence},
      {"criterion 6: dihedral growth L(A^n) = 2n+3 for n <= 100, ratio <= 1.01", 10.0,
       criterion6_growth_subexponential},
      {"criterion 7: sl2 growth L(A^n) = 2*4^(n+1)-1 for n <= 5, ratios near 4", 60.0,
       criterion7_growth_exponential},
      {"criterion 8: property suites, 100 trials per property, deterministic", 120.0,
       criterion8_property_suites},
  };
  return run_all(criteria);
}
