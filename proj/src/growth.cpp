#include "hecke/growth.hpp"

#include <cmath>

namespace hecke {

bool CosetSet::operator==(const CosetSet& o) const {
  if (backend_ != o.backend_) throw domain_error("backend mismatch");
  return cosets_ == o.cosets_;
}

CosetSet set_product(const CosetSet& a, const CosetSet& b) {
  if (&a.backend() != &b.backend()) throw domain_error("backend mismatch");
  const Backend& backend = a.backend();
  CosetSet out(backend);
  for (const auto& da : a.cosets()) {
    HeckeElement ea = HeckeElement::basis(backend, da.rep);
    for (const auto& db : b.cosets()) {
      HeckeElement prod = convolve(ea, HeckeElement::basis(backend, db.rep));
      for (const auto& [d, c] : prod.terms()) {
        (void)c;
        out.insert(d);
      }
    }
  }
  return out;
}

std::uint64_t total_L(const CosetSet& a) {
  std::uint64_t total = 0;
  for (const auto& d : a.cosets()) total += left_count(a.backend(), d);
  return total;
}

GrowthReport growth_sequence(const CosetSet& a, unsigned nmax, double band,
                             unsigned window) {
  GrowthReport report;
  report.band = band;
  report.window = window;

  CosetSet power = a;  // A^0 := A
  std::uint64_t prev_l = 0;
  for (unsigned n = 0; n <= nmax; ++n) {
    if (n > 0) {
      try {
        power = set_product(a, power);
      } catch (const budget_error&) {
        report.truncated = true;
        break;
      }
    }
    std::uint64_t l;
    try {
      l = total_L(power);
    } catch (const budget_error&) {
      report.truncated = true;
      break;
    }
    GrowthRow row{n, power.size(), l, std::nullopt, std::nullopt};
    if (n >= 1) {
      row.root = std::pow(static_cast<double>(l), 1.0 / n);
      row.ratio = static_cast<double>(l) / static_cast<double>(prev_l);
    }
    report.rows.push_back(row);
    prev_l = l;
  }

  unsigned with_ratio = 0;
  for (const auto& row : report.rows)
    if (row.ratio) ++with_ratio;
  if (with_ratio < window) {
    report.classification = "inconclusive";
  } else {
    bool all_near_one = true;
    unsigned seen = 0;
    for (auto it = report.rows.rbegin(); it != report.rows.rend() && seen < window; ++it) {
      if (!it->ratio) continue;
      ++seen;
      if (std::fabs(*it->ratio - 1.0) > band) all_near_one = false;
    }
    report.classification =
        all_near_one ? "subexponential evidence" : "no subexponential evidence";
  }
  return report;
}

} // namespace hecke
