#include "hecke/json_io.hpp"

#include <cstdio>

#include "hecke/dihedral.hpp"
#include "hecke/dyadic.hpp"

namespace hecke {

nlohmann::json gaussian_json(const GaussianRational& c) {
  return nlohmann::json{{"re", c.re.str()}, {"im", c.im.str()}};
}

GaussianRational gaussian_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re"))
    throw parse_error("coefficient must be {\"re\": ..., \"im\": ...}");
  auto field = [&](const char* key) {
    if (!j.contains(key)) return Rational(0);
    if (!j[key].is_string()) throw parse_error("coefficient parts must be rational strings");
    return Rational::parse(j[key].get<std::string>());
  };
  return {field("re"), field("im")};
}

nlohmann::json hecke_element_json(const HeckeElement& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [d, c] : f.terms()) {
    nlohmann::json t = gaussian_json(c);
    t["coset"] = f.backend().element_json(d.rep);
    terms.push_back(std::move(t));
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

HeckeElement hecke_element_from_json(const Backend& backend, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw parse_error("element must be {\"terms\": [...]}");
  HeckeElement f(backend);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coset")) throw parse_error("term needs a coset");
    GroupElement g = backend.parse_element(t["coset"]);
    f.add_term(backend.canonical_double_coset(g), gaussian_from_json(t));
  }
  return f;
}

nlohmann::json coset_function_json(const CosetFunction& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [c, v] : f.terms()) {
    nlohmann::json t = gaussian_json(v);
    t["coset"] = f.backend().element_json(c.rep);
    terms.push_back(std::move(t));
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

CosetFunction coset_function_from_json(const Backend& backend, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw parse_error("coset function must be {\"terms\": [...]}");
  CosetFunction f(backend);
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coset")) throw parse_error("term needs a coset");
    GroupElement g = backend.parse_element(t["coset"]);
    f.add_term(backend.canonical_left_coset(g), gaussian_from_json(t));
  }
  return f;
}

nlohmann::json spherical_element_json(const SphericalElement& h) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : h.terms())
    out.push_back(nlohmann::json{{"m", m}, {"coeff", c.str()}});
  return out;
}

nlohmann::json certificate_json(const PositivityCertificate& cert) {
  return nlohmann::json{{"q", cert.q},
                        {"z", cert.z.str()},
                        {"h", spherical_element_json(cert.h)},
                        {"value", cert.value.str()},
                        {"input_f", coset_function_json(cert.input_f)},
                        {"conclusion", "not_R_positive"}};
}

nlohmann::json scan_report_json(const Sl2Backend& backend, const CosetFunction& f,
                                const ScanReport& report) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& e : report.values)
    values.push_back(nlohmann::json{{"z", e.z.str()},
                                    {"value", e.value.str()},
                                    {"in_domain", e.in_domain}});
  nlohmann::json out{{"q", backend.q()},
                     {"f", coset_function_json(f)},
                     {"h", spherical_element_json(report.h)},
                     {"values", std::move(values)}};
  if (report.certificate)
    out["certificate"] = certificate_json(*report.certificate);
  else
    out["certificate"] = nullptr;
  return out;
}

std::string format_approx(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

nlohmann::json growth_report_json(const GrowthReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back(nlohmann::json{
        {"n", r.n},
        {"size", r.set_size},
        {"L", r.l_value},
        {"root", r.root ? nlohmann::json(format_approx(*r.root)) : nlohmann::json(nullptr)},
        {"ratio", r.ratio ? nlohmann::json(format_approx(*r.ratio)) : nlohmann::json(nullptr)}});
  }
  return nlohmann::json{{"rows", std::move(rows)},
                        {"truncated", report.truncated},
                        {"classification", report.classification},
                        {"classifier", nlohmann::json{{"kind", "heuristic"},
                                                      {"band", report.band},
                                                      {"window", report.window}}}};
}

std::string growth_report_csv(const GrowthReport& report) {
  std::string out = "n,size,L,root,ratio\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.set_size) + "," +
           std::to_string(r.l_value) + ",";
    if (r.root) out += format_approx(*r.root);
    out += ",";
    if (r.ratio) out += format_approx(*r.ratio);
    out += "\n";
  }
  return out;
}

nlohmann::json classify_record(const Backend& backend, const DoubleCoset& d) {
  CosetCounts counts = coset_counts(backend, d);
  nlohmann::json out{{"rep", backend.element_json(d.rep)},
                     {"L", counts.left},
                     {"R", counts.right},
                     {"delta", delta(backend, d).str()}};
  if (const auto* sl2 = dynamic_cast<const Sl2Backend*>(&backend)) {
    out["n"] = sl2->coset_index(d);
  } else if (dynamic_cast<const DihedralBackend*>(&backend)) {
    out["coset"] = std::get<DihedralElement>(d.rep).n;
  } else if (dynamic_cast<const DyadicBackend*>(&backend)) {
    const auto& e = std::get<DyadicElement>(d.rep);
    out["k"] = e.k;
    out["b_class"] = e.b.str();
  }
  return out;
}

} // namespace hecke
