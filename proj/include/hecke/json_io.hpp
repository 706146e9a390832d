#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hecke/growth.hpp"
#include "hecke/spherical.hpp"

namespace hecke {

nlohmann::json gaussian_json(const GaussianRational& c);
GaussianRational gaussian_from_json(const nlohmann::json& j);

// {"terms": [{"coset": <element>, "re": "p/q", "im": "p/q"}, ...]};
// cosets are canonicalized (and merged) on load.
nlohmann::json hecke_element_json(const HeckeElement& f);
HeckeElement hecke_element_from_json(const Backend& backend, const nlohmann::json& j);

nlohmann::json coset_function_json(const CosetFunction& f);
CosetFunction coset_function_from_json(const Backend& backend, const nlohmann::json& j);

nlohmann::json spherical_element_json(const SphericalElement& h);

nlohmann::json certificate_json(const PositivityCertificate& cert);
nlohmann::json scan_report_json(const Sl2Backend& backend, const CosetFunction& f,
                                const ScanReport& report);

nlohmann::json growth_report_json(const GrowthReport& report);
std::string growth_report_csv(const GrowthReport& report);

// Canonical rep, L, R, Delta, plus a backend-specific coset key.
nlohmann::json classify_record(const Backend& backend, const DoubleCoset& d);

// Significant-digit formatting used for roots/ratios ("%.6g").
std::string format_approx(double v);

} // namespace hecke
