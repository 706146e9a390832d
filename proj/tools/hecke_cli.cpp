#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hecke/algebra.hpp"
#include "hecke/dihedral.hpp"
#include "hecke/dyadic.hpp"
#include "hecke/finite.hpp"
#include "hecke/growth.hpp"
#include "hecke/json_io.hpp"
#include "hecke/spherical.hpp"
#include "hecke/verify.hpp"

namespace {

constexpr int kExitParse = 64;
constexpr int kExitDomain = 65;
constexpr int kExitBudget = 69;
constexpr int kExitNoCertificate = 2;

struct GlobalConfig {
  std::string pair;
  std::size_t budget = hecke::Backend::kDefaultBudget;
  std::uint64_t seed = 0;
  std::string output = "json";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hecke::parse_error("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw hecke::parse_error("bad JSON in " + what);
  return j;
}

// An operand is inline JSON if it parses, otherwise a file path.
nlohmann::json load_operand(const std::string& arg) {
  nlohmann::json j = nlohmann::json::parse(arg, nullptr, false);
  if (!j.is_discarded()) return j;
  return parse_json(read_file(arg), arg);
}

std::unique_ptr<hecke::Backend> make_backend(const GlobalConfig& config) {
  const std::string& sel = config.pair;
  if (sel.empty())
    throw hecke::domain_error("select a pair with --pair "
                              "(finite:<path> | dihedral | dyadic | sl2:<q>)");
  if (sel == "dihedral") return std::make_unique<hecke::DihedralBackend>(config.budget);
  if (sel == "dyadic") return std::make_unique<hecke::DyadicBackend>(config.budget);
  if (sel.rfind("sl2:", 0) == 0) {
    long q = 0;
    try {
      q = std::stol(sel.substr(4));
    } catch (const std::exception&) {
      throw hecke::parse_error("bad sl2 selector: " + sel);
    }
    return std::make_unique<hecke::Sl2Backend>(q, config.budget);
  }
  if (sel.rfind("finite:", 0) == 0) {
    auto spec = hecke::FinitePairSpec::from_json(
        parse_json(read_file(sel.substr(7)), "finite pair spec"));
    return hecke::FiniteBackend::load(spec, config.budget);
  }
  throw hecke::parse_error("unknown pair selector: " + sel);
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

void emit_table(const nlohmann::json& j, const std::string& indent = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() || value.is_array()) {
      std::cout << indent << key << ":\n";
      emit_table(value, indent + "  ");
    } else {
      std::cout << indent << key << ": "
                << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

void emit_by_format(const GlobalConfig& config, const nlohmann::json& j) {
  if (config.output == "table")
    emit_table(j);
  else
    emit(j);
}

// ---------------------------------------------------------------------

int cmd_classify(const GlobalConfig& config, const std::string& operand) {
  auto backend = make_backend(config);
  hecke::GroupElement g = backend->parse_element(load_operand(operand));
  emit_by_format(config, hecke::classify_record(*backend, backend->canonical_double_coset(g)));
  return 0;
}

hecke::HeckeElement load_hecke_operand(const hecke::Backend& backend, const std::string& arg) {
  if (arg == "builtin:unit") return hecke::HeckeElement::unit(backend);
  return hecke::hecke_element_from_json(backend, load_operand(arg));
}

hecke::CosetFunction load_coset_operand(const hecke::Backend& backend, const std::string& arg) {
  if (arg == "builtin:unit")
    return hecke::CosetFunction::indicator(backend, backend.identity());
  if (arg == "builtin:counterexample") {
    const auto* sl2 = dynamic_cast<const hecke::Sl2Backend*>(&backend);
    if (!sl2)
      throw hecke::domain_error("builtin:counterexample needs an sl2 backend");
    return hecke::counterexample_element(*sl2);
  }
  return hecke::coset_function_from_json(backend, load_operand(arg));
}

int cmd_algebra(const GlobalConfig& config, const std::string& sub,
                const std::vector<std::string>& operands) {
  auto backend = make_backend(config);
  if (sub == "mul") {
    if (operands.size() != 2) throw hecke::parse_error("mul needs two operands");
    auto result = hecke::convolve(load_hecke_operand(*backend, operands[0]),
                                  load_hecke_operand(*backend, operands[1]));
    emit_by_format(config, hecke::hecke_element_json(result));
  } else if (sub == "star") {
    if (operands.size() != 1) throw hecke::parse_error("star needs one operand");
    emit_by_format(config, hecke::hecke_element_json(
                               hecke::star(load_hecke_operand(*backend, operands[0]))));
  } else if (sub == "norm") {
    if (operands.size() != 1) throw hecke::parse_error("norm needs one operand");
    hecke::L1Norm n = hecke::l1_norm(load_hecke_operand(*backend, operands[0]));
    emit_by_format(config,
                   nlohmann::json{{"value", n.value.str()}, {"exact", n.exact}});
  } else if (sub == "rinner") {
    if (operands.empty() || operands.size() > 2)
      throw hecke::parse_error("rinner needs one or two operands");
    hecke::CosetFunction f = load_coset_operand(*backend, operands[0]);
    hecke::CosetFunction g =
        operands.size() == 2 ? load_coset_operand(*backend, operands[1]) : f;
    emit_by_format(config, hecke::hecke_element_json(hecke::r_inner(f, g)));
  } else {
    throw hecke::parse_error("unknown algebra operation: " + sub);
  }
  return 0;
}

std::vector<hecke::Rational> parse_grid(const std::string& spec) {
  std::vector<hecke::Rational> out;
  std::string item;
  std::istringstream in(spec);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(hecke::Rational::parse(item));
  }
  if (out.empty()) throw hecke::parse_error("empty z grid");
  return out;
}

int cmd_spherical_scan(const GlobalConfig& config, long q, const std::string& f_arg,
                       const std::string& grid_spec, bool allow_outside,
                       bool expect_negative) {
  hecke::Sl2Backend backend(q, config.budget);
  hecke::CosetFunction f = load_coset_operand(backend, f_arg);
  std::vector<hecke::Rational> zs =
      grid_spec.empty() ? hecke::default_scan_grid(q) : parse_grid(grid_spec);
  hecke::ScanReport report = hecke::scan_positivity(backend, f, zs, allow_outside);
  if (config.output == "table") {
    for (const auto& e : report.values)
      std::cout << "z=" << e.z.str() << " value=" << e.value.str()
                << (e.in_domain ? "" : " (outside domain; informational)") << "\n";
    if (report.certificate)
      std::cout << "certificate: pi_z < 0 at z=" << report.certificate->z.str()
                << " value=" << report.certificate->value.str() << "\n";
    else
      std::cout << "certificate: none\n";
  } else {
    emit(hecke::scan_report_json(backend, f, report));
  }
  if (expect_negative && !report.certificate) return kExitNoCertificate;
  return 0;
}

int cmd_growth(const GlobalConfig& config, const std::string& set_arg, unsigned nmax,
               double band, unsigned window) {
  auto backend = make_backend(config);
  nlohmann::json j = load_operand(set_arg);
  if (!j.is_array() || j.empty())
    throw hecke::parse_error("--set needs a non-empty JSON array of elements");
  hecke::CosetSet a(*backend);
  for (const auto& ej : j) a.insert_element(backend->parse_element(ej));
  hecke::GrowthReport report = hecke::growth_sequence(a, nmax, band, window);
  if (config.output == "csv") {
    std::cout << hecke::growth_report_csv(report);
  } else if (config.output == "table") {
    std::cout << "   n       size          L       root      ratio\n";
    for (const auto& r : report.rows) {
      std::printf("%4u %10zu %10llu %10s %10s\n", r.n, r.set_size,
                  static_cast<unsigned long long>(r.l_value),
                  r.root ? hecke::format_approx(*r.root).c_str() : "-",
                  r.ratio ? hecke::format_approx(*r.ratio).c_str() : "-");
    }
    std::cout << "classification (heuristic): " << report.classification
              << (report.truncated ? " [truncated by budget]" : "") << "\n";
  } else {
    emit(hecke::growth_report_json(report));
  }
  return 0;
}

int cmd_verify(const GlobalConfig& config, const std::string& suite, unsigned trials) {
  hecke::VerifyOptions options;
  options.suite = suite;
  options.trials = trials;
  options.seed = config.seed;
  options.budget = config.budget;
  if (suite != "all" && suite != "core" && suite != "algebra" && suite != "spherical" &&
      suite != "growth")
    throw hecke::parse_error("unknown suite: " + suite);
  std::cout << "# hecke verify suite=" << suite << " trials=" << trials
            << " seed=" << config.seed << " budget=" << config.budget << "\n";
  auto outcomes = hecke::run_verification(options);
  unsigned passed = 0;
  for (const auto& o : outcomes) {
    if (o.passed) {
      ++passed;
      std::cout << "PASS [" << o.suite << "] " << o.name << " (trials=" << o.trials << ")\n";
    } else {
      std::cout << "FAIL [" << o.suite << "] " << o.name << " (trials=" << o.trials
                << ")\n      " << o.failure << "\n";
    }
  }
  std::cout << "SUMMARY: " << passed << "/" << outcomes.size() << " properties passed\n";
  return passed == outcomes.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  GlobalConfig config;
  if (const char* env = std::getenv("HECKE_BUDGET")) {
    try {
      config.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "bad HECKE_BUDGET value\n";
      return kExitParse;
    }
  }

  CLI::App app{"exact computations in Hecke algebras of Hecke pairs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--pair", config.pair,
                 "backend: finite:<path> | dihedral | dyadic | sl2:<q>");
  app.add_option("--budget", config.budget, "coset enumeration cap");
  app.add_option("--seed", config.seed, "seed for randomized suites");
  app.add_option("--output", config.output, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));

  std::string classify_operand;
  auto* classify = app.add_subcommand("classify", "canonical double coset, L, R, Delta");
  classify->add_option("element", classify_operand, "element JSON (inline or file)")
      ->required();

  std::string algebra_sub;
  std::vector<std::string> algebra_operands;
  auto* algebra = app.add_subcommand("algebra", "mul | star | norm | rinner");
  algebra->add_option("op", algebra_sub, "operation")->required();
  algebra->add_option("operands", algebra_operands,
                      "element JSON, file, builtin:unit, builtin:counterexample");

  long scan_q = 0;
  std::string scan_f = "builtin:counterexample";
  std::string scan_grid;
  bool scan_outside = false, scan_expect_negative = false;
  auto* scan = app.add_subcommand("spherical-scan", "character values of <f,f>_R");
  scan->add_option("--q", scan_q, "prime q of the sl2 pair")->required();
  scan->add_option("--f", scan_f, "coset function (file, inline, or builtin)");
  scan->add_option("--z-grid", scan_grid, "comma-separated rationals (default lattice)");
  scan->add_flag("--allow-outside-domain", scan_outside,
                 "evaluate informational points outside [-q,-1/q] u [1/q,q]");
  scan->add_flag("--expect-negative", scan_expect_negative,
                 "exit 0 iff a negativity certificate is found (else 2)");

  std::string growth_set;
  unsigned growth_nmax = 10;
  double growth_band = 0.1;
  unsigned growth_window = 3;
  auto* growth = app.add_subcommand("growth", "L(A^n) sequence report");
  growth->add_option("--set", growth_set, "JSON array of elements")->required();
  growth->add_option("--nmax", growth_nmax, "last power to compute");
  growth->add_option("--band", growth_band, "heuristic classifier band around 1");
  growth->add_option("--window", growth_window, "heuristic classifier window");

  std::string verify_suite = "all";
  unsigned verify_trials = 100;
  auto* verify = app.add_subcommand("verify", "property suites");
  verify->add_option("--suite", verify_suite, "all | core | algebra | spherical | growth");
  verify->add_option("--trials", verify_trials, "trials per randomized property");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(config, classify_operand);
    if (algebra->parsed()) return cmd_algebra(config, algebra_sub, algebra_operands);
    if (scan->parsed())
      return cmd_spherical_scan(config, scan_q, scan_f, scan_grid, scan_outside,
                                scan_expect_negative);
    if (growth->parsed())
      return cmd_growth(config, growth_set, growth_nmax, growth_band, growth_window);
    if (verify->parsed()) return cmd_verify(config, verify_suite, verify_trials);
  } catch (const hecke::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hecke::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const hecke::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
