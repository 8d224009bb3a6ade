#pragma once

// Command surface behind the lcho_cli tool. Each command builds a Report; run()
// validates the configuration, writes the report, and maps the outcome to an
// exit status: 0 all checks pass, 1 some check failed, 2 invalid config.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lcho/algebra.hpp"
#include "lcho/desitter.hpp"
#include "lcho/errors.hpp"
#include "lcho/fock.hpp"
#include "lcho/formfactor.hpp"
#include "lcho/oscillator.hpp"
#include "lcho/report.hpp"

namespace lcho::cli {

enum class Command { wavefunction, formfactor, algebra, contract, expansion, uncertainty };
enum class Format { csv, json };

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidConfig = 2;

/// Environment variable naming the directory for reports when no output
/// path is given.
inline constexpr const char* kOutputDirEnv = "LCHO_OUTPUT_DIR";

struct RunConfig {
  Command command = Command::wavefunction;
  double eta = 0.0;
  int n = 0;
  double q2_max = 100.0;
  int samples = 50;
  double mass = 1.0;
  int truncation = 8;
  int squeeze_truncation = 40;
  int max_n = 20;
  std::vector<double> epsilons = {1e-1, 1e-2, 1e-3, 1e-4};
  std::vector<double> etas = {0.0, 0.5, 1.0, 2.0};
  double grid = 2.0;
  double step = 0.5;
  int nodes = specfun::kDefaultNodes;
  fock::SignConvention convention = fock::SignConvention::closed;
  std::optional<double> tolerance;
  std::string output;
  Format format = Format::csv;
};

inline const char* to_string(Command c) {
  switch (c) {
    case Command::wavefunction: return "wavefunction";
    case Command::formfactor: return "formfactor";
    case Command::algebra: return "algebra";
    case Command::contract: return "contract";
    case Command::expansion: return "expansion";
    case Command::uncertainty: return "uncertainty";
  }
  return "?";
}

inline std::optional<Command> parse_command(const std::string& s) {
  for (Command c : {Command::wavefunction, Command::formfactor, Command::algebra, Command::contract,
                    Command::expansion, Command::uncertainty}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

/// Throws invalid_argument describing the first violated precondition.
inline void validate(const RunConfig& c) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw invalid_argument(what);
  };
  require(std::isfinite(c.eta), "eta must be finite");
  require(!c.tolerance || *c.tolerance >= 0.0, "tolerance must be >= 0");
  switch (c.command) {
    case Command::wavefunction:
      require(c.n >= 0 && c.n <= specfun::kMaxDegree, "n out of range");
      require(c.grid >= 0.0 && c.step > 0.0, "grid must be >= 0 and step > 0");
      require(c.grid / c.step <= 2000.0, "grid/step too fine (max 2000 cells per half-axis)");
      require(c.nodes >= 1, "nodes must be >= 1");
      break;
    case Command::formfactor:
      require(c.q2_max >= 0.0 && std::isfinite(c.q2_max), "q2-max must be finite and >= 0");
      require(c.samples >= 2, "samples must be >= 2");
      require(c.mass > 0.0, "mass must be > 0");
      require(c.nodes >= 32, "nodes must be >= 32");
      break;
    case Command::algebra:
      require(c.truncation >= 4 && c.truncation <= fock::kMaxDenseTruncation, "truncation must be in [4, 64]");
      break;
    case Command::contract:
      require(c.epsilons.size() >= 2, "need at least two epsilon values");
      for (double e : c.epsilons) require(e > 0.0, "epsilon values must be > 0");
      break;
    case Command::expansion:
      require(c.max_n >= 0 && c.max_n <= specfun::kMaxDegree, "max-n out of range");
      require(c.squeeze_truncation >= 1 && c.squeeze_truncation <= fock::kMaxSparseTruncation,
              "squeeze truncation must be in [1, 512]");
      require(c.grid >= 0.0 && c.step > 0.0, "grid must be >= 0 and step > 0");
      break;
    case Command::uncertainty:
      require(!c.etas.empty(), "need at least one eta");
      for (double e : c.etas) require(std::isfinite(e) && std::abs(e) <= 10.0, "eta values must lie in [-10, 10]");
      break;
  }
}

namespace detail {

inline double tol(const RunConfig& c, double fallback) { return c.tolerance.value_or(fallback); }

inline report::Report wavefunction(const RunConfig& c) {
  report::Report r;
  r.parameters = {{"eta", c.eta}, {"n", c.n}, {"grid", c.grid}, {"step", c.step}};
  r.columns = {"z", "t", "psi", "density"};
  const Rapidity eta(c.eta);
  for (const auto& p : oscillator::square_grid(c.grid, c.step)) {
    const double v = oscillator::psi(c.n, eta, p.z, p.t);
    r.rows.push_back({p.z, p.t, v, v * v});
  }
  const int nodes = std::max(32, c.n + 8);
  r.check("norm", std::abs(oscillator::norm_by_quadrature(c.n, eta, nodes) - 1.0), tol(c, 1e-8));
  if (c.n == 0) {
    // Closed-form peak: psi(0, eta, 0, 0) = pi^{-1/2} for every eta.
    r.check("ground_state_peak", std::abs(oscillator::psi(0, eta, 0, 0) - oscillator::kInvSqrtPi), 1e-15);
  }
  return r;
}

inline report::Report formfactor_table(const RunConfig& c) {
  report::Report r;
  r.parameters = {{"q2_max", c.q2_max}, {"samples", c.samples}, {"mass", c.mass}, {"nodes", c.nodes}};
  r.columns = {"Q2", "g", "F", "g_nonrel"};
  double oracle_gap = 0.0;
  bool decreasing = true;
  double prev_g = 2.0, prev_f = 2.0;
  for (int i = 0; i < c.samples; ++i) {
    const double q2 = c.q2_max * i / (c.samples - 1);
    const double g = formfactor::g_closed_form(q2, c.mass);
    const double f = formfactor::f_three_quark(q2, c.mass);
    const double nonrel = formfactor::g_nonrelativistic(q2 / (c.mass * c.mass));
    r.rows.push_back({q2, g, f, nonrel});
    oracle_gap = std::max(oracle_gap, std::abs(formfactor::g_by_quadrature(q2, c.mass, c.nodes) - g));
    if (i > 0 && c.q2_max > 0.0 && !(g < prev_g && f < prev_f)) decreasing = false;
    prev_g = g;
    prev_f = f;
  }
  const double at_zero = std::max({std::abs(formfactor::g_closed_form(0.0, c.mass) - 1.0),
                                   std::abs(formfactor::f_three_quark(0.0, c.mass) - 1.0),
                                   std::abs(formfactor::g_nonrelativistic(0.0) - 1.0)});
  r.check("unit_at_zero", at_zero, 0.0);
  r.check("quadrature_oracle", oracle_gap, tol(c, 1e-10));
  r.check("monotone_decay", decreasing ? 0.0 : 1.0, 0.0);
  return r;
}

inline report::Report algebra_table(const RunConfig& c) {
  report::Report r;
  r.parameters = {{"truncation", c.truncation}, {"convention", fock::to_string(c.convention)}};
  r.columns = {"pair", "expected", "max_deviation", "pass"};
  const double tolerance = tol(c, 1e-10);
  const auto gens = fock::build_generators(c.truncation, c.convention);
  const auto reports = fock::verify_algebra(gens, tolerance);
  auto& list = r.extra["commutators"] = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    const std::string expected = algebra::format(rep.expected);
    r.rows.push_back({rep.pair_name(), expected, rep.max_deviation, static_cast<long long>(rep.pass)});
    list.push_back({{"pair", rep.pair_name()}, {"expected", expected}, {"max_deviation", rep.max_deviation},
                    {"pass", rep.pass}});
    r.check("commutator " + rep.pair_name(), rep.max_deviation, tolerance);
  }
  r.check("hermiticity", fock::hermiticity_deviation(gens), 1e-12);
  double matrix_worst = 0.0;
  for (const auto& rep : desitter::verify_matrix_algebra()) matrix_worst = std::max(matrix_worst, rep.max_deviation);
  r.check("matrix_algebra", matrix_worst, 1e-14);
  r.check("representation_equivalence", desitter::representation_equivalence(gens), tolerance);
  return r;
}

inline report::Report contract_table(const RunConfig& c) {
  using algebra::Label;
  report::Report r;
  r.parameters = {{"epsilons", c.epsilons}};
  r.columns = {"generator", "epsilon", "vanishing_entry", "divergent_entry_times_eps2"};
  const auto gens = desitter::build_matrix_generators();
  for (const auto& g : gens) {
    const auto label = g.label;
    const bool moving = label == Label::Q1 || label == Label::Q2 || label == Label::Q3 || label == Label::S0;
    if (!moving) {
      double worst = 0.0;
      for (double e : c.epsilons) worst = std::max(worst, (desitter::contract(g.matrix, e) - g.matrix).cwiseAbs().maxCoeff());
      r.check(std::string("fixed ") + algebra::name(label), worst, 0.0);
      continue;
    }
    const auto [row, col] = desitter::vanishing_entry(label);
    for (double e : c.epsilons) {
      const auto m = desitter::contract(g.matrix, e);
      r.rows.push_back({std::string(algebra::name(label)), e, std::abs(m(row, col)), std::abs(m(col, row)) * e * e});
    }
    const double slope = desitter::vanishing_entry_slope(g.matrix, label, c.epsilons);
    r.check(std::string("slope ") + algebra::name(label), std::abs(slope - 2.0), tol(c, 0.01));
    const auto target = desitter::translation_generator(desitter::contracted_partner(label));
    r.check(std::string("limit ") + algebra::name(label) + " -> " + desitter::name(desitter::contracted_partner(label)),
            (desitter::contraction_limit(g.matrix) - target).cwiseAbs().maxCoeff(), 0.0);
  }
  return r;
}

inline report::Report expansion_table(const RunConfig& c) {
  report::Report r;
  const Rapidity eta(c.eta);
  r.parameters = {{"eta", c.eta}, {"max_n", c.max_n}, {"squeeze_truncation", c.squeeze_truncation},
                  {"grid", c.grid}, {"step", c.step}};
  r.columns = {"n", "coefficient", "squeeze_component"};
  const auto coeffs = oscillator::expansion_coefficients(eta, c.max_n);
  const auto state = fock::squeeze_vacuum(eta, c.squeeze_truncation);
  const auto diag = fock::diagonal_components(state, c.squeeze_truncation);
  double squeeze_gap = 0.0;
  double sum_sq = 0.0;
  for (int n = 0; n <= c.max_n; ++n) {
    sum_sq += coeffs[n] * coeffs[n];
    if (n <= c.squeeze_truncation) {
      r.rows.push_back({static_cast<long long>(n), coeffs[n], diag[n].real()});
      squeeze_gap = std::max(squeeze_gap, std::abs(diag[n] - coeffs[n]));
    } else {
      r.rows.push_back({static_cast<long long>(n), coeffs[n], std::string("")});
    }
  }
  const double th = std::tanh(std::abs(c.eta));
  r.check("coefficient_norm", std::abs(sum_sq - (1.0 - std::pow(th, 2.0 * (c.max_n + 1)))), 1e-12);
  r.check("squeeze_agreement", squeeze_gap, tol(c, 1e-8));
  r.check("squeeze_off_diagonal", fock::off_diagonal_magnitude(state, c.squeeze_truncation), 1e-12);
  // |phi_n(x)| <= 1.086435 pi^{-1/4}, so the omitted tail is bounded by a
  // geometric series in tanh|eta|.
  const double basis_bound = 1.086435 * 1.086435 / std::sqrt(std::numbers::pi);
  const double tail_bound =
      th < 1.0 ? basis_bound * std::pow(th, c.max_n + 1) / (std::cosh(c.eta) * (1.0 - th)) : INFINITY;
  const auto grid = oscillator::square_grid(c.grid, c.step);
  r.check("expansion_tail_bound", oscillator::verify_expansion(eta, c.max_n, grid), tail_bound + 1e-14);
  return r;
}

inline report::Report uncertainty_table(const RunConfig& c) {
  report::Report r;
  r.parameters = {{"etas", c.etas}};
  r.columns = {"eta", "zplus_sq", "zminus_sq", "qplus_sq", "qminus_sq", "zplus_qminus", "zminus_qplus"};
  double worst = 0.0;
  for (double e : c.etas) {
    const auto u = oscillator::uncertainty_products(Rapidity(e));
    r.rows.push_back({e, u.mean_zplus_sq, u.mean_zminus_sq, u.mean_qplus_sq, u.mean_qminus_sq,
                      u.plus_minus_product(), u.minus_plus_product()});
    worst = std::max({worst, std::abs(u.plus_minus_product() - 0.25), std::abs(u.minus_plus_product() - 0.25)});
  }
  r.check("invariant_products", worst, tol(c, 1e-10));
  return r;
}

}  // namespace detail

/// Builds the report for a validated configuration.
inline report::Report build_report(const RunConfig& c) {
  report::Report r;
  switch (c.command) {
    case Command::wavefunction: r = detail::wavefunction(c); break;
    case Command::formfactor: r = detail::formfactor_table(c); break;
    case Command::algebra: r = detail::algebra_table(c); break;
    case Command::contract: r = detail::contract_table(c); break;
    case Command::expansion: r = detail::expansion_table(c); break;
    case Command::uncertainty: r = detail::uncertainty_table(c); break;
  }
  r.command = to_string(c.command);
  return r;
}

/// Where the report goes: the explicit path, else $LCHO_OUTPUT_DIR/<command>.<ext>,
/// else standard output (empty path).
inline std::string resolve_output(const RunConfig& c) {
  if (!c.output.empty()) return c.output;
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    return (std::filesystem::path(dir) / (std::string(to_string(c.command)) + (c.format == Format::csv ? ".csv" : ".json")))
        .string();
  }
  return {};
}

inline int run(const RunConfig& c, std::ostream& err = std::cerr) {
  try {
    validate(c);
  } catch (const invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  }
  report::Report r;
  try {
    r = build_report(c);
  } catch (const invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const truncation_error& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const error& e) {
    err << "computation failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  const std::string path = resolve_output(c);
  auto emit = [&](std::ostream& out) {
    if (c.format == Format::csv) {
      report::write_csv(r, out);
    } else {
      report::write_json(r, out);
    }
  };
  if (path.empty()) {
    emit(std::cout);
  } else {
    std::ofstream file(path);
    if (!file) {
      err << "cannot open " << path << " for writing\n";
      return kExitInvalidConfig;
    }
    emit(file);
  }
  for (const auto& check : r.checks) {
    if (!check.pass) err << "FAIL " << check.name << ": " << check.max_deviation << " > " << check.tolerance << '\n';
  }
  return r.all_pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace lcho::cli
