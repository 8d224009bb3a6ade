// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lcho/desitter.hpp"
#include "lcho/fock.hpp"
#include "lcho/formfactor.hpp"
#include "lcho/oscillator.hpp"

namespace {

using lcho::Rapidity;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %-34s %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr double kMass = 0.938;

void formfactor_oracle() {
  std::vector<double> q2 = {0.0};
  for (int i = 0; i < 19; ++i) q2.push_back(kMass * kMass * std::pow(10.0, -2.0 + 4.0 * i / 18.0));
  const auto start = Clock::now();
  double worst = 0.0;
  for (double q : q2) {
    worst = std::max(worst, std::abs(lcho::formfactor::g_by_quadrature(q, kMass) - lcho::formfactor::g_closed_form(q, kMass)));
  }
  const double elapsed = seconds_since(start);
  report(1, "form factor quadrature oracle", worst <= 1e-10 && elapsed < 1.0,
         fmt("max |dg| = %.3g (tol 1e-10), %.3g s (limit 1 s)", worst, elapsed));
}

void boundary_values() {
  const double g = lcho::formfactor::g_closed_form(0.0, kMass);
  const double f = lcho::formfactor::f_three_quark(0.0, kMass);
  report(2, "unit form factors at Q2 = 0", g == 1.0 && f == 1.0, fmt("g(0) = %.17g, F(0) = %.17g", g, f));
}

void dipole_asymptotics() {
  const double m2 = kMass * kMass;
  const double q2 = 1e4 * m2;
  const double f_limit = 4.0 * m2 * m2 * std::exp(-1.0);
  const double g_limit = 2.0 * m2 * std::exp(-0.5);
  const double f_rel = std::abs(q2 * q2 * lcho::formfactor::f_three_quark(q2, kMass) / f_limit - 1.0);
  const double g_rel = std::abs(q2 * lcho::formfactor::g_closed_form(q2, kMass) / g_limit - 1.0);
  report(3, "dipole and monopole asymptotics", f_rel <= 0.01 && g_rel <= 0.01,
         fmt("rel dev Q4F %.3g, Q2g %.3g (tol 0.01)", f_rel, g_rel));
}

void fock_closure() {
  double worst = 0.0;
  int failing = 0;
  double elapsed12 = 0.0;
  for (int n : {4, 8, 12}) {
    const auto start = Clock::now();
    const auto reports = lcho::fock::verify_algebra(lcho::fock::build_generators(n), 1e-10);
    if (n == 12) elapsed12 = seconds_since(start);
    if (reports.size() != 45) ++failing;
    for (const auto& r : reports) {
      worst = std::max(worst, r.max_deviation);
      if (!r.pass) ++failing;
    }
  }
  report(4, "Fock algebra closure N = 4, 8, 12", failing == 0 && elapsed12 < 10.0,
         fmt("max dev %.3g (tol 1e-10), failing %g, N=12 %.3g s", worst, failing, elapsed12));
}

void matrix_closure() {
  double worst = 0.0;
  bool all = true;
  const auto reports = lcho::desitter::verify_matrix_algebra(1e-14);
  for (const auto& r : reports) {
    worst = std::max(worst, r.max_deviation);
    all = all && r.pass;
  }
  const double equiv = lcho::desitter::representation_equivalence(lcho::fock::build_generators(8));
  report(5, "5x5 algebra closure + equivalence", all && reports.size() == 45 && equiv <= 1e-10,
         fmt("max dev %.3g (tol 1e-14), equivalence %.3g (tol 1e-10)", worst, equiv));
}

void contraction() {
  using lcho::algebra::Label;
  const std::vector<double> eps = {1e-1, 1e-2, 1e-3, 1e-4};
  double worst_slope = 0.0;
  double worst_limit = 0.0;
  for (const auto& g : lcho::desitter::build_matrix_generators()) {
    if (g.label != Label::Q1 && g.label != Label::Q2 && g.label != Label::Q3 && g.label != Label::S0) continue;
    worst_slope = std::max(worst_slope, std::abs(lcho::desitter::vanishing_entry_slope(g.matrix, g.label, eps) - 2.0));
    const auto target = lcho::desitter::translation_generator(lcho::desitter::contracted_partner(g.label));
    worst_limit = std::max(worst_limit, (lcho::desitter::contraction_limit(g.matrix) - target).cwiseAbs().maxCoeff());
  }
  report(6, "contraction to translations", worst_slope <= 0.01 && worst_limit == 0.0,
         fmt("max |slope - 2| %.3g (tol 0.01), limit dev %.3g (exact)", worst_slope, worst_limit));
}

void squeeze_expansion() {
  double worst = 0.0;
  for (double eta : {0.25, 0.5, 1.0}) {
    const auto state = lcho::fock::squeeze_vacuum(Rapidity(eta), 40);
    const auto diag = lcho::fock::diagonal_components(state, 40);
    for (int n = 0; n <= 15; ++n) {
      const double expected = std::pow(std::tanh(eta), n) / std::cosh(eta);
      worst = std::max(worst, std::abs(diag[n] - expected));
    }
  }
  report(7, "squeezed vacuum = covariant series", worst <= 1e-8, fmt("max dev %.3g (tol 1e-8)", worst));
}

void fourier_duality() {
  double worst = 0.0;
  for (double eta : {0.0, 0.5, 1.5}) {
    const lcho::oscillator::MomentumWaveFn closed{Rapidity(eta)};
    for (int i = -2; i <= 2; ++i) {
      for (int j = -2; j <= 2; ++j) {
        const double qz = 0.75 * i, q0 = 0.75 * j;
        worst = std::max(worst, std::abs(lcho::oscillator::momentum_wavefn_via_fourier(Rapidity(eta), qz, q0) -
                                         closed(qz, q0)));
      }
    }
  }
  report(8, "Fourier duality", worst <= 1e-8, fmt("max dev %.3g (tol 1e-8)", worst));
}

void uncertainty() {
  double worst = 0.0;
  for (double eta : {0.0, 0.5, 1.0, 2.0}) {
    const auto u = lcho::oscillator::uncertainty_products(Rapidity(eta));
    worst = std::max({worst, std::abs(u.plus_minus_product() - 0.25), std::abs(u.minus_plus_product() - 0.25)});
  }
  report(9, "light-cone uncertainty invariance", worst <= 1e-10, fmt("max |product - 1/4| %.3g (tol 1e-10)", worst));
}

void eigenvalue() {
  double worst_ratio = 0.0;
  double worst_eig = 0.0;
  double worst_raw = 0.0;
  for (int n : {0, 1, 2}) {
    for (double eta : {0.0, 1.3}) {
      const auto coarse = lcho::oscillator::eigenvalue_residual(n, Rapidity(eta), 0.04);
      const auto fine = lcho::oscillator::eigenvalue_residual(n, Rapidity(eta), 0.02);
      worst_ratio = std::max(worst_ratio, std::abs(coarse.residual / fine.residual - 4.0));
      worst_raw = std::max(worst_raw, std::abs(fine.eigenvalue - n));
      const double extrapolated = (4.0 * fine.eigenvalue - coarse.eigenvalue) / 3.0;
      worst_eig = std::max(worst_eig, std::abs(extrapolated - n));
    }
  }
  report(10, "eigenvalue invariance, O(h^2)", worst_ratio <= 0.1 && worst_eig <= 1e-5 && worst_raw <= 2e-3,
         fmt("max |ratio - 4| %.3g (tol 0.1), |lambda - n| %.3g at h=0.02, %.3g extrapolated", worst_ratio,
             worst_raw, worst_eig));
}

}  // namespace

int main() {
  const auto checks = {formfactor_oracle, boundary_values, dipole_asymptotics, fock_closure, matrix_closure,
                       contraction,       squeeze_expansion, fourier_duality,  uncertainty,  eigenvalue};
  for (auto check : checks) {
    try {
      check();
    } catch (const std::exception& e) {
      std::printf("[FAIL] exception: %s\n", e.what());
      ++failures;
    }
  }
  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "PASSED", failures);
  return failures ? 1 : 0;
}
