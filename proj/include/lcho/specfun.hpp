#pragma once

// Hermite polynomials (physicists' convention), normalized oscillator
// eigenfunctions, and Gauss-Hermite quadrature against exp(-x^2).

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lcho/errors.hpp"

namespace lcho::specfun {

/// Largest oscillator degree accepted by phi().
inline constexpr int kMaxDegree = 4096;

/// Default node count for Gauss-Hermite rules used throughout the library.
inline constexpr int kDefaultNodes = 128;

/// H_n(x) by the three-term recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.
inline double hermite(int n, double x) {
  if (n < 0) throw invalid_degree("hermite: negative degree " + std::to_string(n));
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * curr - 2.0 * k * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

/// Log of the normalization constant (sqrt(pi) 2^n n!)^{-1/2}, via lgamma.
inline double log_phi_norm(int n) {
  return -0.5 * (0.5 * std::log(std::numbers::pi) + n * std::numbers::ln2 +
                 std::lgamma(static_cast<double>(n) + 1.0));
}

/// Unit-norm oscillator eigenfunction
///   phi_n(x) = (sqrt(pi) 2^n n!)^{-1/2} H_n(x) exp(-x^2/2).
///
/// Evaluated through the orthonormal recurrence so that neither H_n nor n!
/// is formed explicitly; a running log-scale keeps large |x| and large n
/// free of overflow and premature underflow.
inline double phi(int n, double x) {
  if (n < 0 || n > kMaxDegree) {
    throw invalid_degree("phi: degree " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxDegree) + "]");
  }
  constexpr double kRescale = 1e150;
  double log_scale = -0.5 * x * x - 0.25 * std::log(std::numbers::pi);
  double prev = 0.0;
  double curr = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1)) * x * curr - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = curr;
    curr = next;
    if (std::abs(curr) > kRescale) {
      curr /= kRescale;
      prev /= kRescale;
      log_scale += std::log(kRescale);
    }
  }
  if (curr == 0.0) return 0.0;
  return std::copysign(std::exp(std::log(std::abs(curr)) + log_scale), curr);
}

/// Gauss-Hermite rule: sum_i w_i f(x_i) ~ integral f(x) exp(-x^2) dx.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  [[nodiscard]] int count() const { return static_cast<int>(nodes.size()); }

  template <class F>
  [[nodiscard]] double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Nodes (ascending) and weights of the count-point Gauss-Hermite rule.
///
/// Roots are seeded by the eigenvalues of the symmetric Jacobi matrix and then
/// polished by Newton iteration on the orthonormal Hermite recurrence, which
/// also yields the weights 2 / (d/dx of the normalized H_count)^2. Throws if a
/// root does not settle to 1e-14.
inline QuadratureRule gauss_hermite(int count) {
  if (count < 1) throw invalid_argument("gauss_hermite: count must be >= 1");
  constexpr int kMaxIter = 50;
  constexpr double kTol = 1e-14;
  const double pim4 = std::pow(std::numbers::pi, -0.25);

  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(count, count);
  for (int k = 1; k < count; ++k) jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd seeds = solver.eigenvalues();

  QuadratureRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (int i = 0; i < count; ++i) {
    // Newton on the positive half only; mirror for symmetry.
    if (i < count / 2) continue;
    double z = std::abs(seeds(i));
    double derivative = 0.0;
    bool converged = false;
    for (int iter = 0; iter < kMaxIter; ++iter) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < count; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      derivative = std::sqrt(2.0 * count) * p2;
      const double step = p1 / derivative;
      z -= step;
      if (std::abs(step) <= kTol * std::max(1.0, std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw quadrature_nonconvergence("gauss_hermite: Newton iteration did not converge for root " +
                                      std::to_string(i) + " of " + std::to_string(count));
    }
    if (count % 2 == 1 && i == count / 2) z = 0.0;
    const double w = 2.0 / (derivative * derivative);
    rule.nodes[i] = z;
    rule.weights[i] = w;
    rule.nodes[count - 1 - i] = -z;
    rule.weights[count - 1 - i] = w;
  }
  return rule;
}

}  // namespace lcho::specfun
