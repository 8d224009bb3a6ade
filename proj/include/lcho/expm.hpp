#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <cmath>
#include <complex>

#include <unsupported/Eigen/MatrixFunctions>

namespace lcho {

/// exp(A) v for sparse A via scaled Taylor steps: A is split into s pieces
/// with ||A/s||_1 <= 1/2 and each step's series runs until the next term is
/// below 1e-18 of the running sum.
inline Eigen::VectorXcd expm_multiply(const Eigen::SparseMatrix<std::complex<double>>& a,
                                      Eigen::VectorXcd v) {
  double norm1 = 0.0;
  for (int k = 0; k < a.outerSize(); ++k) {
    double col = 0.0;
    for (Eigen::SparseMatrix<std::complex<double>>::InnerIterator it(a, k); it; ++it) col += std::abs(it.value());
    norm1 = std::max(norm1, col);
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(2.0 * norm1)));
  const Eigen::SparseMatrix<std::complex<double>> b = a / static_cast<double>(steps);
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXcd term = v;
    Eigen::VectorXcd sum = v;
    for (int k = 1; k < 200; ++k) {
      term = (b * term) / static_cast<double>(k);
      sum += term;
      if (term.norm() <= 1e-18 * sum.norm()) break;
    }
    v = sum;
  }
  return v;
}

/// Dense matrix exponential (Pade scaling and squaring).
inline Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) { return a.exp(); }

}  // namespace lcho
