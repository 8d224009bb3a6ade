#pragma once

// Two-mode truncated Fock space: ladder operators, the ten quadratic O(3,2)
// generators, commutator checks on the truncation-safe block, and the
// two-mode squeezed vacuum.
//
// Basis ordering: |n1, n2> -> n1 (N+1) + n2 with 0 <= n1, n2 <= N.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lcho/algebra.hpp"
#include "lcho/errors.hpp"
#include "lcho/expm.hpp"
#include "lcho/oscillator.hpp"

namespace lcho::fock {

using algebra::cplx;
using algebra::kI;
using algebra::Label;
using SparseOperator = Eigen::SparseMatrix<cplx>;

/// Dense operators are capped at dimension 65^2.
inline constexpr int kMaxDenseTruncation = 64;
/// Sparse single-generator paths (squeezing) accept larger truncations.
inline constexpr int kMaxSparseTruncation = 512;

inline int basis_index(int n1, int n2, int truncation) { return n1 * (truncation + 1) + n2; }

struct FockOperator {
  Eigen::MatrixXcd matrix;
  int truncation = 0;
  std::string label;

  [[nodiscard]] int dimension() const { return static_cast<int>(matrix.rows()); }
};

struct ModeOperators {
  FockOperator a1, a1_dag, a2, a2_dag;
};

/// Sign convention for the quadratic generators.
///
/// `printed` assembles every form verbatim. Those forms close on the table in
/// algebra.hpp except for the nine brackets that involve K_i together with
/// Q_i or S_0, which come out with the opposite sign. `closed` negates the
/// three K_i, which restores the full table and leaves J, Q and S_0 (and
/// hence the squeezing generator Q_3) untouched.
enum class SignConvention { printed, closed };

inline const char* to_string(SignConvention c) { return c == SignConvention::printed ? "printed" : "closed"; }

namespace detail {

inline void check_truncation(int truncation, int minimum, int maximum, const char* who) {
  if (truncation < minimum || truncation > maximum) {
    throw truncation_error(std::string(who) + ": truncation " + std::to_string(truncation) +
                           " outside [" + std::to_string(minimum) + ", " + std::to_string(maximum) + "]");
  }
}

/// a_mode (mode 1 or 2) as a sparse matrix.
inline SparseOperator lowering(int mode, int truncation) {
  const int dim = (truncation + 1) * (truncation + 1);
  std::vector<Eigen::Triplet<cplx>> entries;
  entries.reserve(static_cast<std::size_t>(dim));
  for (int n1 = 0; n1 <= truncation; ++n1) {
    for (int n2 = 0; n2 <= truncation; ++n2) {
      const int n = mode == 1 ? n1 : n2;
      if (n == 0) continue;
      const int to = mode == 1 ? basis_index(n1 - 1, n2, truncation) : basis_index(n1, n2 - 1, truncation);
      entries.emplace_back(to, basis_index(n1, n2, truncation), std::sqrt(static_cast<double>(n)));
    }
  }
  SparseOperator a(dim, dim);
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

inline SparseOperator generator(Label label, int truncation, SignConvention convention) {
  const SparseOperator a1 = lowering(1, truncation);
  const SparseOperator a2 = lowering(2, truncation);
  const SparseOperator c1 = SparseOperator(a1.adjoint());
  const SparseOperator c2 = SparseOperator(a2.adjoint());
  const double k_sign = convention == SignConvention::closed ? -1.0 : 1.0;
  SparseOperator g;
  switch (label) {
    case Label::J1: g = 0.5 * (c1 * a2 + c2 * a1); break;
    case Label::J2: g = (1.0 / (2.0 * kI)) * SparseOperator(c1 * a2 - c2 * a1); break;
    case Label::J3: g = 0.5 * (c1 * a1 - c2 * a2); break;
    case Label::K1: g = (-0.25 * k_sign) * SparseOperator(c1 * c1 + a1 * a1 - c2 * c2 - a2 * a2); break;
    case Label::K2: g = (0.25 * k_sign * kI) * SparseOperator(c1 * c1 - a1 * a1 + c2 * c2 - a2 * a2); break;
    case Label::K3: g = (0.5 * k_sign) * SparseOperator(c1 * c2 + a1 * a2); break;
    case Label::Q1: g = (-0.25 * kI) * SparseOperator(c1 * c1 - a1 * a1 - c2 * c2 + a2 * a2); break;
    case Label::Q2: g = -0.25 * (c1 * c1 + a1 * a1 + c2 * c2 + a2 * a2); break;
    case Label::Q3: g = (0.5 * kI) * SparseOperator(c1 * c2 - a1 * a2); break;
    case Label::S0: g = 0.5 * (c1 * a1 + a2 * c2); break;
  }
  g.prune(cplx{});
  return g;
}

}  // namespace detail

/// a1, a1^dag, a2, a2^dag with sqrt(n) ladder elements.
inline ModeOperators build_mode_operators(int truncation) {
  detail::check_truncation(truncation, 1, kMaxDenseTruncation, "build_mode_operators");
  auto dense = [&](const SparseOperator& s, const char* label) {
    return FockOperator{Eigen::MatrixXcd(s), truncation, label};
  };
  const SparseOperator a1 = detail::lowering(1, truncation);
  const SparseOperator a2 = detail::lowering(2, truncation);
  return {dense(a1, "a1"), dense(SparseOperator(a1.adjoint()), "a1+"), dense(a2, "a2"),
          dense(SparseOperator(a2.adjoint()), "a2+")};
}

/// Indices of |n1, n2> with n1 + n2 <= N - 2, where products of two
/// quadratic forms never touch the truncation edge.
inline std::vector<int> safe_subspace(int truncation) {
  std::vector<int> keep;
  for (int n1 = 0; n1 <= truncation; ++n1) {
    for (int n2 = 0; n1 + n2 <= truncation - 2; ++n2) keep.push_back(basis_index(n1, n2, truncation));
  }
  return keep;
}

class GeneratorSet {
 public:
  GeneratorSet(int truncation, SignConvention convention) : truncation_(truncation), convention_(convention) {
    detail::check_truncation(truncation, 4, kMaxDenseTruncation, "build_generators");
    for (Label l : algebra::kAllLabels) {
      ops_[algebra::index(l)] =
          FockOperator{Eigen::MatrixXcd(detail::generator(l, truncation, convention)), truncation, algebra::name(l)};
    }
  }

  [[nodiscard]] int truncation() const { return truncation_; }
  [[nodiscard]] SignConvention convention() const { return convention_; }
  [[nodiscard]] const FockOperator& operator[](Label l) const { return ops_[algebra::index(l)]; }
  [[nodiscard]] std::vector<int> safe_indices() const { return safe_subspace(truncation_); }

  [[nodiscard]] algebra::GeneratorMatrices matrices() const {
    algebra::GeneratorMatrices m;
    for (int k = 0; k < algebra::kGeneratorCount; ++k) m[k] = ops_[k].matrix;
    return m;
  }

 private:
  int truncation_;
  SignConvention convention_;
  std::array<FockOperator, algebra::kGeneratorCount> ops_;
};

inline GeneratorSet build_generators(int truncation, SignConvention convention = SignConvention::closed) {
  return GeneratorSet(truncation, convention);
}

inline std::vector<algebra::CommutatorReport> verify_algebra(const GeneratorSet& gens, double tolerance = 1e-10) {
  return algebra::verify(gens.matrices(), tolerance, gens.safe_indices());
}

/// Largest |G - G^dag| entry over all ten generators on the safe block.
inline double hermiticity_deviation(const GeneratorSet& gens) {
  const auto keep = gens.safe_indices();
  double worst = 0.0;
  for (Label l : algebra::kAllLabels) {
    const Eigen::MatrixXcd block = algebra::restrict_to(gens[l].matrix, keep);
    worst = std::max(worst, (block - block.adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

/// Structure constants read off the Fock commutators on the safe block.
inline std::vector<algebra::Coefficients> structure_constants(const GeneratorSet& gens) {
  return algebra::structure_constants(gens.matrices(), gens.safe_indices());
}

/// exp(-2i eta Q3)|0,0>. The exact state has weight tanh^{2(N+1)}(eta)
/// beyond |N,N>; truncations leaving more than 1e-8 of the norm out throw.
inline Eigen::VectorXcd squeeze_vacuum(Rapidity eta, int truncation) {
  detail::check_truncation(truncation, 1, kMaxSparseTruncation, "squeeze_vacuum");
  const double tail = std::pow(std::tanh(std::abs(eta.value())), 2.0 * (truncation + 1));
  if (tail > 1e-8) {
    throw truncation_error("squeeze_vacuum: truncation " + std::to_string(truncation) +
                           " drops norm " + std::to_string(tail) + " > 1e-8");
  }
  const SparseOperator q3 = detail::generator(Label::Q3, truncation, SignConvention::printed);
  const SparseOperator exponent = (-2.0 * kI * eta.value()) * q3;
  Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(q3.rows());
  vacuum(basis_index(0, 0, truncation)) = 1.0;
  return expm_multiply(exponent, vacuum);
}

/// <n,n|state> for n = 0..N.
inline std::vector<cplx> diagonal_components(const Eigen::VectorXcd& state, int truncation) {
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(truncation) + 1);
  for (int n = 0; n <= truncation; ++n) out.push_back(state(basis_index(n, n, truncation)));
  return out;
}

/// Largest |<n1,n2|state>| with n1 != n2.
inline double off_diagonal_magnitude(const Eigen::VectorXcd& state, int truncation) {
  double worst = 0.0;
  for (int n1 = 0; n1 <= truncation; ++n1) {
    for (int n2 = 0; n2 <= truncation; ++n2) {
      if (n1 != n2) worst = std::max(worst, std::abs(state(basis_index(n1, n2, truncation))));
    }
  }
  return worst;
}

}  // namespace lcho::fock
