#pragma once

// The 5x5 matrix generators of O(3,2) on (x, y, z, t, s), the translation
// generators of the inhomogeneous Lorentz group, and the contraction that
// turns Q_i and S_0 into those translations.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "lcho/algebra.hpp"
#include "lcho/errors.hpp"
#include "lcho/expm.hpp"
#include "lcho/fock.hpp"

namespace lcho::desitter {

using algebra::cplx;
using algebra::kI;
using algebra::Label;
using Matrix5 = Eigen::Matrix<cplx, 5, 5>;

/// Row/column order of the carrier space.
enum Axis : int { X = 0, Y = 1, Z = 2, T = 3, S = 4 };

struct FiveVector {
  double x = 0.0, y = 0.0, z = 0.0, t = 0.0, s = 0.0;

  [[nodiscard]] Eigen::Matrix<cplx, 5, 1> column() const {
    Eigen::Matrix<cplx, 5, 1> v;
    v << x, y, z, t, s;
    return v;
  }
  static FiveVector from(const Eigen::Matrix<cplx, 5, 1>& v) {
    return {v(0).real(), v(1).real(), v(2).real(), v(3).real(), v(4).real()};
  }
  /// x^2 + y^2 + z^2 - t^2 - s^2
  [[nodiscard]] double interval() const { return x * x + y * y + z * z - t * t - s * s; }

  friend bool operator==(const FiveVector&, const FiveVector&) = default;
};

struct MatrixGenerator {
  Label label;
  Matrix5 matrix;
};

namespace detail {

inline Matrix5 pattern(std::initializer_list<std::tuple<int, int, cplx>> entries) {
  Matrix5 m = Matrix5::Zero();
  for (const auto& [r, c, v] : entries) m(r, c) = v;
  return m;
}

}  // namespace detail

/// Rotations (J), boosts along t (K), boosts along s (Q) and the t-s
/// rotation (S_0), entry for entry as tabulated.
inline std::array<MatrixGenerator, algebra::kGeneratorCount> build_matrix_generators() {
  using detail::pattern;
  return {{
      {Label::J1, pattern({{Y, Z, -kI}, {Z, Y, kI}})},
      {Label::J2, pattern({{X, Z, kI}, {Z, X, -kI}})},
      {Label::J3, pattern({{X, Y, -kI}, {Y, X, kI}})},
      {Label::K1, pattern({{X, T, kI}, {T, X, kI}})},
      {Label::K2, pattern({{Y, T, kI}, {T, Y, kI}})},
      {Label::K3, pattern({{Z, T, kI}, {T, Z, kI}})},
      {Label::Q1, pattern({{X, S, kI}, {S, X, kI}})},
      {Label::Q2, pattern({{Y, S, kI}, {S, Y, kI}})},
      {Label::Q3, pattern({{Z, S, kI}, {S, Z, kI}})},
      {Label::S0, pattern({{T, S, -kI}, {S, T, kI}})},
  }};
}

inline algebra::GeneratorMatrices as_matrices(const std::array<MatrixGenerator, algebra::kGeneratorCount>& gens) {
  algebra::GeneratorMatrices m;
  for (const auto& g : gens) m[algebra::index(g.label)] = g.matrix;
  return m;
}

inline std::vector<algebra::CommutatorReport> verify_matrix_algebra(double tolerance = 1e-14) {
  return algebra::verify(as_matrices(build_matrix_generators()), tolerance);
}

/// Largest gap between the structure constants read off the Fock commutators
/// and those of the 5x5 matrices.
inline double representation_equivalence(const fock::GeneratorSet& fock_gens) {
  const auto from_fock = fock::structure_constants(fock_gens);
  const auto from_matrices = algebra::structure_constants(as_matrices(build_matrix_generators()));
  return algebra::max_difference(from_fock, from_matrices);
}

// --- translations and contraction -------------------------------------------

enum class Translation : int { P1, P2, P3, P0 };

inline const char* name(Translation p) {
  constexpr std::array<const char*, 4> names = {"P1", "P2", "P3", "P0"};
  return names[static_cast<int>(p)];
}

/// Translation generators of the contracted group; each has one entry in
/// the fifth column.
inline Matrix5 translation_generator(Translation p) {
  using detail::pattern;
  switch (p) {
    case Translation::P1: return pattern({{X, S, kI}});
    case Translation::P2: return pattern({{Y, S, kI}});
    case Translation::P3: return pattern({{Z, S, kI}});
    case Translation::P0: return pattern({{T, S, -kI}});
  }
  return Matrix5::Zero();
}

/// Q_i -> P_i, S_0 -> P_0.
inline Translation contracted_partner(Label l) {
  switch (l) {
    case Label::Q1: return Translation::P1;
    case Label::Q2: return Translation::P2;
    case Label::Q3: return Translation::P3;
    case Label::S0: return Translation::P0;
    default: break;
  }
  throw invalid_argument(std::string("contracted_partner: ") + algebra::name(l) + " has no translation partner");
}

class ContractionParameter {
 public:
  explicit ContractionParameter(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0)) throw invalid_argument("ContractionParameter: epsilon must be > 0");
  }
  [[nodiscard]] double epsilon() const { return epsilon_; }
  /// diag(1/e, 1/e, 1/e, 1/e, e)
  [[nodiscard]] Matrix5 matrix() const { return diagonal(-1); }
  [[nodiscard]] Matrix5 inverse() const { return diagonal(1); }

 private:
  [[nodiscard]] Matrix5 diagonal(int power) const {
    Matrix5 m = Matrix5::Zero();
    for (int i = 0; i < 4; ++i) m(i, i) = std::pow(epsilon_, power);
    m(4, 4) = std::pow(epsilon_, -power);
    return m;
  }
  double epsilon_;
};

/// C G C^{-1}.
inline Matrix5 contract(const Matrix5& generator, double epsilon) {
  const ContractionParameter c(epsilon);
  return c.matrix() * generator * c.inverse();
}

/// Power of epsilon multiplying entry (row, col) under contract().
inline int contraction_power(int row, int col) {
  auto p = [](int i) { return i == S ? 1 : -1; };
  return p(row) - p(col);
}

/// The epsilon -> 0 limit taken entry by entry: entries that scale as
/// epsilon^2 are dropped and those that scale as epsilon^-2 are rescaled back
/// to their original value. J and K are fixed; Q_i and S_0 land on P_i, P_0.
inline Matrix5 contraction_limit(const Matrix5& generator) {
  Matrix5 out = Matrix5::Zero();
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      if (contraction_power(r, c) <= 0) out(r, c) = generator(r, c);
    }
  }
  return out;
}

/// Position of the entry of C G C^{-1} that vanishes as epsilon^2 (the
/// fifth-row entry of Q_i or S_0).
inline std::pair<int, int> vanishing_entry(Label l) {
  switch (l) {
    case Label::Q1: return {S, X};
    case Label::Q2: return {S, Y};
    case Label::Q3: return {S, Z};
    case Label::S0: return {S, T};
    default: break;
  }
  throw invalid_argument(std::string("vanishing_entry: ") + algebra::name(l) + " is fixed by the contraction");
}

/// Least-squares slope of log|entry| against log(epsilon) for the vanishing
/// entry of C G C^{-1}.
inline double vanishing_entry_slope(const Matrix5& generator, Label l, std::span<const double> epsilons) {
  if (epsilons.size() < 2) throw invalid_argument("vanishing_entry_slope: need at least two epsilons");
  const auto [r, c] = vanishing_entry(l);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double e : epsilons) {
    const double lx = std::log(e);
    const double ly = std::log(std::abs(contract(generator, e)(r, c)));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(epsilons.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// exp(-i[a P1 + b P2 + c P3 - d P0]) = I + the fifth column (a, b, c, d).
/// The generators are nilpotent and commute, so the series stops after the
/// linear term. Time enters with -P0 so that t moves to t + d.
inline Matrix5 translation_matrix(double a, double b, double c, double d) {
  const Matrix5 linear = -kI * (a * translation_generator(Translation::P1) + b * translation_generator(Translation::P2) +
                                c * translation_generator(Translation::P3) - d * translation_generator(Translation::P0));
  return Matrix5::Identity() + linear;
}

/// (x, y, z, t, 1) -> (x + a, y + b, z + c, t + d, 1).
inline FiveVector translate(double a, double b, double c, double d, const FiveVector& v) {
  if (v.s != 1.0) throw invalid_carrier("translate: fifth coordinate must be 1, got " + std::to_string(v.s));
  return FiveVector::from(translation_matrix(a, b, c, d) * v.column());
}

/// exp(-i theta G) applied to v.
inline FiveVector transform(const Matrix5& generator, double theta, const FiveVector& v) {
  const Eigen::MatrixXcd g = expm(Eigen::MatrixXcd(-kI * theta * generator));
  return FiveVector::from(Matrix5(g) * v.column());
}

}  // namespace lcho::desitter
