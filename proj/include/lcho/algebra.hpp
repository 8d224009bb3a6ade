#pragma once

// Labels and structure constants of the ten-generator O(3,2) algebra,
// shared by the Fock-space and 5x5 matrix representations.
//
//   [J_i, J_j] = i e_ijk J_k     [J_i, K_j] = i e_ijk K_k    [K_i, K_j] = -i e_ijk J_k
//   [J_i, Q_j] = i e_ijk Q_k     [Q_i, Q_j] = -i e_ijk J_k
//   [K_i, Q_j] = -i d_ij S_0     [J_i, S_0] = 0
//   [K_i, S_0] = -i Q_i          [Q_i, S_0] = i K_i

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <complex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lcho::algebra {

using cplx = std::complex<double>;
inline constexpr cplx kI{0.0, 1.0};

enum class Label : int { J1, J2, J3, K1, K2, K3, Q1, Q2, Q3, S0 };
inline constexpr int kGeneratorCount = 10;
inline constexpr int kPairCount = kGeneratorCount * (kGeneratorCount - 1) / 2;

inline constexpr std::array<Label, kGeneratorCount> kAllLabels = {
    Label::J1, Label::J2, Label::J3, Label::K1, Label::K2,
    Label::K3, Label::Q1, Label::Q2, Label::Q3, Label::S0};

inline constexpr const char* name(Label l) {
  constexpr std::array<const char*, kGeneratorCount> names = {"J1", "J2", "J3", "K1", "K2",
                                                              "K3", "Q1", "Q2", "Q3", "S0"};
  return names[static_cast<int>(l)];
}

inline constexpr int index(Label l) { return static_cast<int>(l); }

/// Expansion of a commutator in the generator basis.
using Coefficients = std::array<cplx, kGeneratorCount>;

namespace detail {

enum class Family { J, K, Q, S };

inline constexpr Family family(Label l) {
  const int i = index(l);
  if (i < 3) return Family::J;
  if (i < 6) return Family::K;
  if (i < 9) return Family::Q;
  return Family::S;
}

inline constexpr int component(Label l) { return index(l) % 3; }

inline constexpr Label make(Family f, int k) {
  switch (f) {
    case Family::J: return static_cast<Label>(k);
    case Family::K: return static_cast<Label>(3 + k);
    case Family::Q: return static_cast<Label>(6 + k);
    case Family::S: return Label::S0;
  }
  return Label::S0;
}

inline constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

// [A, B] for A preceding B in the canonical family order J, K, Q, S.
inline Coefficients ordered(Label a, Label b) {
  Coefficients out{};
  const Family fa = family(a);
  const Family fb = family(b);
  const int i = component(a);
  const int j = component(b);
  auto epsilon_term = [&](double sign, Family result) {
    for (int k = 0; k < 3; ++k) {
      if (const int e = levi_civita(i, j, k); e != 0) out[index(make(result, k))] = sign * e * kI;
    }
  };
  if (fa == Family::J && fb == Family::J) epsilon_term(1.0, Family::J);
  if (fa == Family::J && fb == Family::K) epsilon_term(1.0, Family::K);
  if (fa == Family::K && fb == Family::K) epsilon_term(-1.0, Family::J);
  if (fa == Family::J && fb == Family::Q) epsilon_term(1.0, Family::Q);
  if (fa == Family::Q && fb == Family::Q) epsilon_term(-1.0, Family::J);
  if (fa == Family::K && fb == Family::Q && i == j) out[index(Label::S0)] = -kI;
  if (fa == Family::K && fb == Family::S) out[index(make(Family::Q, i))] = -kI;
  if (fa == Family::Q && fb == Family::S) out[index(make(Family::K, i))] = kI;
  return out;
}

}  // namespace detail

/// Expected [a, b] as coefficients over the ten generators.
inline Coefficients structure(Label a, Label b) {
  if (index(a) <= index(b)) return detail::ordered(a, b);
  auto out = detail::ordered(b, a);
  for (auto& c : out) c = -c;
  return out;
}

/// Human-readable form of a coefficient vector, e.g. "+i J3" or "-i S0".
inline std::string format(const Coefficients& c) {
  std::ostringstream os;
  bool any = false;
  for (int k = 0; k < kGeneratorCount; ++k) {
    if (c[k] == cplx{}) continue;
    if (any) os << ' ';
    const double im = c[k].imag();
    const double re = c[k].real();
    if (re == 0.0 && (im == 1.0 || im == -1.0)) {
      os << (im > 0 ? "+i " : "-i ");
    } else {
      os << "(" << re << (im >= 0 ? "+" : "") << im << "i) ";
    }
    os << name(kAllLabels[k]);
    any = true;
  }
  return any ? os.str() : "0";
}

/// All 45 unordered pairs (a, b) with a before b.
inline std::vector<std::pair<Label, Label>> all_pairs() {
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(kPairCount);
  for (int a = 0; a < kGeneratorCount; ++a) {
    for (int b = a + 1; b < kGeneratorCount; ++b) pairs.emplace_back(kAllLabels[a], kAllLabels[b]);
  }
  return pairs;
}

struct CommutatorReport {
  Label first;
  Label second;
  Coefficients expected;
  double max_deviation = 0.0;
  bool pass = false;

  [[nodiscard]] std::string pair_name() const {
    return std::string("[") + name(first) + "," + name(second) + "]";
  }
};

using GeneratorMatrices = std::array<Eigen::MatrixXcd, kGeneratorCount>;

/// Restricts a square matrix to the rows and columns listed in `keep`; an
/// empty list keeps everything.
inline Eigen::MatrixXcd restrict_to(const Eigen::MatrixXcd& m, const std::vector<int>& keep) {
  if (keep.empty()) return m;
  return m(keep, keep);
}

/// Checks every pair: the deviation is the largest entry of
/// [G_a, G_b] - sum_k c_k G_k with c taken from structure(), measured on the
/// `keep` block only (products are still formed in the full space).
inline std::vector<CommutatorReport> verify(const GeneratorMatrices& gens, double tolerance,
                                            const std::vector<int>& keep = {}) {
  std::vector<CommutatorReport> reports;
  reports.reserve(kPairCount);
  for (const auto& [a, b] : all_pairs()) {
    const auto& ga = gens[index(a)];
    const auto& gb = gens[index(b)];
    Eigen::MatrixXcd diff = ga * gb - gb * ga;
    const auto expected = structure(a, b);
    for (int k = 0; k < kGeneratorCount; ++k) {
      if (expected[k] != cplx{}) diff -= expected[k] * gens[k];
    }
    CommutatorReport r{a, b, expected, restrict_to(diff, keep).cwiseAbs().maxCoeff(), false};
    r.pass = r.max_deviation <= tolerance;
    reports.push_back(r);
  }
  return reports;
}

/// Least-squares expansion of `m` in the span of `gens` under the Frobenius
/// inner product.
inline Coefficients project(const Eigen::MatrixXcd& m, const GeneratorMatrices& gens) {
  Eigen::MatrixXcd gram(kGeneratorCount, kGeneratorCount);
  Eigen::VectorXcd rhs(kGeneratorCount);
  for (int i = 0; i < kGeneratorCount; ++i) {
    for (int j = 0; j < kGeneratorCount; ++j) gram(i, j) = gens[i].conjugate().cwiseProduct(gens[j]).sum();
    rhs(i) = gens[i].conjugate().cwiseProduct(m).sum();
  }
  const Eigen::VectorXcd sol = gram.fullPivLu().solve(rhs);
  Coefficients out{};
  for (int i = 0; i < kGeneratorCount; ++i) out[i] = sol(i);
  return out;
}

/// Structure constants of a representation: [G_a, G_b] projected onto the
/// generators, one entry per pair in all_pairs() order. Both the commutator
/// and the basis are restricted to `keep` before projecting.
inline std::vector<Coefficients> structure_constants(const GeneratorMatrices& gens,
                                                     const std::vector<int>& keep = {}) {
  GeneratorMatrices basis;
  for (int k = 0; k < kGeneratorCount; ++k) basis[k] = restrict_to(gens[k], keep);
  std::vector<Coefficients> out;
  out.reserve(kPairCount);
  for (const auto& [a, b] : all_pairs()) {
    const auto& ga = gens[index(a)];
    const auto& gb = gens[index(b)];
    out.push_back(project(restrict_to(ga * gb - gb * ga, keep), basis));
  }
  return out;
}

/// Largest coefficient gap between two structure-constant tables.
inline double max_difference(const std::vector<Coefficients>& x, const std::vector<Coefficients>& y) {
  double worst = 0.0;
  for (std::size_t p = 0; p < x.size() && p < y.size(); ++p) {
    for (int k = 0; k < kGeneratorCount; ++k) worst = std::max(worst, std::abs(x[p][k] - y[p][k]));
  }
  return worst;
}

}  // namespace lcho::algebra
