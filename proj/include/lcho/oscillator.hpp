#pragma once

// The covariant harmonic oscillator in the longitudinal/time-like plane:
// squeeze boosts in light-cone coordinates, boosted wave functions in
// position and momentum space, the two-mode expansion of the boosted ground
// state, and Lorentz-invariant uncertainty products.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "lcho/errors.hpp"
#include "lcho/specfun.hpp"

namespace lcho {

/// Boost parameter eta; the boost velocity is tanh(eta).
class Rapidity {
 public:
  constexpr Rapidity() = default;
  constexpr explicit Rapidity(double eta) : eta_(eta) {}

  [[nodiscard]] constexpr double value() const { return eta_; }
  [[nodiscard]] double velocity() const { return std::tanh(eta_); }
  [[nodiscard]] constexpr Rapidity operator-() const { return Rapidity(-eta_); }

 private:
  double eta_ = 0.0;
};

/// Dirac light-cone coordinates z_pm = (z pm t)/sqrt(2).
struct LightConePoint {
  double z_plus = 0.0;
  double z_minus = 0.0;

  static LightConePoint from(double z, double t) {
    return {(z + t) / std::numbers::sqrt2, (z - t) / std::numbers::sqrt2};
  }
  /// z_+ z_- = (z^2 - t^2)/2, the boost invariant.
  [[nodiscard]] double product() const { return z_plus * z_minus; }
};

struct SpaceTimePoint {
  double z = 0.0;
  double t = 0.0;
};

namespace oscillator {

inline constexpr double kInvSqrtPi = 0.56418958354775628;  // 1/sqrt(pi)

/// Replaces (z, t) by (z cosh eta - t sinh eta, t cosh eta - z sinh eta);
/// z + t shrinks by exp(-eta) and z - t grows by exp(eta).
inline SpaceTimePoint boost_coords(double z, double t, Rapidity eta) {
  const double c = std::cosh(eta.value());
  const double s = std::sinh(eta.value());
  return {c * z - s * t, c * t - s * z};
}

/// Normalized boosted wave function with n longitudinal excitations and the
/// time-like mode in its ground state, written in light-cone form:
///   psi = N_n H_n([e^{-eta}(z+t) + e^{eta}(z-t)]/2)
///         exp(-[e^{-2eta}(z+t)^2 + e^{2eta}(z-t)^2]/4),
/// with N_n = (pi 2^n n!)^{-1/2}. The boost has unit Jacobian so the norm of
/// the unboosted product phi_n(z) phi_0(t) carries over unchanged.
inline double psi(int n, Rapidity eta, double z, double t) {
  if (n < 0 || n > specfun::kMaxDegree) {
    throw invalid_degree("psi: degree " + std::to_string(n) + " out of range");
  }
  const double ep = std::exp(eta.value());
  const double em = 1.0 / ep;
  const double sum = z + t;
  const double diff = z - t;
  const double gauss = -0.25 * (em * em * sum * sum + ep * ep * diff * diff);
  if (n == 0) return kInvSqrtPi * std::exp(gauss);
  const double arg = 0.5 * (em * sum + ep * diff);
  // Route through phi_n so large degrees stay finite; phi_n already carries
  // exp(-arg^2/2) and pi^{-1/4}, the remainder is the time-like ground state.
  const double tau = 0.5 * (em * sum - ep * diff);
  return specfun::phi(n, arg) * std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * tau * tau);
}

/// Analytically evaluable boosted oscillator state.
class ClosedFormWaveFn {
 public:
  ClosedFormWaveFn(int n, Rapidity eta) : n_(n), eta_(eta) {
    if (n < 0 || n > specfun::kMaxDegree) throw invalid_degree("ClosedFormWaveFn: bad degree");
  }
  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] Rapidity eta() const { return eta_; }
  [[nodiscard]] double operator()(double z, double t) const { return psi(n_, eta_, z, t); }

 private:
  int n_;
  Rapidity eta_;
};

/// Momentum-energy wave function of the boosted ground state,
///   (1/pi)^{1/2} exp(-[e^{-2eta} q_+^2 + e^{2eta} q_-^2]/2),
/// with q_pm = (q_0 pm q_z)/sqrt 2.
class MomentumWaveFn {
 public:
  explicit MomentumWaveFn(Rapidity eta) : eta_(eta) {}
  [[nodiscard]] Rapidity eta() const { return eta_; }
  [[nodiscard]] double operator()(double q_z, double q_0) const {
    const double q_plus = (q_0 + q_z) / std::numbers::sqrt2;
    const double q_minus = (q_0 - q_z) / std::numbers::sqrt2;
    const double e2 = std::exp(2.0 * eta_.value());
    return kInvSqrtPi * std::exp(-0.5 * (q_plus * q_plus / e2 + e2 * q_minus * q_minus));
  }

 private:
  Rapidity eta_;
};

/// A_n = tanh^n(eta) / cosh(eta) for n = 0..max_n.
inline std::vector<double> expansion_coefficients(Rapidity eta, int max_n) {
  if (max_n < 0) throw invalid_argument("expansion_coefficients: max_n must be >= 0");
  std::vector<double> coeffs(static_cast<std::size_t>(max_n) + 1);
  const double ratio = std::tanh(eta.value());
  double term = 1.0 / std::cosh(eta.value());
  for (auto& c : coeffs) {
    c = term;
    term *= ratio;
  }
  return coeffs;
}

/// Largest pointwise gap between the closed-form boosted ground state and its
/// truncated expansion sum_{n<=max_n} A_n phi_n(z) phi_n(t) over the grid.
inline double verify_expansion(Rapidity eta, int max_n, std::span<const SpaceTimePoint> grid) {
  if (grid.empty()) throw invalid_argument("verify_expansion: empty grid");
  const auto coeffs = expansion_coefficients(eta, max_n);
  double worst = 0.0;
  for (const auto& p : grid) {
    double series = 0.0;
    for (int n = 0; n <= max_n; ++n) {
      series += coeffs[n] * specfun::phi(n, p.z) * specfun::phi(n, p.t);
    }
    worst = std::max(worst, std::abs(psi(0, eta, p.z, p.t) - series));
  }
  return worst;
}

/// Square grid of points with |z|, |t| <= extent and the given spacing.
inline std::vector<SpaceTimePoint> square_grid(double extent, double step) {
  if (!(step > 0.0) || !(extent >= 0.0)) throw invalid_argument("square_grid: bad extent/step");
  const int half = static_cast<int>(std::floor(extent / step + 1e-9));
  std::vector<SpaceTimePoint> grid;
  grid.reserve(static_cast<std::size_t>((2 * half + 1) * (2 * half + 1)));
  for (int i = -half; i <= half; ++i) {
    for (int j = -half; j <= half; ++j) grid.push_back({i * step, j * step});
  }
  return grid;
}

namespace detail {

/// Tensor Gauss-Hermite rule laid along the light-cone axes of a state
/// squeezed by eta: z_+ = width e^{eta} u, z_- = width e^{-eta} v. With
/// width sqrt2 the boosted ground state's envelope becomes exp(-u^2 - v^2);
/// with width 1 its square does. `integrand` receives (z, t) and carries its
/// own Gaussian factor; the rule's weight is divided back out.
template <class F>
double light_cone_quadrature(Rapidity eta, const specfun::QuadratureRule& rule, double width,
                             F&& integrand) {
  const double ep = std::exp(eta.value());
  const double em = 1.0 / ep;
  double sum = 0.0;
  for (int i = 0; i < rule.count(); ++i) {
    const double u = rule.nodes[i];
    for (int j = 0; j < rule.count(); ++j) {
      const double v = rule.nodes[j];
      const double expo = u * u + v * v;
      if (expo > 700.0) continue;  // weight product below 1e-300
      const double z_plus = width * ep * u;
      const double z_minus = width * em * v;
      const double z = (z_plus + z_minus) / std::numbers::sqrt2;
      const double t = (z_plus - z_minus) / std::numbers::sqrt2;
      sum += rule.weights[i] * rule.weights[j] * std::exp(expo) * integrand(z, t);
    }
  }
  return width * width * sum;
}

}  // namespace detail

/// Fourier transform (1/2pi) int psi_0,eta(z,t) exp(i[q_z z - q_0 t]) dz dt.
///
/// Evaluated with `nodes` and 2*nodes per axis; throws if the two disagree by
/// more than 1e-6. The sine part vanishes by parity and is not accumulated.
inline double momentum_wavefn_via_fourier(Rapidity eta, double q_z, double q_0,
                                          int nodes = specfun::kDefaultNodes) {
  auto evaluate = [&](int count) {
    const auto rule = specfun::gauss_hermite(count);
    return detail::light_cone_quadrature(eta, rule, std::numbers::sqrt2, [&](double z, double t) {
             return psi(0, eta, z, t) * std::cos(q_z * z - q_0 * t);
           }) /
           (2.0 * std::numbers::pi);
  };
  const double coarse = evaluate(nodes);
  const double fine = evaluate(2 * nodes);
  if (std::abs(coarse - fine) > 1e-6) {
    throw quadrature_nonconvergence("momentum_wavefn_via_fourier: node doubling changed result by " +
                                    std::to_string(std::abs(coarse - fine)));
  }
  return coarse;
}

/// Light-cone second moments of the boosted ground state and of its
/// momentum-energy partner, with the two conjugate uncertainty products.
struct UncertaintyReport {
  double mean_zplus_sq = 0.0;
  double mean_zminus_sq = 0.0;
  double mean_qplus_sq = 0.0;
  double mean_qminus_sq = 0.0;

  /// <z_+^2><q_-^2>
  [[nodiscard]] double plus_minus_product() const { return mean_zplus_sq * mean_qminus_sq; }
  /// <z_-^2><q_+^2>
  [[nodiscard]] double minus_plus_product() const { return mean_zminus_sq * mean_qplus_sq; }
};

inline UncertaintyReport uncertainty_products(Rapidity eta, int nodes = 32) {
  const auto rule = specfun::gauss_hermite(nodes);
  const MomentumWaveFn momentum(eta);
  auto density = [&](double z, double t) {
    const double v = psi(0, eta, z, t);
    return v * v;
  };
  auto momentum_density = [&](double q_z, double q_0) {
    const double v = momentum(q_z, q_0);
    return v * v;
  };
  UncertaintyReport r;
  r.mean_zplus_sq = detail::light_cone_quadrature(eta, rule, 1.0, [&](double z, double t) {
    const auto lc = LightConePoint::from(z, t);
    return lc.z_plus * lc.z_plus * density(z, t);
  });
  r.mean_zminus_sq = detail::light_cone_quadrature(eta, rule, 1.0, [&](double z, double t) {
    const auto lc = LightConePoint::from(z, t);
    return lc.z_minus * lc.z_minus * density(z, t);
  });
  // q_pm = (q_0 pm q_z)/sqrt2, so (q_0, q_z) play the roles of (z, t).
  r.mean_qplus_sq = detail::light_cone_quadrature(eta, rule, 1.0, [&](double q_0, double q_z) {
    const double q_plus = (q_0 + q_z) / std::numbers::sqrt2;
    return q_plus * q_plus * momentum_density(q_z, q_0);
  });
  r.mean_qminus_sq = detail::light_cone_quadrature(eta, rule, 1.0, [&](double q_0, double q_z) {
    const double q_minus = (q_0 - q_z) / std::numbers::sqrt2;
    return q_minus * q_minus * momentum_density(q_z, q_0);
  });
  return r;
}

/// Integral of |psi_{n,eta}|^2 over the plane. Along the squeezed light-cone
/// axes the density is a polynomial times exp(-u^2 - v^2), so the rule is
/// exact once nodes > n.
inline double norm_by_quadrature(int n, Rapidity eta, int nodes = 32) {
  const auto rule = specfun::gauss_hermite(nodes);
  return detail::light_cone_quadrature(eta, rule, 1.0, [&](double z, double t) {
    const double v = psi(n, eta, z, t);
    return v * v;
  });
}

/// Outcome of applying the invariant oscillator operator on a grid.
struct EigenCheck {
  double residual = 0.0;    ///< max |Op psi - n psi| over interior points
  double eigenvalue = 0.0;  ///< Rayleigh quotient <psi, Op psi>/<psi, psi>
};

/// Applies (1/2)(-d^2/dz^2 + d^2/dt^2 + z^2 - t^2) to psi_{n,eta} with
/// 3-point central differences per axis on |z|, |t| <= 6.
inline EigenCheck eigenvalue_residual(int n, Rapidity eta, double grid_spacing) {
  if (!(grid_spacing > 0.0) || grid_spacing > 0.1) {
    throw invalid_argument("eigenvalue_residual: grid_spacing must lie in (0, 0.1]");
  }
  constexpr double kExtent = 6.0;
  const double h = grid_spacing;
  const int half = static_cast<int>(std::floor(kExtent / h + 1e-9));
  const int size = 2 * half + 1;
  std::vector<double> values(static_cast<std::size_t>(size) * size);
  auto at = [&](int i, int j) -> double& { return values[static_cast<std::size_t>(i) * size + j]; };
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) at(i, j) = psi(n, eta, (i - half) * h, (j - half) * h);
  }
  const double inv_h2 = 1.0 / (h * h);
  EigenCheck out;
  double num = 0.0;
  double den = 0.0;
  for (int i = 1; i + 1 < size; ++i) {
    const double z = (i - half) * h;
    for (int j = 1; j + 1 < size; ++j) {
      const double t = (j - half) * h;
      const double f = at(i, j);
      const double d2z = (at(i + 1, j) - 2.0 * f + at(i - 1, j)) * inv_h2;
      const double d2t = (at(i, j + 1) - 2.0 * f + at(i, j - 1)) * inv_h2;
      const double applied = 0.5 * (-d2z + d2t + (z * z - t * t) * f);
      out.residual = std::max(out.residual, std::abs(applied - n * f));
      num += f * applied;
      den += f * f;
    }
  }
  out.eigenvalue = num / den;
  return out;
}

}  // namespace oscillator
}  // namespace lcho
