#pragma once

// Proton form factors from the boosted oscillator: the Breit-frame overlap of
// initial and final ground states, its closed forms for two and three quarks,
// and the non-relativistic exponential cut-off it replaces.
//
// Q^2 is measured in the same units as M^2 and the oscillator length is
// tied to 1/M, so the phase momentum inside the overlap integral is P/M.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "lcho/errors.hpp"
#include "lcho/oscillator.hpp"
#include "lcho/specfun.hpp"

namespace lcho::formfactor {

struct Kinematics {
  double q_squared = 0.0;
  double proton_mass = 1.0;

  Kinematics(double q2, double mass) : q_squared(q2), proton_mass(mass) {
    if (!(q2 >= 0.0)) throw invalid_argument("Kinematics: Q^2 must be >= 0");
    if (!(mass > 0.0)) throw invalid_argument("Kinematics: proton mass must be > 0");
  }

  /// tanh^2(eta) = Q^2 / (Q^2 + 4M^2)
  [[nodiscard]] double tanh_sq() const {
    return q_squared / (q_squared + 4.0 * proton_mass * proton_mass);
  }
  /// Breit-frame z-momentum of the incoming proton, Q^2 = 4P^2.
  [[nodiscard]] double momentum() const { return 0.5 * std::sqrt(q_squared); }
};

inline Rapidity eta_of_q2(double q_squared, double proton_mass) {
  const Kinematics k(q_squared, proton_mass);
  return Rapidity(std::atanh(std::sqrt(k.tanh_sq())));
}

/// psi_{-eta}(z,t) psi_{eta}(z,t) = (1/pi) exp(-cosh(2 eta)(z^2 + t^2)).
inline double overlap_product(Rapidity eta, double z, double t) {
  return std::exp(-std::cosh(2.0 * eta.value()) * (z * z + t * t)) / std::numbers::pi;
}

/// Two-quark form factor
///   g(Q^2) = 2M^2/(Q^2 + 2M^2) exp(-Q^2 / (2(Q^2 + 2M^2))).
inline double g_closed_form(double q_squared, double proton_mass) {
  const Kinematics k(q_squared, proton_mass);
  const double two_m2 = 2.0 * proton_mass * proton_mass;
  const double denom = q_squared + two_m2;
  return two_m2 / denom * std::exp(-q_squared / (2.0 * denom));
}

/// Three-quark form factor, a product of two oscillator modes:
///   F(Q^2) = (2M^2/(Q^2 + 2M^2))^2 exp(-Q^2 / (Q^2 + 2M^2)).
inline double f_three_quark(double q_squared, double proton_mass) {
  const Kinematics k(q_squared, proton_mass);
  const double two_m2 = 2.0 * proton_mass * proton_mass;
  const double denom = q_squared + two_m2;
  const double ratio = two_m2 / denom;
  return ratio * ratio * std::exp(-q_squared / denom);
}

/// Form factor of the unboosted (non-relativistic) oscillator, exp(-Q^2/4).
inline double g_nonrelativistic(double q_squared) {
  if (!(q_squared >= 0.0)) throw invalid_argument("g_nonrelativistic: Q^2 must be >= 0");
  return std::exp(-0.25 * q_squared);
}

/// exp(-2 eta): interaction time of the quarks relative to the parton time.
inline double time_dilation_ratio(Rapidity eta) { return std::exp(-2.0 * eta.value()); }

/// (1/sqrt(pi cosh 2eta)) int exp(-2iPz) exp(-cosh(2eta) z^2) dz by an
/// n-point Gauss-Hermite rule, kept complex so the sine part can be checked.
inline std::complex<double> overlap_integral(double q_squared, double proton_mass, int nodes) {
  const Kinematics k(q_squared, proton_mass);
  const double c = std::cosh(2.0 * eta_of_q2(q_squared, proton_mass).value());
  const double phase_momentum = k.momentum() / proton_mass;
  // z = u / sqrt(c) turns the envelope into the rule's weight exp(-u^2).
  const double scale = 1.0 / std::sqrt(c);
  const auto rule = specfun::gauss_hermite(nodes);
  double re = 0.0;
  double im = 0.0;
  for (int i = 0; i < rule.count(); ++i) {
    const double arg = 2.0 * phase_momentum * rule.nodes[i] * scale;
    re += rule.weights[i] * std::cos(arg);
    im -= rule.weights[i] * std::sin(arg);
  }
  const double prefactor = scale / std::sqrt(std::numbers::pi * c);
  return {prefactor * re, prefactor * im};
}

/// Real part of overlap_integral, after checking that the imaginary part
/// vanishes (|Im| < 1e-12) and that doubling the node count moves the result
/// by no more than 1e-9.
inline double g_by_quadrature(double q_squared, double proton_mass, int nodes = specfun::kDefaultNodes) {
  if (nodes < 32) throw invalid_argument("g_by_quadrature: need at least 32 nodes");
  const auto coarse = overlap_integral(q_squared, proton_mass, nodes);
  if (std::abs(coarse.imag()) >= 1e-12) {
    throw quadrature_nonconvergence("g_by_quadrature: imaginary part " +
                                    std::to_string(coarse.imag()) + " does not vanish");
  }
  const auto fine = overlap_integral(q_squared, proton_mass, 2 * nodes);
  if (std::abs(coarse.real() - fine.real()) > 1e-9) {
    throw quadrature_nonconvergence("g_by_quadrature: node doubling disagreement");
  }
  return coarse.real();
}

enum class Variant { two_quark_g, three_quark_f, nonrelativistic };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::two_quark_g: return "two-quark-g";
    case Variant::three_quark_f: return "three-quark-F";
    case Variant::nonrelativistic: return "nonrelativistic";
  }
  return "?";
}

struct Sample {
  double q_squared;
  double value;
};

struct FormFactorCurve {
  Variant variant;
  std::vector<Sample> samples;
};

inline double evaluate(Variant v, double q_squared, double proton_mass) {
  switch (v) {
    case Variant::two_quark_g: return g_closed_form(q_squared, proton_mass);
    case Variant::three_quark_f: return f_three_quark(q_squared, proton_mass);
    case Variant::nonrelativistic: return g_nonrelativistic(q_squared / (proton_mass * proton_mass));
  }
  return 0.0;
}

/// Samples a curve at the given momentum transfers.
inline FormFactorCurve sample_curve(Variant v, const std::vector<double>& q_squared, double proton_mass) {
  FormFactorCurve curve{v, {}};
  curve.samples.reserve(q_squared.size());
  for (double q2 : q_squared) curve.samples.push_back({q2, evaluate(v, q2, proton_mass)});
  return curve;
}

}  // namespace lcho::formfactor
