#pragma once

#include <cmath>
#include <algorithm>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "spheregap/legendre.hpp"
#include "spheregap/quadrature.hpp"

// Leading coefficient of the F(s, x) bound is 4*ell + SPHEREGAP_F_BOUND_SLACK. Only the
// mutation test build overrides this.
#ifndef SPHEREGAP_F_BOUND_SLACK
#define SPHEREGAP_F_BOUND_SLACK 2
#endif

namespace spheregap {

// z = x + i s sqrt(1 - x^2)
struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;

  static ComplexPoint from_xs(double x, double s) { return {x, s * std::sqrt(std::max(0.0, 1.0 - x * x))}; }
  std::complex<double> value() const { return {re, im}; }
  double norm2() const { return re * re + im * im; }
};

// z^k by repeated multiplication; error grows linearly in k.
inline std::complex<double> power(std::complex<double> z, unsigned k) {
  std::complex<double> acc{1.0, 0.0};
  for (unsigned i = 0; i < k; ++i) acc *= z;
  return acc;
}

inline unsigned default_integral_nodes(unsigned ell) { return ell + 10; }

// P_ell(x) through the integral representation
//   (omega_{d-3} / omega_{d-2}) * int_{-1}^{1} Re (x + i s sqrt(1-x^2))^ell (1-s^2)^{(d-4)/2} ds.
// The imaginary part is odd in s and integrates to zero.
inline double integral_eval(unsigned ell, Dimension d, double x, unsigned n) {
  if (d.value() < 3) throw std::invalid_argument("integral representation needs d >= 3; use chebyshev_eval for d = 2");
  if (!(std::abs(x) <= 1.0)) throw std::domain_error("integral_eval requires |x| <= 1");
  if (n < (ell + 1) / 2 + 1) throw std::invalid_argument("integral_eval: too few nodes to integrate degree ell exactly");
  const auto& rule = jacobi_rule(n, 0.5 * (d.value() - 4), 0.5 * (d.value() - 4));
  const double prefactor = omega(d.value() - 3) / omega(d.value() - 2);
  const double sum = rule.integrate([&](double s) { return power(ComplexPoint::from_xs(x, s).value(), ell).real(); });
  return prefactor * sum;
}

inline double integral_eval(unsigned ell, Dimension d, double x) {
  return integral_eval(ell, d, x, default_integral_nodes(ell));
}

// d = 2: P_ell(cos theta) = cos(ell theta).
inline double chebyshev_eval(unsigned ell, double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw std::domain_error("chebyshev_eval requires theta in [0, pi]");
  return std::cos(ell * theta);
}

// (2l+1)|sin theta| - |sin((2l+1) theta)|
inline double sine_ineq_check(unsigned ell, double theta) {
  const double m = 2.0 * ell + 1.0;
  return m * std::abs(std::sin(theta)) - std::abs(std::sin(m * theta));
}

struct UnitCaseDefects {
  // (2l+1)(1 - cos 2t) - (cos 2lt - cos 2(l+1)t)
  double cosine_form = 0.0;
  // (2l+1) sin^2 t - (sin^2 (l+1)t - sin^2 lt); half of cosine_form
  double sine_squared_form = 0.0;
};

inline UnitCaseDefects unit_case_checks(unsigned ell, double theta) {
  const double m = 2.0 * ell + 1.0;
  const double l = ell;
  UnitCaseDefects out;
  out.cosine_form = m * (1.0 - std::cos(2.0 * theta)) - (std::cos(2.0 * l * theta) - std::cos(2.0 * (l + 1.0) * theta));
  const double s1 = std::sin(theta), sl = std::sin(l * theta), sl1 = std::sin((l + 1.0) * theta);
  out.sine_squared_form = m * s1 * s1 - (sl1 * sl1 - sl * sl);
  return out;
}

// (2l+1) s^2 (1-x^2) - ((Im z^{l+1})^2 - (Im z^l)^2)
inline double lemma22_check(unsigned ell, double x, double s) {
  const auto z = ComplexPoint::from_xs(x, s).value();
  const auto zl = power(z, ell);
  const auto zl1 = zl * z;
  const double lhs = zl1.imag() * zl1.imag() - zl.imag() * zl.imag();
  return (2.0 * ell + 1.0) * s * s * (1.0 - x * x) - lhs;
}

struct FBoundDefects {
  // bound - F(s, x), F = Re(z^{2l} - z^{2l+2})
  double defect = 0.0;
  // worst |Re w^2 - (|w|^2 - 2 (Im w)^2)| over w = z^l, z^{l+1}
  double identity_residual = 0.0;
};

inline double f_bound(unsigned ell, double x, double s) {
  const double one_minus_x2 = 1.0 - x * x;
  return (4.0 * ell + SPHEREGAP_F_BOUND_SLACK) * s * s * one_minus_x2 + one_minus_x2 * (1.0 - s * s);
}

inline FBoundDefects F_bound_check(unsigned ell, double x, double s) {
  const auto z = ComplexPoint::from_xs(x, s).value();
  const auto zl = power(z, ell);
  const auto zl1 = zl * z;
  const auto z2l = power(z, 2 * ell);
  const auto z2l2 = z2l * z * z;
  const double F = (z2l - z2l2).real();
  FBoundDefects out;
  out.defect = f_bound(ell, x, s) - F;
  auto residual = [](std::complex<double> w, std::complex<double> w2) {
    return std::abs(w2.real() - (std::norm(w) - 2.0 * w.imag() * w.imag()));
  };
  out.identity_residual = std::max(residual(zl, z2l), residual(zl1, z2l2));
  return out;
}

// |z|^2 computed directly and as x^2 + s^2(1-x^2) agree, and both are <= 1.
inline bool modulus_check(double x, double s) {
  const double direct = ComplexPoint::from_xs(x, s).norm2();
  const double closed = x * x + s * s * (1.0 - x * x);
  constexpr double tol = 1e-14;
  return std::abs(direct - closed) <= tol && direct <= 1.0 + tol && closed <= 1.0 + tol;
}

// Integral of the F(s, x) bound against the Lemma weight with the omega prefactor;
// analytically ((4l+d)/(d-1)) (1-x^2).
inline double integrated_f_bound(unsigned ell, Dimension d, double x, unsigned n) {
  if (d.value() < 3) throw std::invalid_argument("integrated_f_bound needs d >= 3");
  const auto& rule = jacobi_rule(n, 0.5 * (d.value() - 4), 0.5 * (d.value() - 4));
  const double prefactor = omega(d.value() - 3) / omega(d.value() - 2);
  return prefactor * rule.integrate([&](double s) { return f_bound(ell, x, s); });
}

}  // namespace spheregap
