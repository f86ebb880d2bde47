#pragma once

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace spheregap {

// Surface area of the unit sphere S^p in R^{p+1}: 2 pi^{(p+1)/2} / Gamma((p+1)/2).
inline double omega(unsigned p) {
  const double h = 0.5 * (p + 1);
  return 2.0 * std::exp(h * std::log(std::numbers::pi) - std::lgamma(h));
}

// Gauss rule for the weight (1-t)^a (1+t)^b on [-1, 1].
struct JacobiRule {
  double a = 0.0;
  double b = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) sum += weights[j] * f(nodes[j]);
    return sum;
  }
};

// Symmetric Gauss–Jacobi rule for (1-s^2)^alpha.
struct QuadratureRule {
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) sum += weights[j] * f(nodes[j]);
    return sum;
  }
};

// Integral of (1-t)^a (1+t)^b over [-1, 1].
inline double jacobi_mass(double a, double b) {
  return std::exp((a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                  std::lgamma(a + b + 2.0));
}

// Integral of (1-s^2)^alpha over [-1, 1]:  sqrt(pi) Gamma(alpha+1) / Gamma(alpha+3/2).
inline double symmetric_mass(double alpha) {
  return std::exp(0.5 * std::log(std::numbers::pi) + std::lgamma(alpha + 1.0) - std::lgamma(alpha + 1.5));
}

namespace detail {

// Golub–Welsch: nodes are eigenvalues of the Jacobi matrix of the monic recurrence,
// weights are mass * (first eigenvector component)^2.
inline JacobiRule golub_welsch(unsigned n, double a, double b) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  const double ab = a + b;
  for (unsigned k = 0; k < n; ++k) {
    if (k == 0) {
      diag(k) = (b - a) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      diag(k) = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (unsigned k = 1; k < n; ++k) {
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      const double s = 2.0 * k + ab;
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    sub(k - 1) = std::sqrt(beta);
  }
  JacobiRule rule{a, b, std::vector<double>(n), std::vector<double>(n)};
  const double mass = jacobi_mass(a, b);
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mass;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Gauss-Jacobi eigenvalue solve failed");

  // The eigenvector route loses relative accuracy in the tiny endpoint weights, so nodes are
  // polished by Newton on the orthonormal p_n and weights taken from 1 / sum_k p_k(x)^2.
  auto orthonormal = [&](double x, double& pn, double& dpn, double& christoffel) {
    double p_prev = 0.0, p = 1.0 / std::sqrt(mass);
    double d_prev = 0.0, dp = 0.0;
    christoffel = p * p;
    for (unsigned k = 0; k < n; ++k) {
      const double bk = k == 0 ? 0.0 : sub(k - 1);
      const double bk1 = k + 1 < n ? sub(k) : 1.0;
      const double p_next = ((x - diag(k)) * p - bk * p_prev) / bk1;
      const double d_next = ((x - diag(k)) * dp + p - bk * d_prev) / bk1;
      p_prev = p;
      p = p_next;
      d_prev = dp;
      dp = d_next;
      if (k + 1 < n) christoffel += p * p;
    }
    pn = p;
    dpn = dp;
  };
  for (unsigned j = 0; j < n; ++j) {
    double x = solver.eigenvalues()(j);
    double pn, dpn, ch;
    for (int it = 0; it < 3; ++it) {
      orthonormal(x, pn, dpn, ch);
      if (dpn == 0.0) break;
      x -= pn / dpn;
    }
    orthonormal(x, pn, dpn, ch);
    rule.nodes[j] = x;
    rule.weights[j] = 1.0 / ch;
  }
  return rule;
}

inline JacobiRule chebyshev_gauss(unsigned n) {
  JacobiRule rule{-0.5, -0.5, std::vector<double>(n), std::vector<double>(n, std::numbers::pi / n)};
  // ascending order
  for (unsigned k = 1; k <= n; ++k) rule.nodes[n - k] = std::cos(std::numbers::pi * (2.0 * k - 1.0) / (2.0 * n));
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace detail

// Gauss rule for (1-t)^a (1+t)^b, cached per (n, a, b). a = b = -1/2 uses the closed-form
// Chebyshev–Gauss rule.
inline const JacobiRule& jacobi_rule(unsigned n, double a, double b) {
  if (n < 1) throw std::invalid_argument("quadrature rule needs n >= 1");
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("Jacobi exponents must exceed -1 (weight not integrable)");
  static std::mutex mutex;
  static std::map<std::tuple<unsigned, double, double>, std::unique_ptr<JacobiRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, a, b}];
  if (!slot) {
    if (a == -0.5 && b == -0.5) {
      slot = std::make_unique<JacobiRule>(detail::chebyshev_gauss(n));
    } else {
      auto rule = detail::golub_welsch(n, a, b);
      if (a == b) {
        // symmetrize: nodes come in +- pairs and the middle node of an odd rule is 0
        for (unsigned j = 0; j < n / 2; ++j) {
          const double x = 0.5 * (rule.nodes[n - 1 - j] - rule.nodes[j]);
          const double w = 0.5 * (rule.weights[n - 1 - j] + rule.weights[j]);
          rule.nodes[j] = -x;
          rule.nodes[n - 1 - j] = x;
          rule.weights[j] = rule.weights[n - 1 - j] = w;
        }
        if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
      }
      slot = std::make_unique<JacobiRule>(std::move(rule));
    }
  }
  return *slot;
}

inline QuadratureRule gauss_jacobi_rule(unsigned n, double alpha) {
  const auto& r = jacobi_rule(n, alpha, alpha);
  return {alpha, r.nodes, r.weights};
}

}  // namespace spheregap
