#pragma once

// Test-only reference computations, deliberately independent of the library's
// recurrence and Gauss–Jacobi paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "spheregap/polynomial.hpp"
#include "spheregap/rational.hpp"

namespace spheregap::oracle {

// Composite Simpson on [lo, hi] with `panels` (even) panels.
template <class F>
double simpson(F&& f, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double sum = f(lo) + f(hi);
  for (int k = 1; k < panels; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(lo + k * h);
  return sum * h / 3.0;
}

// Integral representation with s = sin(phi): the weight (1-s^2)^{(d-4)/2} ds becomes
// cos^{d-3}(phi) dphi, which is smooth, so plain Simpson converges fast. The normalizing
// constant is obtained by the same quadrature of the weight alone.
inline double brute_force_integral_legendre(unsigned ell, int d, double x, int panels = 4000) {
  const double root = std::sqrt(1.0 - x * x);
  auto weight = [d](double phi) { return std::pow(std::cos(phi), d - 3); };
  auto integrand = [&](double phi) {
    std::complex<double> z(x, std::sin(phi) * root), acc(1.0, 0.0);
    for (unsigned i = 0; i < ell; ++i) acc *= z;
    return acc.real() * weight(phi);
  };
  const double half = std::numbers::pi / 2;
  return simpson(integrand, -half, half, panels) / simpson(weight, -half, half, panels);
}

// A random polynomial assembled from factors with known real roots.
struct KnownRootPolynomial {
  DensePolynomial poly;
  std::vector<BigRational> rational_roots;  // distinct
  std::vector<long> sqrt_roots;             // c such that +-sqrt(c) are roots, c not a square

  // Distinct real roots in (a, b].
  int count_in(const BigRational& a, const BigRational& b) const {
    int n = 0;
    for (const auto& r : rational_roots)
      if (a < r && r <= b) ++n;
    for (long c : sqrt_roots) {
      const BigRational cc(c);
      // +sqrt(c) in (a, b]
      if ((a.sign() < 0 || a * a < cc) && b.sign() > 0 && b * b > cc) ++n;
      // -sqrt(c) in (a, b]
      if (a.sign() < 0 && a * a > cc && (b.sign() >= 0 || b * b < cc)) ++n;
    }
    return n;
  }
};

inline KnownRootPolynomial random_known_root_polynomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> factor_count(1, 6);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<long> num(-24, 24);
  std::uniform_int_distribution<long> den(1, 8);
  std::uniform_int_distribution<int> mult(1, 3);
  static const long non_squares[] = {2, 3, 5, 6, 7, 10};
  std::uniform_int_distribution<int> pick(0, 5);

  KnownRootPolynomial out;
  out.poly = DensePolynomial::constant(BigRational(num(rng) == 0 ? 3 : 2, 1 + den(rng)));
  std::set<long> used_sqrt;
  const int factors = factor_count(rng);
  for (int f = 0; f < factors; ++f) {
    DensePolynomial factor;
    switch (kind(rng)) {
      case 0:
      case 1: {
        const BigRational r(num(rng), den(rng));
        factor = DensePolynomial({-r, BigRational(1)});
        if (std::find(out.rational_roots.begin(), out.rational_roots.end(), r) == out.rational_roots.end())
          out.rational_roots.push_back(r);
        break;
      }
      case 2: {  // x^2 + c, c > 0: no real roots
        factor = DensePolynomial({BigRational(1 + std::abs(num(rng)), den(rng)), BigRational(0), BigRational(1)});
        break;
      }
      default: {  // x^2 - c, roots +-sqrt(c)
        const long c = non_squares[pick(rng)];
        factor = DensePolynomial({BigRational(-c), BigRational(0), BigRational(1)});
        used_sqrt.insert(c);
        break;
      }
    }
    const int m = mult(rng);
    for (int k = 0; k < m; ++k) out.poly = out.poly * factor;
  }
  out.sqrt_roots.assign(used_sqrt.begin(), used_sqrt.end());
  return out;
}

}  // namespace spheregap::oracle
