#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "spheregap/polynomial.hpp"
#include "spheregap/rational.hpp"

namespace spheregap {

// Ambient dimension d of the sphere S^{d-1}; d >= 2.
class Dimension {
 public:
  explicit Dimension(int d) : d_(d) {
    if (d < 2) throw std::invalid_argument("dimension must be >= 2 (got " + std::to_string(d) + ")");
  }
  int value() const { return d_; }
  friend bool operator==(Dimension a, Dimension b) { return a.d_ == b.d_; }
  friend auto operator<=>(Dimension a, Dimension b) { return a.d_ <=> b.d_; }

 private:
  int d_;
};

// Eigenvalue of minus the spherical Laplacian on order-ell harmonics.
struct Eigenvalue {
  unsigned ell;
  Dimension d;
  std::int64_t value;
};

inline Eigenvalue eigenvalue(unsigned ell, Dimension d) {
  const auto l = static_cast<std::int64_t>(ell);
  return {ell, d, l * (l + d.value() - 2)};
}

namespace detail {

// Incrementally grown table of exact P_0..P_n for one dimension. Elements of a deque
// keep their address on push_back, so references handed out stay valid.
class LegendreTable {
 public:
  explicit LegendreTable(int d) : d_(d) {
    polys_.push_back(DensePolynomial::constant(BigRational(1)));
    polys_.push_back(DensePolynomial::x());
  }

  const DensePolynomial& get(unsigned ell) {
    std::lock_guard lock(mutex_);
    while (polys_.size() <= ell) extend();
    return polys_[ell];
  }

 private:
  // (l+d-2) P_{l+1} = (2l+d-2) x P_l - l P_{l-1}
  void extend() {
    const long l = static_cast<long>(polys_.size()) - 1;
    const DensePolynomial& cur = polys_[l];
    const DensePolynomial& prev = polys_[l - 1];
    const BigRational a(2 * l + d_ - 2, l + d_ - 2);
    const BigRational b(l, l + d_ - 2);
    std::vector<BigRational> next(cur.size() + 1);
    for (std::size_t k = 0; k < cur.size(); ++k) next[k + 1] = a * cur.coefficients()[k];
    for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= b * prev.coefficients()[k];
    polys_.emplace_back(std::move(next));
  }

  int d_;
  std::mutex mutex_;
  std::deque<DensePolynomial> polys_;
};

inline LegendreTable& legendre_table(int d) {
  static std::mutex registry_mutex;
  static std::map<int, std::unique_ptr<LegendreTable>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[d];
  if (!slot) slot = std::make_unique<LegendreTable>(d);
  return *slot;
}

}  // namespace detail

// Exact dimension-d Legendre polynomial of degree ell, normalized so P(1) = 1.
// Memoized per dimension; safe to call from several threads.
inline const DensePolynomial& legendre_poly(unsigned ell, Dimension d) {
  return detail::legendre_table(d.value()).get(ell);
}

inline BigRational evaluate_exact(const DensePolynomial& p, const BigRational& x) { return p(x); }

// (lambda_{2(ell+1)} - lambda_{2 ell}) / lambda_2 = (4 ell + d) / d
inline BigRational gap_ratio(unsigned ell, Dimension d) {
  if (ell < 1) throw std::invalid_argument("gap_ratio requires ell >= 1");
  const auto hi = eigenvalue(2 * (ell + 1), d).value;
  const auto lo = eigenvalue(2 * ell, d).value;
  const auto base = eigenvalue(2, d).value;
  return BigRational(hi - lo, base);
}

inline DensePolynomial one_minus(const DensePolynomial& p) {
  return DensePolynomial::constant(BigRational(1)) - p;
}

// Defect of the adjacent-gap inequality:
//   G = gap_ratio * (1 - P_2) - (P_{2l} - P_{2l+2}).
inline DensePolynomial gap_polynomial(unsigned ell, Dimension d) {
  if (ell < 1) throw std::invalid_argument("gap_polynomial requires ell >= 1");
  const auto& p2 = legendre_poly(2, d);
  const auto& lo = legendre_poly(2 * ell, d);
  const auto& hi = legendre_poly(2 * (ell + 1), d);
  return gap_ratio(ell, d) * one_minus(p2) - (lo - hi);
}

// Defect of the cumulative inequality:
//   H = (lambda_{2l} / lambda_2) (1 - P_2) - (1 - P_{2l}).
inline DensePolynomial prop11_polynomial(unsigned ell, Dimension d) {
  if (ell < 1) throw std::invalid_argument("prop11_polynomial requires ell >= 1");
  const BigRational ratio(eigenvalue(2 * ell, d).value, eigenvalue(2, d).value);
  return ratio * one_minus(legendre_poly(2, d)) - one_minus(legendre_poly(2 * ell, d));
}

// Exact check of  gap_ratio * (1 - P_2(x)) == ((4l + d)/(d - 1)) (1 - x^2).
inline bool gap_scaling_identity(unsigned ell, Dimension d) {
  if (ell < 1) throw std::invalid_argument("gap_scaling_identity requires ell >= 1");
  const auto lhs = gap_ratio(ell, d) * one_minus(legendre_poly(2, d));
  const BigRational scale(4 * static_cast<long>(ell) + d.value(), d.value() - 1);
  const DensePolynomial one_minus_x2({BigRational(1), BigRational(0), BigRational(-1)});
  return lhs == scale * one_minus_x2;
}

// Forward three-term recurrence in binary64.
inline double evaluate_float(unsigned ell, Dimension d, double x) {
  if (!(std::abs(x) <= 1.0)) throw std::domain_error("evaluate_float requires |x| <= 1");
  if (ell == 0) return 1.0;
  const double dd = d.value();
  double prev = 1.0;
  double cur = x;
  for (unsigned l = 1; l < ell; ++l) {
    const double next = ((2.0 * l + dd - 2.0) * x * cur - l * prev) / (l + dd - 2.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

// (1 - P_ell(x)) / (1 - x), a polynomial of degree ell - 1, evaluated by its own
// recurrence  (l+d-2) q_{l+1} = (2l+d-2)(1 + x q_l) - l q_{l-1},  q_0 = 0, q_1 = 1.
// Avoids the cancellation in 1 - P_ell(x) near x = 1.
inline double legendre_defect_quotient(unsigned ell, Dimension d, double x) {
  if (ell == 0) return 0.0;
  const double dd = d.value();
  double prev = 0.0;
  double cur = 1.0;
  for (unsigned l = 1; l < ell; ++l) {
    const double next = ((2.0 * l + dd - 2.0) * (1.0 + x * cur) - l * prev) / (l + dd - 2.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace spheregap
