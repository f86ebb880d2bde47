#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spheregap/rational.hpp"

namespace spheregap {

// Exact univariate polynomial over BigRational, coefficients ascending by degree.
// The zero polynomial has no stored coefficients; otherwise the top coefficient is nonzero.
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  DensePolynomial(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

  static DensePolynomial constant(const BigRational& c) { return DensePolynomial({c}); }
  static DensePolynomial monomial(const BigRational& c, std::size_t degree) {
    std::vector<BigRational> v(degree + 1);
    v[degree] = c;
    return DensePolynomial(std::move(v));
  }
  static DensePolynomial x() { return DensePolynomial({BigRational(0), BigRational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  BigRational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }
  const BigRational& leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  // Horner evaluation, exact.
  BigRational operator()(const BigRational& x) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  double evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
  }

  DensePolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * BigRational(static_cast<long>(k));
    return DensePolynomial(std::move(d));
  }

  // p(-x)
  DensePolynomial reflected() const {
    auto c = coeffs_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return DensePolynomial(std::move(c));
  }

  bool is_even() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
      if (!coeffs_[k].is_zero()) return false;
    return true;
  }
  bool is_odd() const {
    for (std::size_t k = 0; k < coeffs_.size(); k += 2)
      if (!coeffs_[k].is_zero()) return false;
    return true;
  }

  DensePolynomial& operator+=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  DensePolynomial& operator-=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  DensePolynomial& operator*=(const BigRational& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }
  friend DensePolynomial operator-(DensePolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend DensePolynomial operator*(DensePolynomial a, const BigRational& s) { return a *= s; }
  friend DensePolynomial operator*(const BigRational& s, DensePolynomial a) { return a *= s; }
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePolynomial(std::move(out));
  }

  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const DensePolynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = p.coeffs_.size(); k-- > 0;) {
      if (p.coeffs_[k].is_zero()) continue;
      if (!first) os << " + ";
      os << "(" << p.coeffs_[k] << ")";
      if (k >= 1) os << "*x";
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

struct DivisionResult {
  DensePolynomial quotient;
  DensePolynomial remainder;
};

// Euclidean division over Q: num = quotient * den + remainder, deg remainder < deg den.
inline DivisionResult divide(const DensePolynomial& num, const DensePolynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {{}, num};
  std::vector<BigRational> rem = num.coefficients();
  const auto dn = static_cast<std::size_t>(den.degree());
  const auto& dc = den.coefficients();
  std::vector<BigRational> quot(rem.size() - dn);
  const BigRational lead = den.leading();
  for (std::size_t k = rem.size(); k-- > dn;) {
    if (rem[k].is_zero()) continue;
    const BigRational q = rem[k] / lead;
    quot[k - dn] = q;
    for (std::size_t j = 0; j <= dn; ++j) rem[k - dn + j] -= q * dc[j];
  }
  rem.resize(dn);
  return {DensePolynomial(std::move(quot)), DensePolynomial(std::move(rem))};
}

namespace detail {

// Integer-coefficient polynomial, ascending; used for the PRS and sign evaluation hot paths.
using IntPoly = std::vector<mpz_class>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Positive rational multiple of p with coprime integer coefficients.
inline IntPoly primitive_part(const DensePolynomial& p) {
  IntPoly out;
  if (p.is_zero()) return out;
  mpz_class lcm_den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
  out.reserve(p.size());
  mpz_class g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.raw().get_num() * (lcm_den / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

inline void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& v : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

inline DensePolynomial to_dense(const IntPoly& p) {
  std::vector<BigRational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return DensePolynomial(std::move(c));
}

inline IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

// Remainder of a by b scaled by a positive integer, so its sign pattern matches the true remainder.
inline IntPoly positive_pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t nb = b.size() - 1;
  const mpz_class& lb = b.back();
  const int sb = sgn(lb);
  const mpz_class abs_lb = ::abs(lb);
  mpz_class t;
  while (!a.empty() && a.size() - 1 >= nb) {
    const std::size_t shift = a.size() - 1 - nb;
    const mpz_class la = a.back();
    for (auto& v : a) v *= abs_lb;
    for (std::size_t j = 0; j <= nb; ++j) {
      t = la * b[j];
      if (sb > 0) a[shift + j] -= t; else a[shift + j] += t;
    }
    trim(a);
    make_primitive(a);
  }
  return a;
}

// Sign of p(num/den) for den > 0, via the homogenized sum  sum c_k num^k den^(n-k).
inline int sign_at(const IntPoly& p, const mpz_class& num, const mpz_class& den) {
  if (p.empty()) return 0;
  mpz_class acc = p.back();
  mpz_class dpow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    dpow *= den;
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), p[k].get_mpz_t(), dpow.get_mpz_t());
  }
  return sgn(acc);
}

}  // namespace detail

// Greatest common divisor, normalized to a primitive integer polynomial with positive leading coefficient.
inline DensePolynomial gcd(const DensePolynomial& a, const DensePolynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto u = detail::primitive_part(a);
  auto v = detail::primitive_part(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    auto r = detail::positive_pseudo_remainder(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  if (u.back() < 0)
    for (auto& c : u) c = -c;
  return detail::to_dense(u);
}

}  // namespace spheregap
