#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spheregap/polynomial.hpp"
#include "spheregap/rational.hpp"

namespace spheregap {

// p / gcd(p, p'), rescaled by a positive rational to a primitive integer polynomial.
// Same real roots as p, each simple.
inline DensePolynomial square_free(const DensePolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free: zero polynomial");
  if (p.degree() == 0) return DensePolynomial::constant(BigRational(p.leading().sign()));
  const auto g = gcd(p, p.derivative());
  auto q = divide(p, g).quotient;
  return detail::to_dense(detail::primitive_part(q));
}

// Sturm chain p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i), each member rescaled by a
// positive rational to primitive integer form (sign pattern unchanged). The input must be
// square-free; otherwise the chain ends in gcd(p, p') and is rejected.
class SturmChain {
 public:
  explicit SturmChain(const DensePolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    ints_.push_back(detail::primitive_part(p));
    auto d = detail::derivative(ints_.back());
    if (!d.empty()) {
      detail::make_primitive(d);
      ints_.push_back(std::move(d));
    }
    while (ints_.size() >= 2 && ints_.back().size() > 1) {
      auto r = detail::positive_pseudo_remainder(ints_[ints_.size() - 2], ints_.back());
      if (r.empty()) break;
      for (auto& c : r) c = -c;
      ints_.push_back(std::move(r));
    }
    if (ints_.back().size() > 1) throw std::invalid_argument("sturm_chain: input is not square-free");
    polys_.reserve(ints_.size());
    for (const auto& q : ints_) polys_.push_back(detail::to_dense(q));
  }

  const std::vector<DensePolynomial>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }

  // Number of sign changes along the chain at x, zeros dropped.
  int variations(const BigRational& x) const {
    const mpz_class num = x.numerator();
    const mpz_class den = x.denominator();
    int changes = 0;
    int last = 0;
    for (const auto& q : ints_) {
      const int s = detail::sign_at(q, num, den);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  int leading_sign_at(const BigRational& x) const {
    return detail::sign_at(ints_.front(), x.numerator(), x.denominator());
  }

 private:
  std::vector<detail::IntPoly> ints_;
  std::vector<DensePolynomial> polys_;
};

inline SturmChain sturm_chain(const DensePolynomial& p) { return SturmChain(p); }

// Distinct real roots of the chain's first member in (a, b]. The count V(a) - V(b) is exact
// even when a or b is itself a root, because at a simple root r the variation count equals
// its right-hand limit.
inline int count_roots(const SturmChain& chain, const BigRational& a, const BigRational& b) {
  if (!(a < b)) throw std::invalid_argument("count_roots requires a < b");
  return chain.variations(a) - chain.variations(b);
}

// Closed interval [lo, hi] holding exactly one root of the chain's first member.
// lo == hi marks an exact rational root.
struct RootInterval {
  BigRational lo;
  BigRational hi;
  bool exact() const { return lo == hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

namespace detail {

inline void isolate(const SturmChain& chain, const BigRational& lo, const BigRational& hi, int v_lo, int v_hi,
                    const BigRational& max_width, std::vector<RootInterval>& out) {
  const int count = v_lo - v_hi;
  if (count == 0) return;
  if (count == 1 && hi - lo <= max_width) {
    if (chain.leading_sign_at(hi) == 0)
      out.push_back({hi, hi});
    else
      out.push_back({lo, hi});
    return;
  }
  const BigRational mid = midpoint(lo, hi);
  const int v_mid = chain.variations(mid);
  isolate(chain, lo, mid, v_lo, v_mid, max_width, out);
  isolate(chain, mid, hi, v_mid, v_hi, max_width, out);
}

// Halve a non-exact root interval, keeping the half that contains the root.
inline void shrink(const SturmChain& chain, RootInterval& r) {
  const BigRational mid = midpoint(r.lo, r.hi);
  if (chain.leading_sign_at(mid) == 0) {
    r = {mid, mid};
  } else if (count_roots(chain, r.lo, mid) == 1) {
    r.hi = mid;
  } else {
    r.lo = mid;
  }
}

}  // namespace detail

// Disjoint, sorted isolating intervals for every root of the chain's first member in [a, b].
// Intervals have width <= max_width; roots at a or b appear as exact intervals.
inline std::vector<RootInterval> isolate_roots(const SturmChain& chain, const BigRational& a, const BigRational& b,
                                               const BigRational& max_width) {
  if (!(a < b)) throw std::invalid_argument("isolate_roots requires a < b");
  std::vector<RootInterval> roots;
  if (chain.leading_sign_at(a) == 0) roots.push_back({a, a});
  detail::isolate(chain, a, b, chain.variations(a), chain.variations(b), max_width, roots);
  // Intervals are (lo, hi] during bisection; as closed intervals neighbours may touch.
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    while (roots[i].hi >= roots[i + 1].lo) {
      if (!roots[i].exact()) detail::shrink(chain, roots[i]);
      if (roots[i].hi >= roots[i + 1].lo && !roots[i + 1].exact()) detail::shrink(chain, roots[i + 1]);
    }
  }
  // Inexact intervals are kept off the endpoints so every gap next to a or b is nonempty.
  if (!roots.empty() && !roots.front().exact())
    while (roots.front().lo <= a && !roots.front().exact()) detail::shrink(chain, roots.front());
  if (!roots.empty() && !roots.back().exact())
    while (roots.back().hi >= b && !roots.back().exact()) detail::shrink(chain, roots.back());
  return roots;
}

}  // namespace spheregap
