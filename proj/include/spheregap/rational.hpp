#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spheregap {

// Exact rational scalar. Always canonical: lowest terms, positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  BigRational(const mpz_class& num) : value_(num) {}  // NOLINT
  BigRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}
  explicit BigRational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  // Accepts "p/q" or "p" with optional leading sign.
  static BigRational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("BigRational: empty string");
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return BigRational(mpz_class(s, 10));
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      return BigRational(num, den);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    }
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  // Always "numerator/denominator", including integers ("3/1").
  std::string to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.value_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.value_.get_str();
  }

 private:
  mpq_class value_{0};
};

inline BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

inline BigRational midpoint(const BigRational& a, const BigRational& b) {
  return (a + b) / BigRational(2);
}

// 2^-k as an exact rational.
inline BigRational dyadic(unsigned k) {
  mpz_class den = 1;
  den <<= k;
  return BigRational(mpz_class(1), den);
}

}  // namespace spheregap
