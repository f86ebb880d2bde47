#include <gtest/gtest.h>

#include <random>

#include "spheregap/polynomial.hpp"

using spheregap::BigRational;
using spheregap::DensePolynomial;

namespace {

DensePolynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<BigRational> c(deg(rng) + 1);
  for (auto& v : c) v = BigRational(num(rng), den(rng));
  return DensePolynomial(std::move(c));
}

}  // namespace

TEST(DensePolynomial, ZeroPolynomialIsEmpty) {
  const DensePolynomial z({BigRational(0), BigRational(0)});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  EXPECT_EQ(z(BigRational(5)), BigRational(0));
}

TEST(DensePolynomial, TopCoefficientNonzeroAfterCancellation) {
  const DensePolynomial a({BigRational(1), BigRational(2), BigRational(3)});
  const DensePolynomial b({BigRational(0), BigRational(1), BigRational(3)});
  const auto diff = a - b;
  EXPECT_EQ(diff.degree(), 1);
  EXPECT_EQ(diff, DensePolynomial({BigRational(1), BigRational(1)}));
}

TEST(DensePolynomial, DerivativeAndParity) {
  const DensePolynomial p({BigRational(-1), BigRational(0), BigRational(3)});
  EXPECT_EQ(p.derivative(), DensePolynomial({BigRational(0), BigRational(6)}));
  EXPECT_TRUE(p.is_even());
  EXPECT_FALSE(p.is_odd());
  EXPECT_EQ(p.reflected(), p);
  EXPECT_TRUE(DensePolynomial::x().is_odd());
}

TEST(DensePolynomial, DivisionIdentityHoldsForRandomPairs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng, 8);
    auto b = random_poly(rng, 5);
    if (b.is_zero()) continue;
    const auto [q, r] = spheregap::divide(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(spheregap::divide(DensePolynomial::x(), DensePolynomial()), std::domain_error);
}

TEST(DensePolynomial, GcdRecoversCommonFactor) {
  std::mt19937_64 rng(11);
  const DensePolynomial common({BigRational(-2, 3), BigRational(1)});  // x - 2/3
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 4) * common;
    const auto b = random_poly(rng, 4) * common;
    if (a.is_zero() || b.is_zero()) continue;
    const auto g = spheregap::gcd(a, b);
    EXPECT_TRUE(spheregap::divide(g, DensePolynomial({BigRational(-2), BigRational(3)})).remainder.is_zero());
    EXPECT_TRUE(spheregap::divide(a, g).remainder.is_zero());
    EXPECT_TRUE(spheregap::divide(b, g).remainder.is_zero());
    EXPECT_GT(g.leading().sign(), 0);
  }
}

TEST(DensePolynomial, HomogenizedSignMatchesExactEvaluation) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 16);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng, 7);
    const BigRational x(num(rng), den(rng));
    const auto ip = spheregap::detail::primitive_part(p);
    EXPECT_EQ(spheregap::detail::sign_at(ip, x.numerator(), x.denominator()), p(x).sign());
  }
}
