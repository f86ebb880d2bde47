#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <thread>

#include "spheregap/legendre.hpp"
#include "spheregap/parallel.hpp"
#include "spheregap/quadrature.hpp"
#include "support/oracles.hpp"

using namespace spheregap;

namespace {
const BigRational kOne(1);
}

TEST(LegendrePoly, LowOrders) {
  EXPECT_EQ(legendre_poly(0, Dimension(5)), DensePolynomial::constant(kOne));
  EXPECT_EQ(legendre_poly(1, Dimension(7)), DensePolynomial::x());
  // classical Legendre P_2 = (3x^2 - 1)/2
  EXPECT_EQ(legendre_poly(2, Dimension(3)), DensePolynomial({BigRational(-1, 2), BigRational(0), BigRational(3, 2)}));
}

TEST(LegendrePoly, RejectsDimensionBelowTwo) {
  EXPECT_THROW(Dimension(1), std::invalid_argument);
  EXPECT_THROW(Dimension(0), std::invalid_argument);
}

// P_2 = (d x^2 - 1)/(d - 1): checked against brute-force quadrature of the integral
// representation at sampled x, then pinned exactly.
TEST(LegendrePoly, SecondOrderClosedFormMatchesIntegralRepresentation) {
  for (int d = 3; d <= 10; ++d) {
    for (double x : {-0.9, -0.35, 0.0, 0.2, 0.5, 0.77, 1.0}) {
      const double closed = (d * x * x - 1.0) / (d - 1.0);
      EXPECT_NEAR(oracle::brute_force_integral_legendre(2, d, x), closed, 1e-10) << "d=" << d << " x=" << x;
    }
    const DensePolynomial expected({BigRational(-1, d - 1), BigRational(0), BigRational(d, d - 1)});
    EXPECT_EQ(legendre_poly(2, Dimension(d)), expected);
  }
}

TEST(LegendrePoly, HigherOrdersMatchIntegralRepresentation) {
  for (int d : {3, 4, 7}) {
    for (unsigned ell : {3u, 6u, 9u}) {
      for (double x : {-0.6, 0.1, 0.45, 0.9}) {
        EXPECT_NEAR(legendre_poly(ell, Dimension(d)).evaluate(x), oracle::brute_force_integral_legendre(ell, d, x), 1e-10);
      }
    }
  }
}

TEST(LegendrePoly, DimensionTwoIsChebyshev) {
  // T_4 = 8x^4 - 8x^2 + 1
  EXPECT_EQ(legendre_poly(4, Dimension(2)),
            DensePolynomial({kOne, BigRational(0), BigRational(-8), BigRational(0), BigRational(8)}));
}

TEST(LegendrePoly, NormalizationDegreeParity) {
  for (int d = 2; d <= 20; ++d) {
    for (unsigned ell = 0; ell <= 60; ++ell) {
      const auto& p = legendre_poly(ell, Dimension(d));
      ASSERT_EQ(evaluate_exact(p, kOne), kOne) << "ell=" << ell << " d=" << d;
      ASSERT_EQ(p.degree(), static_cast<long>(ell));
      ASSERT_TRUE(ell % 2 == 0 ? p.is_even() : p.is_odd());
    }
  }
}

TEST(LegendrePoly, Orthogonality) {
  for (int d = 3; d <= 10; ++d) {
    const Dimension dim(d);
    const auto rule = gauss_jacobi_rule(24, 0.5 * (d - 3));
    for (unsigned l = 0; l <= 20; ++l) {
      const double norm = rule.integrate([&](double t) { return std::pow(evaluate_float(l, dim, t), 2); });
      for (unsigned m = 0; m < l; ++m) {
        const double inner =
            rule.integrate([&](double t) { return evaluate_float(l, dim, t) * evaluate_float(m, dim, t); });
        ASSERT_LE(std::abs(inner), 1e-12 * norm) << "l=" << l << " m=" << m << " d=" << d;
      }
    }
  }
}

TEST(Eigenvalue, Formula) {
  for (int d = 2; d <= 12; ++d) {
    EXPECT_EQ(eigenvalue(0, Dimension(d)).value, 0);
    EXPECT_EQ(eigenvalue(2, Dimension(d)).value, 2 * d);
  }
  EXPECT_EQ(eigenvalue(2, Dimension(3)).value, 6);
  for (unsigned l = 1; l < 30; ++l) EXPECT_GT(eigenvalue(l, Dimension(4)).value, 0);
}

TEST(GapRatio, Examples) {
  EXPECT_EQ(gap_ratio(1, Dimension(2)), BigRational(3));
  EXPECT_EQ(gap_ratio(1, Dimension(3)), BigRational(7, 3));
  EXPECT_THROW(gap_ratio(0, Dimension(3)), std::invalid_argument);
}

TEST(GapRatio, ClosedFormAgainstEigenvalueSubtraction) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<unsigned> ell(1, 50);
  std::uniform_int_distribution<int> dim(2, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned l = ell(rng);
    const int d = dim(rng);
    const auto direct = BigRational(eigenvalue(2 * l + 2, Dimension(d)).value - eigenvalue(2 * l, Dimension(d)).value,
                                    eigenvalue(2, Dimension(d)).value);
    EXPECT_EQ(gap_ratio(l, Dimension(d)), direct);
    EXPECT_EQ(direct, BigRational(4 * static_cast<long>(l) + d, d));
  }
}

TEST(GapPolynomial, VanishesAtEndpointsAndIsEven) {
  for (int d = 2; d <= 8; ++d) {
    for (unsigned l = 1; l <= 12; ++l) {
      const auto g = gap_polynomial(l, Dimension(d));
      EXPECT_EQ(g(kOne), BigRational(0));
      EXPECT_EQ(g(-kOne), BigRational(0));
      EXPECT_TRUE(g.is_even());
      EXPECT_EQ(g.degree(), static_cast<long>(2 * l + 2));
    }
  }
}

TEST(GapPolynomial, DimensionTwoCosineValue) {
  // theta = pi/2: 3 (1 - cos(pi)) - (cos(pi) - cos(2 pi)) = 8
  EXPECT_EQ(gap_polynomial(1, Dimension(2))(BigRational(0)), BigRational(8));
}

TEST(Prop11Polynomial, Examples) {
  for (int d = 2; d <= 10; ++d) {
    EXPECT_TRUE(prop11_polynomial(1, Dimension(d)).is_zero());
    const auto h = prop11_polynomial(3, Dimension(d));
    EXPECT_EQ(h(kOne), BigRational(0));
    EXPECT_TRUE(h.is_even());
  }
  // lambda_4/lambda_2 = 4 at d = 2, and P_4(0) = cos(2 pi) = 1
  EXPECT_EQ(prop11_polynomial(2, Dimension(2))(BigRational(0)), BigRational(8));
}

TEST(GapScalingIdentity, HoldsOnFullGrid) {
  for (int d = 2; d <= 20; ++d)
    for (unsigned l = 1; l <= 50; ++l) ASSERT_TRUE(gap_scaling_identity(l, Dimension(d))) << l << " " << d;
}

TEST(GapScalingIdentity, DetectsWrongSecondOrderSign) {
  // The variant P_2 = x^2 + (1 - x^2)/(d - 1) breaks the identity.
  const int d = 3;
  const DensePolynomial p2_plus({BigRational(1, d - 1), BigRational(0), BigRational(1) - BigRational(1, d - 1)});
  const auto lhs = gap_ratio(1, Dimension(d)) * one_minus(p2_plus);
  const DensePolynomial rhs = BigRational(4 + d, d - 1) * DensePolynomial({kOne, BigRational(0), -kOne});
  EXPECT_NE(lhs, rhs);
}

TEST(EvaluateExact, Examples) {
  EXPECT_EQ(evaluate_exact(DensePolynomial(), BigRational(3, 7)), BigRational(0));
  EXPECT_EQ(evaluate_exact(legendre_poly(2, Dimension(3)), kOne), kOne);
  // (35/16 - 30/4 + 3)/8
  EXPECT_EQ(evaluate_exact(legendre_poly(4, Dimension(3)), BigRational(1, 2)), BigRational(-37, 128));
}

TEST(EvaluateFloat, Examples) {
  EXPECT_NEAR(evaluate_float(5, Dimension(2), std::cos(0.3)), std::cos(1.5), 1e-13);
  for (int d = 2; d <= 9; ++d) EXPECT_EQ(evaluate_float(3, Dimension(d), 0.0), 0.0);
  EXPECT_NEAR(evaluate_float(2, Dimension(3), 0.5), -0.125, 1e-16);
  EXPECT_THROW(evaluate_float(2, Dimension(3), 1.5), std::domain_error);
}

TEST(EvaluateFloat, AgreesWithExact) {
  for (int d = 2; d <= 20; d += 3) {
    for (unsigned l = 0; l <= 100; l += 7) {
      for (int k = -4; k <= 4; ++k) {
        const BigRational x(k, 4);
        const double exact = evaluate_exact(legendre_poly(l, Dimension(d)), x).to_double();
        ASSERT_NEAR(evaluate_float(l, Dimension(d), x.to_double()), exact, 1e-12) << l << " " << d << " " << k;
      }
    }
  }
}

TEST(EvaluateFloat, BoundedByOne) {
  for (int d = 2; d <= 20; ++d) {
    for (unsigned l = 0; l <= 60; ++l) {
      double worst = 0.0;
      for (int k = 0; k <= 2000; ++k) worst = std::max(worst, std::abs(evaluate_float(l, Dimension(d), -1.0 + k / 1000.0)));
      ASSERT_LE(worst, 1.0 + 1e-12) << l << " " << d;
    }
  }
}

TEST(LegendreDefectQuotient, MatchesOneMinusP) {
  for (int d = 2; d <= 10; ++d)
    for (unsigned l = 0; l <= 20; ++l)
      for (double x : {-1.0, -0.3, 0.2, 0.8}) {
        const double direct = (1.0 - evaluate_float(l, Dimension(d), x)) / (1.0 - x);
        EXPECT_NEAR(legendre_defect_quotient(l, Dimension(d), x), direct, 1e-11 * (1.0 + std::abs(direct)));
      }
  // q_ell(1) = P_ell'(1) = lambda_ell / (d - 1)
  EXPECT_NEAR(legendre_defect_quotient(6, Dimension(5), 1.0), 6.0 * 9.0 / 4.0, 1e-12);
}

TEST(LegendreCache, ConcurrentConstructionIsConsistent) {
  // Dimension 23 is not touched elsewhere, so the cache starts cold.
  std::vector<DensePolynomial> a(40), b(40);
  parallel_for(a.size(), [&](std::size_t i) { a[i] = legendre_poly(static_cast<unsigned>(39 - i), Dimension(23)); }, 8);
  parallel_for(b.size(), [&](std::size_t i) { b[i] = legendre_poly(static_cast<unsigned>(i), Dimension(23)); }, 8);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[39 - i], b[i]);
}
