#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gxray/quadrature.hpp"
#include "oracles.hpp"

using namespace gxray;

namespace {

constexpr double kPi = std::numbers::pi;

/// int_{-1}^{1} (1-x^2)^a x^j dx.
double symmetric_jacobi_moment(int j, double a) {
  if (j % 2 == 1) return 0.0;
  const double m = j / 2;
  return std::exp(std::lgamma(m + 0.5) + std::lgamma(a + 1.0) - std::lgamma(m + a + 1.5));
}

}  // namespace

TEST(GaussRules, TrivialExamples) {
  const QuadRule l1 = gauss_legendre(1);
  ASSERT_EQ(l1.nodes.size(), 1u);
  EXPECT_NEAR(l1.nodes[0], 0.0, 1e-16);
  EXPECT_NEAR(l1.weights[0], 2.0, 1e-15);
  const QuadRule c1 = gauss_jacobi(1, -0.5, -0.5);
  EXPECT_NEAR(c1.nodes[0], 0.0, 1e-16);
  EXPECT_NEAR(c1.weights[0], kPi, 1e-14);
  const QuadRule l8 = gauss_legendre(8);
  EXPECT_NEAR(l8.integrate([](double x) { return std::pow(x, 14); }), 2.0 / 15.0, 1e-14);
}

TEST(GaussRules, Errors) {
  EXPECT_THROW(gauss_legendre(0), DomainError);
  EXPECT_THROW(gauss_jacobi(3, -1.0, 0.0), DomainError);
  EXPECT_THROW(gauss_jacobi(3, 0.0, -1.5), DomainError);
}

TEST(GaussRules, StructureAndMass) {
  for (int n : {1, 2, 5, 17, 40, 90}) {
    for (double a : {-0.5, 0.0, 0.5, 1.0, 3.5}) {
      const QuadRule r = gauss_jacobi(n, a, a);
      ASSERT_EQ(static_cast<int>(r.nodes.size()), n);
      EXPECT_EQ(r.order, n);
      for (int i = 0; i < n; ++i) {
        EXPECT_GT(r.weights[static_cast<std::size_t>(i)], 0.0);
        EXPECT_GT(r.nodes[static_cast<std::size_t>(i)], -1.0);
        EXPECT_LT(r.nodes[static_cast<std::size_t>(i)], 1.0);
        if (i > 0) {
          EXPECT_LT(r.nodes[static_cast<std::size_t>(i - 1)], r.nodes[static_cast<std::size_t>(i)]);
        }
      }
      double mass = 0.0;
      for (double w : r.weights) mass += w;
      EXPECT_NEAR(mass / symmetric_jacobi_moment(0, a), 1.0, 1e-13) << n << " " << a;
    }
  }
}

TEST(GaussRules, SymmetricExactness) {
  for (int n : {3, 8, 20}) {
    for (double a : {-0.5, 0.0, 0.5, 2.0}) {
      const QuadRule r = gauss_jacobi(n, a, a);
      for (int j = 0; j <= 2 * n - 1; ++j) {
        const double got = r.integrate([&](double x) { return std::pow(x, j); });
        const double ref = symmetric_jacobi_moment(j, a);
        EXPECT_NEAR(got, ref, 1e-13 * std::max(symmetric_jacobi_moment(0, a), 1.0)) << n << " " << a << " " << j;
      }
    }
  }
}

TEST(GaussRules, AsymmetricExactness) {
  for (auto [a, b] : {std::pair{1.0, 0.0}, std::pair{0.5, 2.0}, std::pair{3.0, 1.5}}) {
    const QuadRule r = gauss_jacobi(10, a, b);
    for (int j = 0; j <= 19; ++j) {
      const double got = r.integrate([&](double x) { return std::pow(x, j); });
      const double ref =
          oracle::integrate([&](double x) { return std::pow(1.0 - x, a) * std::pow(1.0 + x, b) * std::pow(x, j); }, -1.0, 1.0);
      EXPECT_NEAR(got, ref, 1e-13 * std::pow(2.0, a + b + 1.0)) << a << " " << b << " " << j;
    }
  }
}

TEST(LambdaExact, Examples) {
  EXPECT_EQ(lambda_exact(0, 0, 3), PiScalar(Rational(4), 3));
  EXPECT_EQ(lambda_exact(1, 0, 3), PiScalar(make_rational(8, 3), 3));
  EXPECT_EQ(lambda_exact(0, 1, 3), PiScalar(make_rational(8, 3), 3));
  // (s + i v1 v2)^2 = s^2 - v1^2 v2^2 + odd: 4pi(1 - 2/3 + 1/5) - 4pi/15 = 28pi/15
  EXPECT_EQ(lambda_exact(0, 2, 3), PiScalar(make_rational(28, 15), 3));
  for (int d = 2; d <= 8; ++d) EXPECT_EQ(lambda_exact(0, 0, d), PiScalar::pi_power(1) * sphere_area(d - 1));
  EXPECT_THROW(lambda_exact(0, 0, 1), DomainError);
}

TEST(LambdaExact, PositiveWithSingleTerm) {
  for (int d = 2; d <= 5; ++d) {
    for (int k = 0; k <= 8; ++k) {
      for (int l = 0; l <= 8; ++l) {
        const PiScalar v = lambda_exact(k, l, d);
        ASSERT_TRUE(v.is_monomial());
        EXPECT_GT(sgn(v.terms()[0].second), 0);
      }
    }
  }
}

TEST(LambdaQuad, Examples) {
  EXPECT_NEAR(lambda_quad(0, 0, 3), 22.273311987326831, 1e-13 * 22.3);
  EXPECT_NEAR(lambda_quad(1, 0, 3), 8.0 / 3.0 * std::pow(kPi, 1.5), 1e-13 * 14.9);
  EXPECT_NEAR(lambda_quad(0, 1, 3), 8.0 / 3.0 * std::pow(kPi, 1.5), 1e-13 * 14.9);
  EXPECT_THROW(lambda_quad(1, 1, 2), DomainError);
}

TEST(LambdaQuad, MatchesAngularOracle) {
  for (auto [k, l] : {std::pair{0, 3}, std::pair{2, 5}, std::pair{4, 1}, std::pair{3, 7}}) {
    const double ref = oracle::lambda_d3(k, l);
    EXPECT_NEAR(lambda_quad(k, l, 3), ref, 1e-11 * ref) << k << " " << l;
  }
}

TEST(LambdaGegenbauer, Examples) {
  EXPECT_NEAR(lambda_gegenbauer(0, 0, 3), 4.0 * std::pow(kPi, 1.5), 1e-13 * 22.3);
  EXPECT_NEAR(lambda_gegenbauer(1, 0, 3), 8.0 / 3.0 * std::pow(kPi, 1.5), 1e-13 * 14.9);
  EXPECT_THROW(lambda_gegenbauer(0, 0, 2), DomainError);
}

TEST(EigenvalueMethods, Concordance) {
  for (int d = 3; d <= 5; ++d) {
    for (int k = 0; k <= 12; ++k) {
      for (int l = 0; l <= 12; ++l) {
        const double e = pi_to_float(lambda_exact(k, l, d));
        const double q = lambda_quad(k, l, d);
        const double g = lambda_gegenbauer(k, l, d);
        EXPECT_LE(std::abs(e - q), 1e-10 * e) << d << " " << k << " " << l;
        EXPECT_LE(std::abs(q - g), 1e-9 * e) << d << " " << k << " " << l;
      }
    }
  }
}

TEST(LambdaQuad, StableUnderRefinement) {
  for (auto [k, l] : {std::pair{10, 10}, std::pair{30, 5}, std::pair{3, 35}}) {
    const double a = lambda_quad(k, l, 3);
    const double b = lambda_quad(k, l, 3, 2 * default_nodes(k, l, 3));
    EXPECT_LE(std::abs(a - b), 1e-13 * a);
  }
}

TEST(MainTerm, ZeroLIsClosedForm) {
  for (int d = 3; d <= 6; ++d) {
    for (int k : {1, 5, 25}) {
      const double expected = pi_to_float(sphere_area(d - 2)) * kPi / std::sqrt(k + 0.5 * (d - 3));
      EXPECT_NEAR(main_term(k, 0, d), expected, 1e-13 * expected) << d << " " << k;
    }
  }
}

TEST(MainTerm, MatchesTwoDimensionalOracle) {
  for (int d : {3, 4}) {
    for (auto [k, l] : {std::pair{25, 0}, std::pair{0, 5}, std::pair{3, 7}, std::pair{10, 20}, std::pair{1, 1}}) {
      const double ref = oracle::main_term_2d(k, l, d);
      EXPECT_NEAR(main_term(k, l, d), ref, 1e-10 * ref) << d << " " << k << " " << l;
    }
  }
}

TEST(MainTerm, Errors) {
  EXPECT_THROW(main_term(0, 0, 3), DomainError);
  EXPECT_THROW(main_term(1, 0, 2), DomainError);
}

TEST(D2ClosedForm, Examples) {
  EXPECT_EQ(d2_closed_form(0, 0), PiScalar(Rational(2), 3));
  EXPECT_EQ(d2_closed_form(0, 4), PiScalar(make_rational(1, 8), 3));
  EXPECT_EQ(d2_closed_form(1, 0), PiScalar(Rational(1), 3));
  EXPECT_EQ(lambda_exact(1, 0, 2), PiScalar(Rational(1), 3));
}

TEST(D2ClosedForm, EqualsExactEigenvalue) {
  for (int k = 0; k <= 20; ++k) {
    for (int l = 0; l <= 20; ++l) EXPECT_EQ(lambda_exact(k, l, 2), d2_closed_form(k, l)) << k << " " << l;
  }
}

TEST(D2ClosedForm, PrintedVariantAgreesOnlyWithoutRadialIndex) {
  for (int l = 0; l <= 20; ++l) EXPECT_EQ(d2_closed_form_as_printed(0, l), lambda_exact(0, l, 2));
  for (int k = 1; k <= 5; ++k) {
    for (int l = 0; l <= 5; ++l) {
      EXPECT_EQ(d2_closed_form_as_printed(k, l), d2_closed_form(k, l) * Rational(mpz_class(1) << (2 * k)));
    }
  }
}
