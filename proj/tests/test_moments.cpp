#include <random>

#include <gtest/gtest.h>

#include "gxray/moments.hpp"
#include "oracles.hpp"

using namespace gxray;

TEST(LineMoment, Values) {
  EXPECT_EQ(gaussian_line_moment(0), PiScalar::pi_power(1));
  EXPECT_TRUE(gaussian_line_moment(1).is_zero());
  EXPECT_EQ(gaussian_line_moment(2), PiScalar(make_rational(1, 2), 1));
  EXPECT_THROW(gaussian_line_moment(-1), DomainError);
}

TEST(SphereMoment, Values) {
  EXPECT_EQ(sphere_monomial_moment(std::vector<int>{0, 0, 0}, 3), PiScalar(Rational(4), 2));
  EXPECT_EQ(sphere_monomial_moment(std::vector<int>{2, 0, 0}, 3), PiScalar(make_rational(4, 3), 2));
  EXPECT_EQ(sphere_monomial_moment(std::vector<int>{2, 2, 0}, 3), PiScalar(make_rational(4, 15), 2));
  EXPECT_TRUE(sphere_monomial_moment(std::vector<int>{1, 2, 0}, 3).is_zero());
  EXPECT_THROW(sphere_monomial_moment(std::vector<int>{0}, 1), DomainError);
  EXPECT_THROW(sphere_monomial_moment(std::vector<int>{0, 0}, 3), DimensionError);
}

TEST(SphereMoment, SumOfSquaresIsArea) {
  for (int d = 2; d <= 8; ++d) {
    PiScalar sum;
    for (int i = 0; i < d; ++i) {
      std::vector<int> a(static_cast<std::size_t>(d), 0);
      a[static_cast<std::size_t>(i)] = 2;
      sum += sphere_monomial_moment(a, d);
    }
    EXPECT_EQ(sum, sphere_monomial_moment(std::vector<int>(static_cast<std::size_t>(d), 0), d)) << d;
    EXPECT_EQ(sum, sphere_area(d - 1));
  }
}

TEST(SphereMoment, AgreesWithAngularQuadrature) {
  std::mt19937_64 rng(21);
  for (int d = 2; d <= 6; ++d) {
    std::uniform_int_distribution<int> var(0, d - 1);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> a(static_cast<std::size_t>(d), 0);
      std::uniform_int_distribution<int> half(0, 6);
      const int h = half(rng);
      for (int j = 0; j < h; ++j) a[static_cast<std::size_t>(var(rng))] += 2;
      const double exact = pi_to_float(sphere_monomial_moment(a, d));
      EXPECT_NEAR(exact, oracle::sphere_moment(a), 1e-12 * exact) << d;
    }
  }
}

TEST(SphereArea, KnownValues) {
  EXPECT_EQ(sphere_area(0), PiScalar(Rational(2)));
  EXPECT_EQ(sphere_area(1), PiScalar(Rational(2), 2));
  EXPECT_EQ(sphere_area(2), PiScalar(Rational(4), 2));
  EXPECT_EQ(sphere_area(3), PiScalar(Rational(2), 4));
}

TEST(SpaceMoment, Values) {
  EXPECT_EQ(gaussian_space_moment(std::vector<int>{0, 0, 0}), PiScalar(Rational(1), 3));
  EXPECT_EQ(gaussian_space_moment(std::vector<int>{2, 0}), PiScalar(make_rational(1, 2), 2));
  EXPECT_TRUE(gaussian_space_moment(std::vector<int>{1, 0}).is_zero());
}

TEST(IntegrateSphere, Examples) {
  EXPECT_EQ(integrate_sphere(MultiPoly::constant(3, CScalar(1)), 3), CScalar(PiScalar(Rational(4), 2)));
  EXPECT_EQ(integrate_sphere(pow(MultiPoly::variable(3, 0), 2), 3), CScalar(PiScalar(make_rational(4, 3), 2)));
  EXPECT_THROW(integrate_sphere(MultiPoly::variable(4, 0), 3), DimensionError);
  EXPECT_THROW(integrate_sphere(MultiPoly::variable(4, 0), 2, 3), DimensionError);
}

TEST(IntegrateSphere, IdealConsistency) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> ex(0, 4);
  for (int d = 2; d <= 5; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      MultiPoly p(d);
      for (int t = 0; t < 5; ++t) {
        Monomial m(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)] = ex(rng);
        p.add_term(m, CScalar(coef(rng)));
      }
      EXPECT_EQ(integrate_sphere(rho_squared<CScalar>(d) * p, d), integrate_sphere(p, d));
    }
  }
}

TEST(IntegrateGaussLine, FactorMoment) {
  // slots (p1, t)
  const MultiPoly q = MultiPoly::variable(2, 0) * pow(MultiPoly::variable(2, 1), 2);
  const MultiPoly r = integrate_gauss_line(q, 1);
  EXPECT_EQ(r, MultiPoly::variable(2, 0).scaled(PiScalar(make_rational(1, 2), 1)));
  EXPECT_THROW(integrate_gauss_line(q, 2), DimensionError);
}
