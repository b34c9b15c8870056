#include <gtest/gtest.h>

#include "gxray/properties.hpp"

using namespace gxray;

TEST(PropertySuite, AllPassSmallRun) {
  for (int d : {2, 3, 4}) {
    PropertyOptions opts;
    opts.d = d;
    opts.seed = 1234;
    opts.trials = 10;
    for (const auto& r : run_property_suite(opts)) {
      EXPECT_TRUE(r.passed()) << "d=" << d << " " << r.name << ": " << r.counterexample;
      EXPECT_EQ(r.trials, 10);
    }
  }
}

TEST(PropertySuite, Deterministic) {
  PropertyOptions opts;
  opts.trials = 3;
  const auto a = run_property_suite(opts);
  const auto b = run_property_suite(opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].failures, b[i].failures);
}

TEST(PropertySuite, SamplerDetectsMismatch) {
  std::vector<std::complex<double>> a{1.0, 2.0, 3.0};
  std::vector<std::complex<double>> b{1.0, 2.0 + 1e-6, 3.0};
  std::size_t worst = 0;
  EXPECT_FALSE(detail::samples_agree(a, b, 1e-8, worst));
  EXPECT_EQ(worst, 1u);
  EXPECT_TRUE(detail::samples_agree(a, a, 1e-8, worst));
}

TEST(PropertySuite, RandomRotationsAreOrthogonal) {
  std::mt19937_64 rng(3);
  for (int d = 2; d <= 5; ++d) {
    for (int i = 0; i < 20; ++i) EXPECT_TRUE(is_orthogonal(detail::random_rational_rotation(rng, d)));
  }
}

TEST(PropertySuite, BrokenOperatorIsCaught) {
  // A perturbed "N" must fail self-adjointness: N + (z1 d2) is not symmetric.
  std::mt19937_64 rng(5);
  const int d = 3;
  bool caught = false;
  for (int t = 0; t < 10 && !caught; ++t) {
    const GaussianPolyFn f(d, detail::random_poly(rng, d, 3, 4));
    const GaussianPolyFn g(d, detail::random_poly(rng, d, 3, 4));
    auto bad = [&](const GaussianPolyFn& h) {
      GaussianPolyFn out = normal_apply(h);
      out.poly += times_variable(partial(h.poly, 1), 0);
      return out;
    };
    caught = !(inner_product(bad(f), g) == inner_product(f, bad(g)));
  }
  EXPECT_TRUE(caught);
}
