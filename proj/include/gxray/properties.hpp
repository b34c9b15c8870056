#pragma once

// Randomized operator-algebra checks for N, seeded and deterministic.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gxray/moments.hpp"
#include "gxray/polyalg.hpp"
#include "gxray/scalars.hpp"
#include "gxray/weighted.hpp"
#include "gxray/xraynormal.hpp"

namespace gxray {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0; }
};

struct PropertyOptions {
  int d = 3;
  std::uint64_t seed = 42;
  int trials = 100;
  int max_degree = 5;
  int max_terms = 6;
  int sample_points = 200;
  double sample_rtol = 1e-8;
};

namespace detail {

/// Random polynomial in the first `active` of `nvars` variables (all of them by default).
inline MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_degree, int max_terms, int active = -1) {
  if (active < 0) active = nvars;
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> var(0, active - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  MultiPoly p(nvars);
  while (p.is_zero()) {
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
      Monomial m(static_cast<std::size_t>(nvars));
      const int deg = degree(rng);
      for (int j = 0; j < deg; ++j) m[static_cast<std::size_t>(var(rng))] += 1;
      const int re = coef(rng);
      const int im = coef(rng);
      p.add_term(m, CScalar(PiScalar(Rational(re)), PiScalar(Rational(im))));
    }
  }
  return p;
}

/// Signed permutation composed with a Pythagorean Givens rotation in a random plane.
inline RationalMatrix random_rational_rotation(std::mt19937_64& rng, int d) {
  static const Rational cs[][2] = {{make_rational(3, 5), make_rational(4, 5)},
                                   {make_rational(5, 13), make_rational(12, 13)},
                                   {make_rational(8, 17), make_rational(15, 17)}};
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> signs(static_cast<std::size_t>(d));
  std::uniform_int_distribution<int> coin(0, 1);
  for (auto& s : signs) s = coin(rng) ? 1 : -1;
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> axis(0, d - 1);
  const int i = axis(rng);
  int j = axis(rng);
  while (j == i) j = axis(rng);
  const auto& c = cs[pick(rng)];
  return matmul(givens(d, i, j, c[0], c[1]), signed_permutation(perm, signs));
}

inline RationalMatrix random_skew(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> entry(-3, 3);
  RationalMatrix b(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Rational x = entry(rng);
      b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = x;
      b[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -x;
    }
  }
  return b;
}

inline int exact_sign(const PiScalar& s) {
  if (s.is_zero()) return 0;
  if (s.is_monomial()) return sgn(s.terms()[0].second);
  const double x = s.to_double();
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

inline std::string describe(const std::string& label, const MultiPoly& p) { return label + " = " + to_string(p); }

/// Compares two sampled value lists; tolerance is relative to the largest magnitude seen.
inline bool samples_agree(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                          double rtol, std::size_t& worst) {
  double scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
  double worst_err = -1.0;
  bool ok = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double err = std::abs(a[i] - b[i]);
    const double tol = rtol * std::max({std::abs(a[i]), std::abs(b[i]), 1e-3 * scale});
    if (err > tol) ok = false;
    if (err > worst_err) {
      worst_err = err;
      worst = i;
    }
  }
  return ok;
}

}  // namespace detail

/// Runs every property `trials` times on random f of degree <= max_degree.
inline std::vector<PropertyResult> run_property_suite(const PropertyOptions& opts) {
  const int d = opts.d;
  if (d < 2) throw DomainError("run_property_suite: need d >= 2");
  std::mt19937_64 rng(opts.seed);
  const PiScalar bound_const = PiScalar::pi_power(1) * sphere_area(d - 1);

  std::vector<PropertyResult> results;
  for (const char* name : {"self_adjoint", "positivity", "quadratic_form_bound", "rotation_equivariance",
                           "rotation_intertwining", "skew_field_commutation", "hosc_commutation",
                           "spherical_laplacian_commutation", "oscillator_conjugation", "osc_inter_2", "osc_inter_3"}) {
    results.push_back(PropertyResult{name, 0, 0, {}});
  }
  auto record = [&](std::size_t i, bool ok, const std::function<std::string()>& why) {
    auto& r = results[i];
    ++r.trials;
    if (!ok) {
      if (r.failures == 0) r.counterexample = why();
      ++r.failures;
    }
  };

  for (int trial = 0; trial < opts.trials; ++trial) {
    const GaussianPolyFn f(d, detail::random_poly(rng, d, opts.max_degree, opts.max_terms));
    const GaussianPolyFn g(d, detail::random_poly(rng, d, opts.max_degree, opts.max_terms));
    const GaussianPolyFn nf = normal_apply(f);
    const GaussianPolyFn ng = normal_apply(g);
    const std::string fstr = detail::describe("f", f.poly);

    record(0, inner_product(nf, g) == inner_product(f, ng),
           [&] { return fstr + "; " + detail::describe("g", g.poly); });

    const CScalar q = inner_product(nf, f);
    record(1, q.im().is_zero() && detail::exact_sign(q.re()) > 0,
           [&] { return fstr + "; <Nf,f> = " + q.to_string(); });

    const PiScalar ff = inner_product(f, f).re();
    const PiScalar gap = bound_const * ff - q.re();
    const double scale = (bound_const * ff).to_double();
    record(2, gap.is_zero() || gap.to_double() > -1e-12 * scale,
           [&] { return fstr + "; bound - <Nf,f> = " + gap.to_string(); });

    const RationalMatrix a = detail::random_rational_rotation(rng, d);
    record(3, normal_apply(rotation_pullback(f, a)) == rotation_pullback(nf, a), [&] { return fstr; });
    record(4, rotation_pullback_data(xray_w(f), a).poly == xray_w(rotation_pullback(f, a)).poly, [&] { return fstr; });

    const RationalMatrix b = detail::random_skew(rng, d);
    record(5, normal_apply(GaussianPolyFn(d, linear_vector_field(f.poly, b))).poly == linear_vector_field(nf.poly, b),
           [&] { return fstr; });

    record(6, normal_apply(GaussianPolyFn(d, hosc_conj(f.poly, d))).poly == hosc_conj(nf.poly, d), [&] { return fstr; });
    record(7, normal_apply(GaussianPolyFn(d, spherical_laplacian_conj(f.poly))).poly == spherical_laplacian_conj(nf.poly),
           [&] { return fstr; });
    record(8, space_oscillator_weighted(f.poly) == hosc_conj(f.poly, d), [&] { return fstr; });

    // (-Delta + rho^2) backproj(r) = backproj((-Delta_p + |p|^2 + 1) r), for a random data-side r.
    {
      const DataPolyFn rr(d, detail::random_poly(rng, 2 * d + 1, opts.max_degree - 1, opts.max_terms, 2 * d));
      const MultiPoly lhs = space_oscillator_weighted(backproj_w(rr).poly);
      const MultiPoly rhs = backproj_w(data_oscillator_weighted(rr)).poly;
      bool ok = lhs == rhs;
      std::size_t worst = 0;
      if (ok) {
        std::normal_distribution<double> normal(0.0, 1.0);
        std::vector<std::complex<double>> va;
        std::vector<std::complex<double>> vb;
        for (int s = 0; s < opts.sample_points; ++s) {
          std::vector<double> z(static_cast<std::size_t>(d));
          for (auto& x : z) x = normal(rng);
          va.push_back(evaluate_weighted(GaussianPolyFn(d, lhs), z));
          vb.push_back(evaluate_weighted(GaussianPolyFn(d, rhs), z));
        }
        ok = detail::samples_agree(va, vb, opts.sample_rtol, worst);
      }
      record(9, ok, [&] { return detail::describe("r", rr.poly); });
    }

    // (-Delta_p + |p|^2 + 1) I0w f = I0w (-Delta + rho^2) f, sampled on the line manifold.
    {
      const DataPolyFn lhs = data_oscillator_weighted(xray_w(f));
      const DataPolyFn rhs = xray_w(GaussianPolyFn(d, space_oscillator_weighted(f.poly)));
      const auto pts = sample_lines(d, opts.sample_points, rng());
      std::vector<std::complex<double>> va;
      std::vector<std::complex<double>> vb;
      for (const auto& pt : pts) {
        va.push_back(evaluate_on_line(lhs, pt));
        vb.push_back(evaluate_on_line(rhs, pt));
      }
      std::size_t worst = 0;
      const bool ok = detail::samples_agree(va, vb, opts.sample_rtol, worst);
      record(10, ok, [&] {
        return fstr + "; worst sample " + std::to_string(worst) + ": " + std::to_string(std::abs(va[worst] - vb[worst]));
      });
    }
  }
  return results;
}

}  // namespace gxray
