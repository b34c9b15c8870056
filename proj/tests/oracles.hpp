#pragma once

// Independent numerical references for the tests. They use Boost adaptive
// quadrature and never touch the library's Gauss rules or Gamma closed forms.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gxray/moments.hpp"
#include "gxray/polyalg.hpp"

namespace oracle {

template <class F>
double integrate(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

/// int_{S^{d-1}} v^alpha dS in hyperspherical angles, as a product of 1-D integrals.
inline double sphere_moment(const std::vector<int>& alpha) {
  const int d = static_cast<int>(alpha.size());
  constexpr double pi = std::numbers::pi;
  double result = 1.0;
  // v_j = cos(t_j) prod_{i<j} sin(t_i) for j < d-1; the last two share the azimuth.
  int tail = 0;
  for (int j = d - 1; j >= 0; --j) tail += alpha[static_cast<std::size_t>(j)];
  for (int j = 0; j + 2 < d; ++j) {
    tail -= alpha[static_cast<std::size_t>(j)];
    const int a = alpha[static_cast<std::size_t>(j)];
    const int s = tail + (d - 2 - j);
    result *= integrate([&](double t) { return std::pow(std::cos(t), a) * std::pow(std::sin(t), s); }, 0.0, pi);
  }
  const int a = alpha[static_cast<std::size_t>(d - 2)];
  const int b = alpha[static_cast<std::size_t>(d - 1)];
  result *= integrate([&](double t) { return std::pow(std::cos(t), a) * std::pow(std::sin(t), b); }, 0.0, 2.0 * pi);
  return result;
}

/// sqrt(pi) int_{S^{d-1}} (1-v1^2)^k (1-v1^2+i v1 v2)^l dS for d = 3 via spherical angles.
inline double lambda_d3(int k, int l) {
  constexpr double pi = std::numbers::pi;
  const double val = integrate(
      [&](double th) {
        const double inner = integrate(
            [&](double ph) {
              const double v1 = std::cos(th);
              const double v2 = std::sin(th) * std::cos(ph);
              const double s = 1.0 - v1 * v1;
              return (std::pow(s, k) * std::pow(std::complex<double>(s, v1 * v2), l)).real();
            },
            0.0, 2.0 * pi);
        return inner * std::sin(th);
      },
      0.0, pi);
  return std::sqrt(pi) * val;
}

/// Main term from the two-dimensional form: |S^{d-3}| int w int_R sqrt(pi) exp(i l v w - v^2 (k + lt(w))) dv,
/// for d in {3, 4}. The inner integral is done numerically (no closed Gaussian).
inline double main_term_2d(int k, int l, int d) {
  constexpr double pi = std::numbers::pi;
  auto inner = [&](double w) {
    const double a = k + l * (1.0 - 0.5 * w * w) + 0.5 * (d - 3);
    const double half = 12.0 / std::sqrt(a);
    return std::sqrt(pi) * integrate([&](double v) { return std::cos(l * v * w) * std::exp(-a * v * v); }, -half, half);
  };
  if (d == 3) {
    // weight (1-w^2)^{-1/2}: substitute w = sin(u)
    return 2.0 * integrate([&](double u) { return inner(std::sin(u)); }, -pi / 2, pi / 2);
  }
  if (d == 4) return 2.0 * pi * integrate(inner, -1.0, 1.0);
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace oracle
