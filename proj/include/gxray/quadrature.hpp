#pragma once

// Gauss rules and floating-point evaluation of the eigenvalue integrals.

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>
#include <variant>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gxray/errors.hpp"
#include "gxray/moments.hpp"
#include "gxray/polyalg.hpp"
#include "gxray/scalars.hpp"
#include "gxray/specfun.hpp"

namespace gxray {

struct QuadRule {
  struct Legendre {};
  struct Jacobi {
    double a;
    double b;
  };

  std::vector<double> nodes;
  std::vector<double> weights;
  std::variant<Legendre, Jacobi> kind;
  int order = 0;

  /// Sum of w_i f(x_i).
  template <class F>
  auto integrate(F&& f) const {
    decltype(f(0.0)) s{};
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

namespace detail {

/// Golub-Welsch for weight (1-x)^a (1+x)^b on [-1, 1].
inline QuadRule build_jacobi_rule(int n, double a, double b) {
  const double ab = a + b;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag(k) = k == 0 ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    const double beta = k == 1 ? 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
                               : 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    sub(k - 1) = std::sqrt(beta);
  }
  const double mass = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                               std::lgamma(ab + 2.0));
  QuadRule rule;
  rule.order = n;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mass;
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    for (int i = 0; i < n; ++i) {
      rule.nodes[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
      const double v0 = es.eigenvectors()(0, i);
      rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
    }
  }
  // Symmetric weights: enforce exact node symmetry, which the eigensolver only gives to rounding.
  if (a == b) {
    for (int i = 0; i < n / 2; ++i) {
      const auto lo = static_cast<std::size_t>(i);
      const auto hi = static_cast<std::size_t>(n - 1 - i);
      const double x = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
      const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
      rule.nodes[lo] = -x;
      rule.nodes[hi] = x;
      rule.weights[lo] = rule.weights[hi] = w;
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  }
  return rule;
}

struct RuleCache {
  std::mutex mutex;
  std::map<std::tuple<int, double, double>, std::shared_ptr<const QuadRule>> table;
};

inline RuleCache& rule_cache() {
  static RuleCache cache;
  return cache;
}

inline std::shared_ptr<const QuadRule> cached_rule(int n, double a, double b) {
  auto& cache = rule_cache();
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.table.try_emplace({n, a, b});
  if (inserted) it->second = std::make_shared<const QuadRule>(build_jacobi_rule(n, a, b));
  return it->second;
}

}  // namespace detail

inline QuadRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_jacobi: need n >= 1");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");
  QuadRule r = *detail::cached_rule(n, a, b);
  r.kind = QuadRule::Jacobi{a, b};
  return r;
}

inline QuadRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need n >= 1");
  QuadRule r = *detail::cached_rule(n, 0.0, 0.0);
  r.kind = QuadRule::Legendre{};
  return r;
}

inline int default_nodes(int k, int l, int d) { return k + l + d + 4; }

/// sqrt(pi) int_{S^{d-1}} (1 - v1^2)^k (1 - v1^2 + i v1 v2)^l dS, exactly.
inline PiScalar lambda_exact(int k, int l, int d) {
  if (k < 0 || l < 0) throw DomainError("lambda_exact: k and l must be non-negative");
  if (d < 2) throw DomainError("lambda_exact: need d >= 2");
  MultiPoly s = MultiPoly::constant(d, CScalar(1));
  s.add_term(Monomial::unit(static_cast<std::size_t>(d), 0, 2), CScalar(-1));
  MultiPoly mixed = s;
  Monomial v1v2(static_cast<std::size_t>(d));
  v1v2[0] = 1;
  v1v2[1] = 1;
  mixed.add_term(v1v2, CScalar::i());
  const CScalar value = integrate_sphere(pow(s, k) * pow(mixed, l), d) * PiScalar::pi_power(1);
  if (!value.im().is_zero()) throw TheoremViolation("lambda_exact: nonzero imaginary part");
  return value.re();
}

/// Tensor-product Gauss-Jacobi evaluation of the polyspherical reduction.
inline double lambda_quad(int k, int l, int d, int n = -1) {
  if (k < 0 || l < 0) throw DomainError("lambda_quad: k and l must be non-negative");
  if (d < 3) throw DomainError("lambda_quad: need d >= 3; use d2_closed_form for d = 2");
  if (n < 0) n = default_nodes(k, l, d);
  const double outer_exp = 0.5 * (d - 3);
  const double inner_exp = 0.5 * (d - 4);
  // (1-v1^2)^{(d-3)/2} is the Jacobi weight; the remaining factor (1-v1^2)^k (s + i v1 sqrt(s) w2)^l
  // needs n >= k + l + 1 for the outer and l/2 + 1 for the inner rule.
  const QuadRule outer = gauss_jacobi(std::max(n, k + l + 1), outer_exp, outer_exp);
  const QuadRule inner = gauss_jacobi(std::max(n, l / 2 + 1), inner_exp, inner_exp);
  std::complex<double> total = 0.0;
  for (std::size_t i = 0; i < outer.nodes.size(); ++i) {
    const double v1 = outer.nodes[i];
    const double s = 1.0 - v1 * v1;
    const double rs = std::sqrt(s);
    std::complex<double> in = 0.0;
    for (std::size_t j = 0; j < inner.nodes.size(); ++j) {
      in += inner.weights[j] * std::pow(std::complex<double>(s, v1 * rs * inner.nodes[j]), l);
    }
    total += outer.weights[i] * std::pow(s, k) * in;
  }
  const double scale = std::sqrt(std::numbers::pi) * pi_to_float(sphere_area(d - 3));
  const double re = scale * total.real();
  const double im = scale * total.imag();
  if (std::abs(im) > 1e-12 * std::abs(re)) throw TheoremViolation("lambda_quad: imaginary part does not vanish");
  return re;
}

/// Single-integral Gegenbauer representation.
inline double lambda_gegenbauer(int k, int l, int d, int n = -1) {
  if (k < 0 || l < 0) throw DomainError("lambda_gegenbauer: k and l must be non-negative");
  if (d < 3) throw DomainError("lambda_gegenbauer: need d >= 3");
  if (n < 0) n = default_nodes(k, l, d);
  const UniPoly c = gegenbauer(l, make_rational(d - 2, 2));
  const double c1 = c.evaluate(1.0);
  if (c1 == 0.0) throw TheoremViolation("lambda_gegenbauer: C_l(1) vanished");
  // With weight (1-x^2)^{(d-3)/2}, s^{l/2} C_l(sqrt s) = sum_j c_j s^{(l+j)/2} has integer powers (c_j = 0 unless j = l mod 2).
  const double w = 0.5 * (d - 3);
  const QuadRule rule = gauss_jacobi(std::max(n, k + l + 1), w, w);
  std::vector<double> coef(static_cast<std::size_t>(l + 1));
  for (int j = 0; j <= l; ++j) coef[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)].get_d();
  const double integral = rule.integrate([&](double x) {
    const double s = 1.0 - x * x;
    double acc = 0.0;
    for (int j = l; j >= 0; j -= 2) acc += coef[static_cast<std::size_t>(j)] * std::pow(s, (l + j) / 2);
    return std::pow(s, k) * acc;
  });
  return std::sqrt(std::numbers::pi) * pi_to_float(sphere_area(d - 2)) * integral / c1;
}

/// |S^{d-3}| int (1-w^2)^{(d-4)/2} pi / sqrt(k + lt) exp(-l^2 w^2 / (4 (k + lt))) dw,
/// lt = l (1 - w^2/2) + (d-3)/2.
inline double main_term(int k, int l, int d, int n = 96) {
  if (k < 0 || l < 0) throw DomainError("main_term: k and l must be non-negative");
  if (k == 0 && l == 0) throw DomainError("main_term: undefined at (0, 0)");
  if (d < 3) throw DomainError("main_term: need d >= 3");
  const double e = 0.5 * (d - 4);
  const QuadRule rule = gauss_jacobi(n, e, e);
  const double integral = rule.integrate([&](double w) {
    const double a = k + l * (1.0 - 0.5 * w * w) + 0.5 * (d - 3);
    if (!(a > 0.0)) throw TheoremViolation("main_term: non-positive Gaussian exponent");
    return std::numbers::pi / std::sqrt(a) * std::exp(-double(l) * l * w * w / (4.0 * a));
  });
  return pi_to_float(sphere_area(d - 3)) * integral;
}

/// Closed form for d = 2: pi^{3/2} C(2k+l, k) / 2^{2k+l-1}.
inline PiScalar d2_closed_form(int k, int l) {
  if (k < 0 || l < 0) throw DomainError("d2_closed_form: k and l must be non-negative");
  const int e = 2 * k + l - 1;
  Rational q(binomial(2 * k + l, k));
  if (e >= 0) {
    q /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(e));
  } else {
    q *= 2;
  }
  return PiScalar(q, 3);
}

/// pi^{3/2} C(2k+l, k) / 2^{l-1}, the variant missing the 2^{2k} factor;
/// it agrees with the eigenvalue only when k = 0.
inline PiScalar d2_closed_form_as_printed(int k, int l) {
  if (k < 0 || l < 0) throw DomainError("d2_closed_form_as_printed: k and l must be non-negative");
  Rational q(binomial(2 * k + l, k));
  if (l >= 1) {
    q /= Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(l - 1));
  } else {
    q *= 2;
  }
  return PiScalar(q, 3);
}

}  // namespace gxray
