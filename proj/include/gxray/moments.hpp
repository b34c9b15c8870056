#pragma once

// Closed-form moment integrals: Gaussian line, unit sphere (unnormalized
// surface measure) and Gaussian full space.

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "gxray/errors.hpp"
#include "gxray/polyalg.hpp"
#include "gxray/scalars.hpp"

namespace gxray {

/// Integral over R of t^m e^{-t^2}.
inline PiScalar gaussian_line_moment(int m) {
  if (m < 0) throw DomainError("gaussian_line_moment: negative power");
  if (m % 2 == 1) return {};
  return half_gamma(m + 1);
}

/// |S^{n}|, the surface measure of the unit n-sphere in R^{n+1}; |S^0| = 2.
inline PiScalar sphere_area(int n) {
  if (n < 0) throw DomainError("sphere_area: negative dimension");
  // 2 pi^{(n+1)/2} / Gamma((n+1)/2)
  return PiScalar(Rational(2), n + 1) / half_gamma(n + 1);
}

namespace detail {

struct SphereMomentCache {
  std::mutex mutex;
  std::map<std::pair<int, std::vector<int>>, PiScalar> table;
};

inline SphereMomentCache& sphere_moment_cache() {
  static SphereMomentCache cache;
  return cache;
}

}  // namespace detail

/// Integral over S^{d-1} of v^alpha dS, with |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2).
inline PiScalar sphere_monomial_moment(std::span<const int> alpha, int d) {
  if (d < 2) throw DomainError("sphere_monomial_moment: need d >= 2");
  if (static_cast<int>(alpha.size()) != d) throw DimensionError("sphere_monomial_moment: alpha must have length d");
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw DomainError("sphere_monomial_moment: negative exponent");
    if (a % 2 == 1) return {};
    total += a;
  }
  std::vector<int> key(alpha.begin(), alpha.end());
  std::sort(key.begin(), key.end());
  auto& cache = detail::sphere_moment_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.table.find({d, key});
    if (it != cache.table.end()) return it->second;
  }
  // 2 prod_i Gamma((a_i+1)/2) / Gamma((d+|a|)/2)
  PiScalar num(Rational(2));
  for (int a : key) num *= half_gamma(a + 1);
  PiScalar value = num / half_gamma(d + total);
  std::lock_guard lock(cache.mutex);
  cache.table.emplace(std::make_pair(d, std::move(key)), value);
  return value;
}

inline PiScalar sphere_monomial_moment(const std::vector<int>& alpha, int d) {
  return sphere_monomial_moment(std::span<const int>(alpha), d);
}

/// Integral over R^n of z^alpha e^{-|z|^2}.
inline PiScalar gaussian_space_moment(std::span<const int> alpha) {
  PiScalar r(Rational(1));
  for (int a : alpha) {
    if (a < 0) throw DomainError("gaussian_space_moment: negative exponent");
    if (a % 2 == 1) return {};
  }
  for (int a : alpha) r *= half_gamma(a + 1);
  return r;
}

inline PiScalar gaussian_space_moment(const std::vector<int>& alpha) {
  return gaussian_space_moment(std::span<const int>(alpha));
}

/// Integrate the d consecutive variables starting at `first` over S^{d-1}.
/// The result drops those variables; the remaining variables keep their order.
inline MultiPoly integrate_sphere(const MultiPoly& p, int first, int d) {
  if (first < 0 || first + d > p.nvars()) {
    throw DimensionError("integrate_sphere: sphere variables out of range");
  }
  const int rest = p.nvars() - d;
  MultiPoly r(rest);
  std::vector<int> alpha(static_cast<std::size_t>(d));
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < d; ++i) alpha[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(first + i)];
    PiScalar mom = sphere_monomial_moment(alpha, d);
    if (mom.is_zero()) continue;
    Monomial out(static_cast<std::size_t>(rest));
    int k = 0;
    for (int i = 0; i < p.nvars(); ++i) {
      if (i >= first && i < first + d) continue;
      out[static_cast<std::size_t>(k++)] = m[static_cast<std::size_t>(i)];
    }
    r.add_term(out, c * mom);
  }
  return r;
}

/// Integral over S^{d-1} of a polynomial in exactly the d sphere variables.
inline CScalar integrate_sphere(const MultiPoly& p, int d) {
  if (p.nvars() != d) throw DimensionError("integrate_sphere: polynomial must have exactly d variables");
  MultiPoly r = integrate_sphere(p, 0, d);
  return r.coefficient(Monomial(0));
}

/// Integral over R of e^{-t^2} p dt, where t is variable `t_slot`. The slot is kept with exponent 0.
inline MultiPoly integrate_gauss_line(const MultiPoly& p, int t_slot) {
  MultiPoly::check_index(p.nvars(), t_slot);
  const auto ts = static_cast<std::size_t>(t_slot);
  MultiPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    PiScalar mom = gaussian_line_moment(m[ts]);
    if (mom.is_zero()) continue;
    Monomial out = m;
    out[ts] = 0;
    r.add_term(out, c * mom);
  }
  return r;
}

}  // namespace gxray
