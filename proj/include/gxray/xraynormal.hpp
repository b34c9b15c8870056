#pragma once

// Gaussian-weighted X-ray transform, its adjoint, and the normal operator,
// acting exactly on Gaussian-weighted polynomials.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gxray/errors.hpp"
#include "gxray/moments.hpp"
#include "gxray/polyalg.hpp"
#include "gxray/scalars.hpp"
#include "gxray/weighted.hpp"

namespace gxray {

using RationalMatrix = std::vector<std::vector<Rational>>;

// ---------------------------------------------------------------------------
// Forward transform and backprojection

/// I0w(e^{-rho^2/2} q) = e^{-|p|^2/2} int e^{-t^2} q(p + t v) dt.
inline DataPolyFn xray_w(const GaussianPolyFn& f) {
  const int d = f.d;
  const int slots = 2 * d + 1;
  std::vector<MultiPoly> images;
  images.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    MultiPoly im = MultiPoly::variable(slots, d + i);
    Monomial tv(static_cast<std::size_t>(slots));
    tv[static_cast<std::size_t>(i)] = 1;
    tv[static_cast<std::size_t>(2 * d)] = 1;
    im.add_term(tv, CScalar(1));
    images.push_back(std::move(im));
  }
  MultiPoly lifted = substitute(f.poly, images);
  return DataPolyFn(d, integrate_gauss_line(lifted, 2 * d));
}

namespace detail {

inline const mpz_class& factorial(int n) {
  static std::mutex mutex;
  static std::vector<mpz_class> table{1};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) table.push_back(table.back() * static_cast<unsigned long>(table.size()));
  return table[static_cast<std::size_t>(n)];
}

/// Rational part of a PiScalar known to be q * pi^(m/2).
inline Rational rational_part(const PiScalar& s, int half_pi_exp) {
  if (s.is_zero()) return 0;
  if (!s.is_monomial() || s.terms()[0].first != half_pi_exp) {
    throw TheoremViolation("moment has unexpected pi power: " + s.to_string());
  }
  return s.terms()[0].second;
}

/// Every nonzero even sphere moment in dimension d is rational * pi^(2*floor(d/2)/2).
inline int sphere_pi_exp(int d) { return 2 * (d / 2); }

/// Enumerate mu with |mu| = r and mu_i = a_i (mod 2); calls fn(mu, multinomial(r; mu)).
template <class Fn>
void for_each_parity_composition(const std::vector<int>& a, int r, Fn&& fn) {
  const int d = static_cast<int>(a.size());
  std::vector<int> mu(a.size());
  int base = 0;
  for (int i = 0; i < d; ++i) {
    mu[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] % 2;
    base += mu[static_cast<std::size_t>(i)];
  }
  if (r < base || (r - base) % 2 != 0) return;
  const int half = (r - base) / 2;
  std::vector<int> par = mu;
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == d - 1) {
      mu[static_cast<std::size_t>(i)] = par[static_cast<std::size_t>(i)] + 2 * left;
      mpz_class denom = 1;
      for (int x : mu) denom *= factorial(x);
      mpz_class mult = factorial(r) / denom;
      fn(mu, mult);
      return;
    }
    for (int e = left; e >= 0; --e) {
      mu[static_cast<std::size_t>(i)] = par[static_cast<std::size_t>(i)] + 2 * e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, half);
}

/// Rational part of int_{S^{d-1}} v^a (z.v)^r dS as a polynomial in z:
/// sum over |mu| = r of multinomial(r; mu) z^mu M(a + mu) / pi^{floor(d/2)}.
template <class Fn>
void projected_moment(const std::vector<int>& a, int r, Fn&& emit) {
  const int d = static_cast<int>(a.size());
  const int pexp = sphere_pi_exp(d);
  std::vector<int> sum(a.size());
  for_each_parity_composition(a, r, [&](const std::vector<int>& mu, const mpz_class& mult) {
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + mu[i];
    Rational m = rational_part(sphere_monomial_moment(sum, d), pexp);
    emit(mu, Rational(m * mult));
  });
}

/// Iterate sub-multi-indices b <= a, passing prod_i C(a_i, b_i).
template <class Fn>
void for_each_submultiindex(const std::vector<int>& a, Fn&& fn) {
  std::vector<int> b(a.size(), 0);
  const std::size_t n = a.size();
  while (true) {
    mpz_class c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= binomial(a[i], b[i]);
    fn(b, c);
    std::size_t i = 0;
    while (i < n && b[i] == a[i]) b[i++] = 0;
    if (i == n) return;
    ++b[i];
  }
}

}  // namespace detail

/// (I0w)* (e^{-|p|^2/2} r(v,p)) = e^{-rho^2/2} int_{S^{d-1}} r(v, z - (z.v) v) dv.
inline GaussianPolyFn backproj_w(const DataPolyFn& g) {
  const int d = g.d;
  const auto ud = static_cast<std::size_t>(d);
  const PiScalar pi_factor = PiScalar::pi_power(detail::sphere_pi_exp(d));
  MultiPoly out(d);
  std::vector<int> beta(ud);
  std::vector<int> gamma(ud);
  std::vector<int> a(ud);
  for (const auto& [m, c] : g.poly.terms()) {
    if (m[static_cast<std::size_t>(2 * d)] != 0) {
      throw PreconditionError("backproj_w: data function still depends on the line parameter");
    }
    for (std::size_t i = 0; i < ud; ++i) {
      beta[i] = m[i];
      gamma[i] = m[ud + i];
    }
    // prod_i (z_i - s v_i)^{gamma_i}, s = z.v, expanded over delta <= gamma
    RationalPoly acc(d);
    detail::for_each_submultiindex(gamma, [&](const std::vector<int>& delta, const mpz_class& binom) {
      int r = 0;
      for (std::size_t i = 0; i < ud; ++i) {
        a[i] = beta[i] + delta[i];
        r += delta[i];
      }
      Rational sign_binom(r % 2 == 0 ? mpz_class(binom) : mpz_class(-binom));
      Monomial rest(ud);
      for (std::size_t i = 0; i < ud; ++i) rest[i] = gamma[i] - delta[i];
      detail::projected_moment(a, r, [&](const std::vector<int>& mu, const Rational& w) {
        Monomial zm(ud);
        for (std::size_t i = 0; i < ud; ++i) zm[i] = rest[i] + mu[i];
        acc.add_term(zm, Rational(w * sign_binom));
      });
    });
    const CScalar scale = c * pi_factor;
    for (const auto& [zm, q] : acc.terms()) out.add_term(zm, scale * q);
  }
  return GaussianPolyFn(d, std::move(out));
}

// ---------------------------------------------------------------------------
// Normal operator

namespace detail {

/// Exponent vectors packed 8 bits per variable (d <= 8, exponents <= 255).
using PackedMonomial = std::uint64_t;

inline PackedMonomial pack(const std::vector<int>& e) {
  PackedMonomial k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255) throw DomainError("normal operator: exponent out of supported range");
    k |= static_cast<PackedMonomial>(e[i]) << (8 * i);
  }
  return k;
}

inline int unpack_exponent(PackedMonomial k, std::size_t i) { return static_cast<int>((k >> (8 * i)) & 0xffu); }

using PackedPoly = std::vector<std::pair<PackedMonomial, Rational>>;

/// Rational part of N(e^{-rho^2/2} z^alpha) / e^{-rho^2/2}, divided by pi^{1/2 + floor(d/2)}.
///
/// With u = t - z.v the integrand is q(z + u v); expanding z^alpha around z
/// gives sum_b C(alpha,b) z^{alpha-b} u^{|b|} v^b, and
/// int e^{-t^2} u^m dt = sum_j C(m,j) mu_j (-z.v)^{m-j}.
inline PackedPoly normal_monomial_image(const std::vector<int>& alpha) {
  const auto ud = alpha.size();
  std::unordered_map<PackedMonomial, Rational> acc;
  std::vector<int> rest(ud);
  std::vector<int> zm(ud);
  for_each_submultiindex(alpha, [&](const std::vector<int>& b, const mpz_class& binom) {
    int m = 0;
    for (std::size_t i = 0; i < ud; ++i) {
      rest[i] = alpha[i] - b[i];
      m += b[i];
    }
    for (int j = 0; j <= m; j += 2) {
      // line moment mu_j / sqrt(pi)
      Rational lm = rational_part(gaussian_line_moment(j), 1);
      Rational coef = lm * binom * binomial(m, j);
      if ((m - j) % 2 == 1) coef = -coef;
      projected_moment(b, m - j, [&](const std::vector<int>& mu, const Rational& w) {
        for (std::size_t i = 0; i < ud; ++i) zm[i] = rest[i] + mu[i];
        auto [it, inserted] = acc.try_emplace(pack(zm), 0);
        it->second += coef * w;
      });
    }
  });
  PackedPoly out;
  out.reserve(acc.size());
  for (auto& [k, q] : acc) {
    if (!is_zero(q)) out.emplace_back(k, std::move(q));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

struct NormalImageCache {
  std::mutex mutex;
  std::map<std::pair<int, std::vector<int>>, std::shared_ptr<const PackedPoly>> table;
};

inline NormalImageCache& normal_image_cache() {
  static NormalImageCache cache;
  return cache;
}

/// Image of a monomial with exponents sorted in decreasing order, memoized per (d, alpha).
inline std::shared_ptr<const PackedPoly> sorted_monomial_image(const std::vector<int>& sorted_alpha) {
  auto& cache = normal_image_cache();
  const int d = static_cast<int>(sorted_alpha.size());
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.table.find({d, sorted_alpha});
    if (it != cache.table.end()) return it->second;
  }
  auto img = std::make_shared<const PackedPoly>(normal_monomial_image(sorted_alpha));
  std::lock_guard lock(cache.mutex);
  return cache.table.emplace(std::make_pair(d, sorted_alpha), img).first->second;
}

/// Accumulate coeff * T(z^alpha) into acc, using T commuting with coordinate permutations.
inline void accumulate_monomial_image(const Monomial& alpha, const Rational& coeff,
                                      std::unordered_map<PackedMonomial, Rational>& acc) {
  const std::size_t d = alpha.size();
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return alpha[x] > alpha[y]; });
  std::vector<int> sorted(d);
  for (std::size_t k = 0; k < d; ++k) sorted[k] = alpha[order[k]];
  const auto img = sorted_monomial_image(sorted);
  for (const auto& [key, q] : *img) {
    PackedMonomial out = 0;
    for (std::size_t k = 0; k < d; ++k) {
      out |= static_cast<PackedMonomial>(unpack_exponent(key, k)) << (8 * order[k]);
    }
    auto [it, inserted] = acc.try_emplace(out, 0);
    it->second += coeff * q;
  }
}

}  // namespace detail

/// N(f) = (I0w)* I0w f, computed by a fused exact kernel that integrates the
/// line parameter and the sphere in one pass per monomial.
inline GaussianPolyFn normal_apply(const GaussianPolyFn& f) {
  const int d = f.d;
  if (d > 8) throw DomainError("normal_apply: supports d <= 8");
  const auto ud = static_cast<std::size_t>(d);
  // Split coefficients into rational layers keyed by (pi exponent, imaginary?).
  std::map<std::pair<int, int>, std::unordered_map<detail::PackedMonomial, Rational>> layers;
  for (const auto& [m, c] : f.poly.terms()) {
    for (int part = 0; part < 2; ++part) {
      const PiScalar& s = part == 0 ? c.re() : c.im();
      for (const auto& [e, q] : s.terms()) detail::accumulate_monomial_image(m, q, layers[{e, part}]);
    }
  }
  const int base_exp = 1 + detail::sphere_pi_exp(d);
  MultiPoly out(d);
  Monomial mono(ud);
  for (const auto& [key, acc] : layers) {
    const auto& [e, part] = key;
    for (const auto& [packed, q] : acc) {
      if (is_zero(q)) continue;
      for (std::size_t i = 0; i < ud; ++i) mono[i] = detail::unpack_exponent(packed, i);
      PiScalar s(q, e + base_exp);
      out.add_term(mono, part == 0 ? CScalar(s) : CScalar(PiScalar(), s));
    }
  }
  return GaussianPolyFn(d, std::move(out));
}

/// N(f) through the two separate transforms; slower, used as a cross-check.
inline GaussianPolyFn normal_apply_composed(const GaussianPolyFn& f) { return backproj_w(xray_w(f)); }

/// Top-degree part of N: sqrt(pi) int_{S^{d-1}} q(z - (z.v) v) dv.
inline MultiPoly normal_leading(const MultiPoly& q, int d) {
  if (q.nvars() != d) throw DimensionError("normal_leading: polynomial must have d variables");
  const int slots = 2 * d + 1;
  MultiPoly lifted(slots);
  const PiScalar sqrt_pi = PiScalar::pi_power(1);
  for (const auto& [m, c] : q.terms()) {
    Monomial mm(static_cast<std::size_t>(slots));
    for (int i = 0; i < d; ++i) mm[static_cast<std::size_t>(d + i)] = m[static_cast<std::size_t>(i)];
    lifted.add_term(mm, c * sqrt_pi);
  }
  return backproj_w(DataPolyFn(d, std::move(lifted))).poly;
}

// ---------------------------------------------------------------------------
// Vector fields on the line manifold

/// P_i = d/dp_i - v_i (v . d/dp), tangent to the fibres v^perp.
inline DataPolyFn vector_field_P(const DataPolyFn& g, int i) {
  const int d = g.d;
  if (i < 0 || i >= d) throw DimensionError("vector_field_P: index out of range");
  MultiPoly normal(g.poly.nvars());
  for (int j = 0; j < d; ++j) normal += times_variable(partial(g.poly, d + j), j);
  return DataPolyFn(d, partial(g.poly, d + i) - times_variable(normal, i));
}

/// Delta_p = sum_i P_i^2, the Laplacian on each fibre v^perp.
inline DataPolyFn laplacian_p(const DataPolyFn& g) {
  MultiPoly acc(g.poly.nvars());
  for (int i = 0; i < g.d; ++i) acc += vector_field_P(vector_field_P(g, i), i).poly;
  return DataPolyFn(g.d, std::move(acc));
}

/// p . d/dp.
inline DataPolyFn dilation_p(const DataPolyFn& g) {
  MultiPoly acc(g.poly.nvars());
  for (int i = 0; i < g.d; ++i) acc += times_variable(partial(g.poly, g.d + i), g.d + i);
  return DataPolyFn(g.d, std::move(acc));
}

/// P_i acting on e^{-|p|^2/2} r, divided by the weight: P_i r - (p_i - v_i (v.p)) r.
inline DataPolyFn weighted_P(const DataPolyFn& g, int i) {
  const int d = g.d;
  const int slots = g.poly.nvars();
  MultiPoly proj = MultiPoly::variable(slots, d + i);
  for (int j = 0; j < d; ++j) {
    Monomial m(static_cast<std::size_t>(slots));
    m[static_cast<std::size_t>(i)] += 1;
    m[static_cast<std::size_t>(j)] += 1;
    m[static_cast<std::size_t>(d + j)] += 1;
    proj.add_term(m, CScalar(-1));
  }
  return DataPolyFn(d, vector_field_P(g, i).poly - proj * g.poly);
}

/// e^{|p|^2/2} (-Delta_p + |p|^2 + 1) e^{-|p|^2/2} r, applied literally through the product rule.
inline DataPolyFn data_oscillator_weighted(const DataPolyFn& g) {
  const int d = g.d;
  const int slots = g.poly.nvars();
  MultiPoly acc(slots);
  for (int i = 0; i < d; ++i) acc -= weighted_P(weighted_P(g, i), i).poly;
  MultiPoly p2(slots);
  for (int i = 0; i < d; ++i) p2.add_term(Monomial::unit(static_cast<std::size_t>(slots), static_cast<std::size_t>(d + i), 2), CScalar(1));
  acc += p2 * g.poly;
  acc += g.poly;
  return DataPolyFn(d, std::move(acc));
}

/// e^{rho^2/2} (-Delta + rho^2) e^{-rho^2/2} q, applied literally: d_i -> d_i - z_i.
inline MultiPoly space_oscillator_weighted(const MultiPoly& q) {
  const int d = q.nvars();
  MultiPoly acc(d);
  for (int i = 0; i < d; ++i) {
    MultiPoly once = partial(q, i) - times_variable(q, i);
    acc -= partial(once, i) - times_variable(once, i);
  }
  acc += rho_squared<CScalar>(d) * q;
  return acc;
}

// ---------------------------------------------------------------------------
// Rotations

inline RationalMatrix identity_matrix(int d) {
  RationalMatrix a(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)));
  for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return a;
}

/// Rotation in the (i, j) plane with (A z)_i = c z_i + s z_j; requires c^2 + s^2 = 1.
inline RationalMatrix givens(int d, int i, int j, const Rational& c, const Rational& s) {
  if (c * c + s * s != 1) throw PreconditionError("givens: c^2 + s^2 must equal 1");
  RationalMatrix a = identity_matrix(d);
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  a[ui][ui] = c;
  a[ui][uj] = s;
  a[uj][ui] = -s;
  a[uj][uj] = c;
  return a;
}

/// (A z)_i = sign_i z_{perm_i}.
inline RationalMatrix signed_permutation(const std::vector<int>& perm, const std::vector<int>& signs) {
  const auto d = perm.size();
  RationalMatrix a(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) a[i][static_cast<std::size_t>(perm[i])] = signs[i] < 0 ? -1 : 1;
  return a;
}

inline RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  const auto n = a.size();
  RationalMatrix c(n, std::vector<Rational>(b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix t(a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

inline bool is_orthogonal(const RationalMatrix& a) {
  if (a.empty()) return false;
  for (const auto& row : a) {
    if (row.size() != a.size()) return false;
  }
  return matmul(transpose(a), a) == identity_matrix(static_cast<int>(a.size()));
}

namespace detail {

/// Images z_i -> sum_j A_ij z_j placed into `slots` variables starting at `offset`.
inline std::vector<MultiPoly> linear_images(const RationalMatrix& a, int slots, int offset) {
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < a.size(); ++i) {
    MultiPoly im(slots);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (is_zero(a[i][j])) continue;
      im.add_term(Monomial::unit(static_cast<std::size_t>(slots), static_cast<std::size_t>(offset) + j), CScalar(a[i][j]));
    }
    images.push_back(std::move(im));
  }
  return images;
}

}  // namespace detail

/// (R_A)^* f: poly(z) -> poly(A z). A must be exactly orthogonal.
inline GaussianPolyFn rotation_pullback(const GaussianPolyFn& f, const RationalMatrix& a) {
  if (static_cast<int>(a.size()) != f.d || !is_orthogonal(a)) {
    throw PreconditionError("rotation_pullback: need an orthogonal d x d matrix");
  }
  return GaussianPolyFn(f.d, substitute(f.poly, detail::linear_images(a, f.d, 0)));
}

/// (R_A^G)^* g: poly(v, p) -> poly(A v, A p).
inline DataPolyFn rotation_pullback_data(const DataPolyFn& g, const RationalMatrix& a) {
  const int d = g.d;
  if (static_cast<int>(a.size()) != d || !is_orthogonal(a)) {
    throw PreconditionError("rotation_pullback_data: need an orthogonal d x d matrix");
  }
  const int slots = 2 * d + 1;
  auto vi = detail::linear_images(a, slots, 0);
  auto pi = detail::linear_images(a, slots, d);
  std::vector<MultiPoly> images;
  images.insert(images.end(), vi.begin(), vi.end());
  images.insert(images.end(), pi.begin(), pi.end());
  images.push_back(MultiPoly::variable(slots, 2 * d));
  return DataPolyFn(d, substitute(g.poly, images));
}

// ---------------------------------------------------------------------------
// Inner product and sampling

/// <f, g> = int f.poly conj(g.poly) e^{-rho^2} dz.
inline CScalar inner_product(const GaussianPolyFn& f, const GaussianPolyFn& g) {
  if (f.d != g.d) throw DimensionError("inner_product: dimension mismatch");
  CScalar s;
  std::vector<int> alpha(static_cast<std::size_t>(f.d));
  for (const auto& [ma, ca] : f.poly.terms()) {
    for (const auto& [mb, cb] : g.poly.terms()) {
      bool odd = false;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        alpha[i] = ma[i] + mb[i];
        odd = odd || (alpha[i] % 2 == 1);
      }
      if (odd) continue;
      s += ca * cb.conj() * gaussian_space_moment(alpha);
    }
  }
  return s;
}

/// A point (v, p) on the line manifold: |v| = 1, v.p = 0.
struct LinePoint {
  std::vector<double> v;
  std::vector<double> p;
};

/// v uniform on S^{d-1} (normalized Gaussian), p = w - (w.v) v for Gaussian w.
inline std::vector<LinePoint> sample_lines(int d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<LinePoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int n = 0; n < count; ++n) {
    LinePoint pt{std::vector<double>(static_cast<std::size_t>(d)), std::vector<double>(static_cast<std::size_t>(d))};
    double norm2 = 0.0;
    for (auto& x : pt.v) {
      x = normal(rng);
      norm2 += x * x;
    }
    const double norm = std::sqrt(norm2);
    for (auto& x : pt.v) x /= norm;
    double dot = 0.0;
    for (std::size_t i = 0; i < pt.p.size(); ++i) {
      pt.p[i] = normal(rng);
      dot += pt.p[i] * pt.v[i];
    }
    for (std::size_t i = 0; i < pt.p.size(); ++i) pt.p[i] -= dot * pt.v[i];
    out.push_back(std::move(pt));
  }
  return out;
}

/// Value of e^{-|p|^2/2} poly(v, p) at a line point.
inline std::complex<double> evaluate_on_line(const DataPolyFn& g, const LinePoint& pt) {
  std::vector<std::complex<double>> x(static_cast<std::size_t>(2 * g.d + 1), 0.0);
  double p2 = 0.0;
  for (int i = 0; i < g.d; ++i) {
    x[static_cast<std::size_t>(i)] = pt.v[static_cast<std::size_t>(i)];
    x[static_cast<std::size_t>(g.d + i)] = pt.p[static_cast<std::size_t>(i)];
    p2 += pt.p[static_cast<std::size_t>(i)] * pt.p[static_cast<std::size_t>(i)];
  }
  return std::exp(-0.5 * p2) * evaluate(g.poly, x);
}

/// Value of e^{-rho^2/2} poly(z).
inline std::complex<double> evaluate_weighted(const GaussianPolyFn& f, const std::vector<double>& z) {
  double r2 = 0.0;
  for (double x : z) r2 += x * x;
  return std::exp(-0.5 * r2) * evaluate(f.poly, z);
}

}  // namespace gxray
