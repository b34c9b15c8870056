#pragma once

// Eigenbasis ingredients: Laguerre and Gegenbauer polynomials, solid
// harmonics, the Laguerre-times-harmonic eigenfunctions, and the Gauss
// decomposition of homogeneous polynomials into harmonic pieces.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gxray/errors.hpp"
#include "gxray/polyalg.hpp"
#include "gxray/scalars.hpp"
#include "gxray/weighted.hpp"

namespace gxray {

/// Univariate polynomial with rational coefficients; coeffs[i] multiplies x^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b * Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const Rational& s) {
    std::vector<Rational> r(a.c_);
    for (auto& q : r) q *= s;
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(r));
  }

  Rational evaluate(const Rational& x) const {
    Rational s = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + *it;
    return s;
  }
  double evaluate(double x) const {
    double s = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + it->get_d();
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && gxray::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Generalized Laguerre polynomial L_k^{(alpha)} from the three-term recurrence.
inline UniPoly laguerre(int k, const Rational& alpha) {
  if (k < 0) throw DomainError("laguerre: k must be non-negative");
  UniPoly prev({Rational(1)});
  if (k == 0) return prev;
  UniPoly cur({alpha + 1, Rational(-1)});
  for (int j = 1; j < k; ++j) {
    // (j+1) L_{j+1} = (2j+1+alpha-x) L_j - (j+alpha) L_{j-1}
    UniPoly lin({Rational(2 * j + 1) + alpha, Rational(-1)});
    UniPoly next = (lin * cur - prev * Rational(Rational(j) + alpha)) * make_rational(1, j + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Gegenbauer polynomial C_l^{(alpha)}, alpha > 0.
inline UniPoly gegenbauer(int l, const Rational& alpha) {
  if (l < 0) throw DomainError("gegenbauer: l must be non-negative");
  if (sgn(alpha) <= 0) throw DomainError("gegenbauer: alpha must be positive");
  UniPoly prev({Rational(1)});
  if (l == 0) return prev;
  UniPoly cur({Rational(0), Rational(2 * alpha)});
  for (int n = 2; n <= l; ++n) {
    // n C_n = 2x(n+alpha-1) C_{n-1} - (n+2alpha-2) C_{n-2}
    UniPoly two_x({Rational(0), Rational(2 * (Rational(n - 1) + alpha))});
    UniPoly next = (two_x * cur - prev * Rational(Rational(n - 2) + 2 * alpha)) * make_rational(1, n);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// f(rho^2) expanded as a polynomial in z_1..z_d.
inline MultiPoly radial_polynomial(const UniPoly& f, int d) {
  const MultiPoly r2 = rho_squared<CScalar>(d);
  MultiPoly acc(d);
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * r2 + MultiPoly::constant(d, CScalar(*it));
  }
  return acc;
}

/// (z_1 + i z_2)^l in d variables.
inline MultiPoly complex_solid_harmonic(int l, int d) {
  if (d < 2) throw DomainError("complex_solid_harmonic: need d >= 2");
  if (l < 0) throw DomainError("complex_solid_harmonic: l must be non-negative");
  MultiPoly r(d);
  // binomial expansion sum_j C(l,j) i^j z1^{l-j} z2^j
  for (int j = 0; j <= l; ++j) {
    Rational b(binomial(l, j));
    if (j % 4 == 2 || j % 4 == 3) b = -b;
    Monomial m(static_cast<std::size_t>(d));
    m[0] = l - j;
    m[1] = j;
    r.add_term(m, j % 2 == 0 ? CScalar(b) : CScalar(PiScalar(), PiScalar(b)));
  }
  return r;
}

/// rho^l C_l^{(d/2-1)}(z_1/rho): the unnormalized zonal harmonic about e_1.
inline MultiPoly zonal_solid_harmonic(int l, int d) {
  if (d < 3) throw DomainError("zonal_solid_harmonic: need d >= 3");
  if (l < 0) throw DomainError("zonal_solid_harmonic: l must be non-negative");
  const UniPoly c = gegenbauer(l, make_rational(d - 2, 2));
  const MultiPoly r2 = rho_squared<CScalar>(d);
  MultiPoly r(d);
  for (int j = 0; j <= l; ++j) {
    Rational cj = c[static_cast<std::size_t>(j)];
    if (is_zero(cj)) continue;
    if ((l - j) % 2 != 0) throw TheoremViolation("Gegenbauer polynomial has wrong parity");
    MultiPoly term = pow(r2, (l - j) / 2).shifted(Monomial::unit(static_cast<std::size_t>(d), 0, j));
    r += term.scaled(cj);
  }
  return r;
}

/// e^{-rho^2/2} L_k^{(l+d/2-1)}(rho^2) h(z), where h is a harmonic homogeneous polynomial of degree l.
inline GaussianPolyFn eigenfunction(int k, int l, int d, const MultiPoly& harmonic) {
  if (k < 0 || l < 0) throw DomainError("eigenfunction: k and l must be non-negative");
  if (harmonic.nvars() != d) throw DimensionError("eigenfunction: harmonic must have d variables");
  if (harmonic.is_zero() || !harmonic.is_homogeneous() || harmonic.degree() != l) {
    throw PreconditionError("eigenfunction: harmonic must be nonzero and homogeneous of degree l");
  }
  if (!laplacian(harmonic).is_zero()) throw PreconditionError("eigenfunction: input is not harmonic");
  const Rational alpha = Rational(l) + make_rational(d - 2, 2);
  return GaussianPolyFn(d, radial_polynomial(laguerre(k, alpha), d) * harmonic);
}

namespace detail {

/// All exponent vectors of total degree n in d variables, graded-lex order.
inline std::vector<Monomial> monomials_of_degree(int d, int n) {
  std::vector<Monomial> out;
  Monomial m(static_cast<std::size_t>(d));
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == d - 1) {
      m[static_cast<std::size_t>(i)] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[static_cast<std::size_t>(i)] = e;
      self(self, i + 1, left - e);
    }
  };
  if (d == 0) {
    if (n == 0) out.emplace_back(0);
    return out;
  }
  rec(rec, 0, n);
  return out;
}

/// Solve A x = b exactly, with A a square rational matrix and b complex-PiScalar.
inline std::vector<CScalar> solve_rational_system(std::vector<std::vector<Rational>> a, std::vector<CScalar> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) throw TheoremViolation("singular system in Gauss decomposition");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= b[col] * f;
    }
  }
  return b;
}

}  // namespace detail

/// Write a homogeneous q of degree n as sum_j rho^{2j} h_j with each h_j harmonic
/// homogeneous of degree n-2j. Zero components are omitted; the zero polynomial
/// decomposes into an empty list.
inline std::vector<std::pair<int, MultiPoly>> gauss_decompose(const MultiPoly& q, int d) {
  if (q.nvars() != d) throw DimensionError("gauss_decompose: polynomial must have d variables");
  if (!q.is_homogeneous()) throw PreconditionError("gauss_decompose: input must be homogeneous");
  std::vector<std::pair<int, MultiPoly>> out;
  const MultiPoly r2 = rho_squared<CScalar>(d);
  MultiPoly rest = q;
  int j = 0;
  while (!rest.is_zero()) {
    const int n = rest.degree();
    if (n < 2) {
      out.emplace_back(j, rest);
      break;
    }
    // rest = h + rho^2 r with Delta h = 0, i.e. Delta(rho^2 r) = Delta(rest)
    const auto basis = detail::monomials_of_degree(d, n - 2);
    std::vector<std::vector<Rational>> a(basis.size(), std::vector<Rational>(basis.size()));
    std::map<Monomial, std::size_t, GradedLex> row_of;
    for (std::size_t i = 0; i < basis.size(); ++i) row_of.emplace(basis[i], i);
    for (std::size_t col = 0; col < basis.size(); ++col) {
      RationalPoly img = laplacian(rho_squared<Rational>(d) * RationalPoly::monomial(basis[col], Rational(1)));
      for (const auto& [m, c] : img.terms()) a[row_of.at(m)][col] = c;
    }
    std::vector<CScalar> rhs(basis.size());
    const MultiPoly lap = laplacian(rest);
    for (const auto& [m, c] : lap.terms()) rhs[row_of.at(m)] = c;
    const auto x = detail::solve_rational_system(std::move(a), std::move(rhs));
    MultiPoly r(d);
    for (std::size_t i = 0; i < basis.size(); ++i) r.add_term(basis[i], x[i]);
    MultiPoly h = rest - r2 * r;
    if (!h.is_zero()) out.emplace_back(j, std::move(h));
    rest = std::move(r);
    ++j;
  }
  return out;
}

}  // namespace gxray
