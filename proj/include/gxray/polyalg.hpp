#pragma once

// Sparse multivariate polynomials over an exact coefficient ring, and the
// differential operators that act on the polynomial parts of Gaussian-weighted
// functions.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gxray/errors.hpp"
#include "gxray/scalars.hpp"

namespace gxray {

/// Exponent vector of a monomial. Length equals the number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<int> e) : e_(e) {}
  explicit Monomial(std::vector<int> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  static Monomial unit(std::size_t nvars, std::size_t i, int power = 1) {
    Monomial m(nvars);
    m.e_[i] = power;
    return m;
  }

  friend Monomial operator+(Monomial a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> e_;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// larger exponent on an earlier variable first (z1^2 < z1 z2 < z2^2).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree();
    int db = b.degree();
    if (da != db) return da < db;
    return b.exponents() < a.exponents();
  }
};

template <class Coeff>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coeff, GradedLex>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw DimensionError("negative variable count");
  }

  static Polynomial constant(int nvars, const Coeff& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(static_cast<std::size_t>(nvars)), c);
    return p;
  }
  static Polynomial variable(int nvars, int i) {
    check_index(nvars, i);
    Polynomial p(nvars);
    p.add_term(Monomial::unit(static_cast<std::size_t>(nvars), static_cast<std::size_t>(i)), Coeff(1));
    return p;
  }
  static Polynomial monomial(Monomial m, const Coeff& c) {
    Polynomial p(static_cast<int>(m.size()));
    p.add_term(std::move(m), c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of `m` (zero if absent).
  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
  }

  /// Part of total degree exactly n.
  Polynomial homogeneous_part(int n) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() == n) r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (static_cast<int>(m.size()) != nvars_) throw DimensionError("monomial length does not match nvars");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Multiply every coefficient by a scalar the coefficient ring accepts.
  template <class S>
  Polynomial scaled(const S& s) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
      Coeff v = c * s;
      if (!is_zero_coeff(v)) r.terms_.emplace_hint(r.terms_.end(), m, std::move(v));
    }
    return r;
  }

  /// Multiply by a single monomial.
  Polynomial shifted(const Monomial& m) const {
    Polynomial r(nvars_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm + m, c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void check_same(const Polynomial& o) const {
    if (nvars_ != o.nvars_) {
      throw DimensionError("polynomial nvars mismatch: " + std::to_string(nvars_) + " vs " +
                           std::to_string(o.nvars_));
    }
  }
  static void check_index(int nvars, int i) {
    if (i < 0 || i >= nvars) {
      throw DimensionError("variable index " + std::to_string(i) + " out of range for " +
                           std::to_string(nvars) + " variables");
    }
  }

 private:
  static bool is_zero_coeff(const Coeff& c) { return gxray::is_zero(c); }

  int nvars_ = 0;
  TermMap terms_;
};

using MultiPoly = Polynomial<CScalar>;
using RationalPoly = Polynomial<Rational>;

/// Promote a rational polynomial to complex PiScalar coefficients.
inline MultiPoly to_multipoly(const RationalPoly& p) {
  MultiPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, CScalar(c));
  return r;
}

template <class Coeff>
Polynomial<Coeff> poly_add(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
  return a + b;
}
template <class Coeff>
Polynomial<Coeff> poly_mul(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
  return a * b;
}
template <class Coeff, class S>
Polynomial<Coeff> poly_scale(const Polynomial<Coeff>& a, const S& s) {
  return a.scaled(s);
}

template <class Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& p, int n) {
  if (n < 0) throw DomainError("negative polynomial power");
  Polynomial<Coeff> r = Polynomial<Coeff>::constant(p.nvars(), Coeff(1));
  Polynomial<Coeff> base = p;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return r;
}

/// Exact partial derivative with respect to variable i.
template <class Coeff>
Polynomial<Coeff> partial(const Polynomial<Coeff>& p, int i) {
  Polynomial<Coeff>::check_index(p.nvars(), i);
  Polynomial<Coeff> r(p.nvars());
  const auto ui = static_cast<std::size_t>(i);
  for (const auto& [m, c] : p.terms()) {
    int e = m[ui];
    if (e == 0) continue;
    Monomial mm = m;
    mm[ui] = e - 1;
    r.add_term(mm, c * Rational(e));
  }
  return r;
}

/// Multiply by variable i.
template <class Coeff>
Polynomial<Coeff> times_variable(const Polynomial<Coeff>& p, int i) {
  Polynomial<Coeff>::check_index(p.nvars(), i);
  return p.shifted(Monomial::unit(static_cast<std::size_t>(p.nvars()), static_cast<std::size_t>(i)));
}

/// Composition p(images[0], ..., images[n-1]); every image lives in one target variable set.
template <class Coeff>
Polynomial<Coeff> substitute(const Polynomial<Coeff>& p, std::span<const Polynomial<Coeff>> images) {
  if (static_cast<int>(images.size()) != p.nvars()) {
    throw DimensionError("substitute: need one image per variable");
  }
  if (images.empty()) return p;
  const int target = images[0].nvars();
  for (const auto& im : images) {
    if (im.nvars() != target) throw DimensionError("substitute: images disagree on target nvars");
  }
  std::vector<std::vector<Polynomial<Coeff>>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(Polynomial<Coeff>::constant(target, Coeff(1)));
  }
  auto power_of = [&](std::size_t i, int e) -> const Polynomial<Coeff>& {
    while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][static_cast<std::size_t>(e)];
  };
  Polynomial<Coeff> r(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial<Coeff> term = Polynomial<Coeff>::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) term *= power_of(i, m[i]);
    }
    r += term;
  }
  return r;
}

template <class Coeff>
Polynomial<Coeff> substitute(const Polynomial<Coeff>& p, const std::vector<Polynomial<Coeff>>& images) {
  return substitute(p, std::span<const Polynomial<Coeff>>(images));
}

/// Sum of second partials.
template <class Coeff>
Polynomial<Coeff> laplacian(const Polynomial<Coeff>& p) {
  Polynomial<Coeff> r(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) r += partial(partial(p, i), i);
  return r;
}

/// Euler operator sum_i z_i d/dz_i; multiplies each term by its total degree.
template <class Coeff>
Polynomial<Coeff> dilation(const Polynomial<Coeff>& p) {
  Polynomial<Coeff> r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, c * Rational(m.degree()));
  return r;
}

/// Sum of squares of the variables.
template <class Coeff = CScalar>
Polynomial<Coeff> rho_squared(int nvars) {
  Polynomial<Coeff> r(nvars);
  for (int i = 0; i < nvars; ++i) {
    r.add_term(Monomial::unit(static_cast<std::size_t>(nvars), static_cast<std::size_t>(i), 2), Coeff(1));
  }
  return r;
}

/// Angular momentum z_i d/dz_j - z_j d/dz_i.
template <class Coeff>
Polynomial<Coeff> angular_momentum(const Polynomial<Coeff>& p, int i, int j) {
  return times_variable(partial(p, j), i) - times_variable(partial(p, i), j);
}

/// -(1/2) sum_{i,j} (z_i d_j - z_j d_i)^2, the spherical Laplacian extended by homogeneity.
template <class Coeff>
Polynomial<Coeff> spherical_laplacian_conj(const Polynomial<Coeff>& p) {
  Polynomial<Coeff> acc(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) {
    for (int j = i + 1; j < p.nvars(); ++j) acc += angular_momentum(angular_momentum(p, i, j), i, j);
  }
  // the (i,j) and (j,i) terms are equal, so -(1/2) * 2 * sum_{i<j}
  return -acc;
}

/// Conjugated harmonic oscillator: (-Delta + rho^2)(e^{-rho^2/2} p) = e^{-rho^2/2} hosc_conj(p).
template <class Coeff>
Polynomial<Coeff> hosc_conj(const Polynomial<Coeff>& p, int d) {
  if (p.nvars() != d) throw DimensionError("hosc_conj: polynomial must have d variables");
  return -laplacian(p) + dilation(p).scaled(Rational(2)) + p.scaled(Rational(d));
}

/// The vector field (Bz).grad applied to p, for a d x d matrix B.
template <class Coeff>
Polynomial<Coeff> linear_vector_field(const Polynomial<Coeff>& p, const std::vector<std::vector<Rational>>& b) {
  const int d = p.nvars();
  if (static_cast<int>(b.size()) != d) throw DimensionError("vector field matrix must be d x d");
  Polynomial<Coeff> r(d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(b[static_cast<std::size_t>(i)].size()) != d) {
      throw DimensionError("vector field matrix must be d x d");
    }
    Polynomial<Coeff> di = partial(p, i);
    if (di.is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      const Rational& bij = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (is_zero(bij)) continue;
      r += times_variable(di, j).scaled(bij);
    }
  }
  return r;
}

/// Direct monomial evaluation at a complex point.
template <class Coeff>
std::complex<double> evaluate(const Polynomial<Coeff>& p, std::span<const std::complex<double>> point) {
  if (static_cast<int>(point.size()) != p.nvars()) throw DimensionError("evaluate: point has wrong length");
  std::complex<double> s = 0.0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> t = to_complex(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    }
    s += t;
  }
  return s;
}

template <class Coeff>
std::complex<double> evaluate(const Polynomial<Coeff>& p, const std::vector<std::complex<double>>& point) {
  return evaluate(p, std::span<const std::complex<double>>(point));
}

template <class Coeff>
std::complex<double> evaluate(const Polynomial<Coeff>& p, const std::vector<double>& point) {
  std::vector<std::complex<double>> z(point.begin(), point.end());
  return evaluate(p, std::span<const std::complex<double>>(z));
}

inline std::string coeff_to_string(const CScalar& c) { return c.to_string(); }
inline std::string coeff_to_string(const Rational& q) { return to_string(q); }

/// Text form "c * z1^a1*z2^a2 + ..." in graded-lex order. Variable names default to z1..zn.
template <class Coeff>
std::string to_string(const Polynomial<Coeff>& p, const std::vector<std::string>& names = {}) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    std::string cs = coeff_to_string(c);
    bool compound = cs.find(' ') != std::string::npos;
    s += compound ? "(" + cs + ")" : cs;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      s += " * ";
      s += i < names.size() ? names[i] : "z" + std::to_string(i + 1);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
  }
  return s;
}

}  // namespace gxray
