#pragma once

// Exact scalars: rationals, rational combinations of half-integer powers of pi,
// and complex numbers over those.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "gxray/errors.hpp"

namespace gxray {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
  Rational q(mpz_class(num, 10), mpz_class(den, 10));
  if (q.get_den() == 0) throw DomainError("rational with zero denominator");
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Binomial coefficient C(n, k) as an exact integer (0 outside 0 <= k <= n).
inline mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Sum over m of q_m * pi^(m/2). Terms are kept sorted by exponent with no zero
/// coefficients; the empty sum is 0.
class PiScalar {
 public:
  using Term = std::pair<int, Rational>;

  PiScalar() = default;
  PiScalar(Rational q, int half_pi_exp = 0) {  // NOLINT(google-explicit-constructor)
    if (!gxray::is_zero(q)) terms_.emplace_back(half_pi_exp, std::move(q));
  }
  PiScalar(long q) : PiScalar(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  PiScalar(int q) : PiScalar(Rational(q)) {}   // NOLINT(google-explicit-constructor)

  /// pi^(m/2).
  static PiScalar pi_power(int half_pi_exp) { return PiScalar(Rational(1), half_pi_exp); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient of pi^(m/2) (zero if absent).
  Rational coefficient(int half_pi_exp) const {
    for (const auto& [m, q] : terms_) {
      if (m == half_pi_exp) return q;
    }
    return 0;
  }

  PiScalar operator-() const {
    PiScalar r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  PiScalar& operator+=(const PiScalar& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        out.push_back(*b++);
      } else {
        Rational s = a->second + b->second;
        if (!gxray::is_zero(s)) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  PiScalar& operator-=(const PiScalar& o) { return *this += -o; }

  PiScalar& operator*=(const Rational& q) {
    if (gxray::is_zero(q)) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= q;
    }
    return *this;
  }

  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator*(PiScalar a, const Rational& q) { return a *= q; }
  friend PiScalar operator*(const Rational& q, PiScalar a) { return a *= q; }

  friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial() && b.is_monomial()) {
      return PiScalar(a.terms_[0].second * b.terms_[0].second, a.terms_[0].first + b.terms_[0].first);
    }
    PiScalar r;
    for (const auto& [ma, qa] : a.terms_) {
      PiScalar row;
      row.terms_.reserve(b.terms_.size());
      for (const auto& [mb, qb] : b.terms_) row.terms_.emplace_back(ma + mb, qa * qb);
      r += row;
    }
    return r;
  }
  PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }

  /// Division by a nonzero single-term divisor q * pi^(m/2).
  friend PiScalar operator/(const PiScalar& a, const PiScalar& b) {
    if (!b.is_monomial()) {
      throw UnsupportedDivisor("PiScalar division requires a nonzero single-term divisor");
    }
    const auto& [mb, qb] = b.terms_[0];
    PiScalar r = a;
    for (auto& t : r.terms_) {
      t.first -= mb;
      t.second /= qb;
    }
    return r;
  }

  friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.terms_ == b.terms_; }

  /// Sum of q_m * pi^(m/2) in double precision.
  double to_double() const {
    double s = 0.0;
    for (const auto& [m, q] : terms_) s += q.get_d() * pi_half_power(m);
    return s;
  }

  /// Human-readable form, e.g. "4*pi^{3/2}", "1/2*pi^{1/2} - 3", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, q] = *it;
      Rational mag = abs(q);
      bool neg = sgn(q) < 0;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      std::string power;
      if (m == 2) {
        power = "pi";
      } else if (m != 0) {
        power = (m % 2 == 0) ? "pi^{" + std::to_string(m / 2) + "}" : "pi^{" + std::to_string(m) + "/2}";
      }
      if (power.empty()) {
        s += gxray::to_string(mag);
      } else if (mag == 1) {
        s += power;
      } else {
        s += gxray::to_string(mag) + "*" + power;
      }
    }
    return s;
  }

  static double pi_half_power(int m) {
    return std::pow(std::numbers::pi, 0.5 * static_cast<double>(m));
  }

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const PiScalar& a) { return a.is_zero(); }
inline double pi_to_float(const PiScalar& a) { return a.to_double(); }

/// Gamma(m/2) for m >= 1, exactly.
inline PiScalar half_gamma(int m) {
  if (m <= 0) throw DomainError("half_gamma: Gamma(m/2) requires m >= 1, got " + std::to_string(m));
  // Gamma(1/2) = sqrt(pi), Gamma(1) = 1, Gamma(x + 1) = x Gamma(x)
  Rational q = 1;
  int start = (m % 2 == 1) ? 1 : 2;
  for (int j = start; j + 2 <= m; j += 2) q *= make_rational(j, 2);
  return PiScalar(q, m % 2 == 1 ? 1 : 0);
}

/// re + i*im with PiScalar parts.
class CScalar {
 public:
  CScalar() = default;
  CScalar(PiScalar re, PiScalar im = {}) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  CScalar(Rational re) : re_(std::move(re)) {}                                         // NOLINT
  CScalar(long re) : re_(re) {}                                                         // NOLINT
  CScalar(int re) : re_(re) {}                                                          // NOLINT

  static CScalar i() { return CScalar(PiScalar(), PiScalar(1)); }

  const PiScalar& re() const { return re_; }
  const PiScalar& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  CScalar conj() const { return CScalar(re_, -im_); }
  CScalar operator-() const { return CScalar(-re_, -im_); }

  CScalar& operator+=(const CScalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  CScalar& operator-=(const CScalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  CScalar& operator*=(const Rational& q) {
    re_ *= q;
    im_ *= q;
    return *this;
  }
  CScalar& operator*=(const CScalar& o) { return *this = *this * o; }

  friend CScalar operator+(CScalar a, const CScalar& b) { return a += b; }
  friend CScalar operator-(CScalar a, const CScalar& b) { return a -= b; }
  friend CScalar operator*(CScalar a, const Rational& q) { return a *= q; }
  friend CScalar operator*(const Rational& q, CScalar a) { return a *= q; }
  friend CScalar operator*(const CScalar& a, const CScalar& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return CScalar(a.re_ * b.re_);
    return CScalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend CScalar operator*(const CScalar& a, const PiScalar& s) { return CScalar(a.re_ * s, a.im_ * s); }
  friend CScalar operator*(const PiScalar& s, const CScalar& a) { return a * s; }
  /// Division by a single-term PiScalar.
  friend CScalar operator/(const CScalar& a, const PiScalar& s) { return CScalar(a.re_ / s, a.im_ / s); }

  friend bool operator==(const CScalar& a, const CScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string im = "(" + im_.to_string() + ")*i";
    if (re_.is_zero()) return im;
    return "(" + re_.to_string() + ") + " + im;
  }

 private:
  PiScalar re_;
  PiScalar im_;
};

inline bool is_zero(const CScalar& c) { return c.is_zero(); }
inline std::complex<double> to_complex(const CScalar& c) { return c.to_complex(); }
inline std::complex<double> to_complex(const Rational& q) { return {q.get_d(), 0.0}; }
inline CScalar conj(const CScalar& c) { return c.conj(); }

}  // namespace gxray
