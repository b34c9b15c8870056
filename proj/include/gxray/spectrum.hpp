#pragma once

// Eigenpair verification, sweeps over (k, l), and the asymptotics report.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "gxray/errors.hpp"
#include "gxray/quadrature.hpp"
#include "gxray/scalars.hpp"
#include "gxray/specfun.hpp"
#include "gxray/xraynormal.hpp"

namespace gxray {

struct EigenIndex {
  int k = 0;
  int l = 0;
  int d = 3;

  friend bool operator==(const EigenIndex&, const EigenIndex&) = default;
};

/// 4k + l^2 + dl + d.
inline long big_lambda(const EigenIndex& idx) {
  return 4L * idx.k + static_cast<long>(idx.l) * idx.l + static_cast<long>(idx.d) * idx.l + idx.d;
}

enum class Harmonic { complex, zonal };

struct EigenpairCheck {
  PiScalar lambda;
  bool residual_zero = false;
};

/// Builds phi in V_{k,l}, applies N exactly, and checks N phi = lambda phi.
inline EigenpairCheck verify_eigenpair(const EigenIndex& idx, Harmonic harmonic) {
  const MultiPoly h = harmonic == Harmonic::complex ? complex_solid_harmonic(idx.l, idx.d)
                                                    : zonal_solid_harmonic(idx.l, idx.d);
  const GaussianPolyFn phi = eigenfunction(idx.k, idx.l, idx.d, h);
  const GaussianPolyFn nphi = normal_apply(phi);
  const auto& [lead_m, lead_c] = *phi.poly.terms().rbegin();
  const CScalar image = nphi.poly.coefficient(lead_m);
  // Leading coefficients of the eigenfunctions are real or purely imaginary.
  PiScalar ratio;
  if (lead_c.im().is_zero()) {
    if (!image.im().is_zero()) throw TheoremViolation("verify_eigenpair: result is not proportional");
    ratio = image.re() / lead_c.re();
  } else if (lead_c.re().is_zero()) {
    if (!image.re().is_zero()) throw TheoremViolation("verify_eigenpair: result is not proportional");
    ratio = image.im() / lead_c.im();
  } else {
    throw PreconditionError("verify_eigenpair: leading coefficient is not real or imaginary");
  }
  MultiPoly residual = nphi.poly;
  for (const auto& [m, c] : phi.poly.terms()) residual.add_term(m, -(c * ratio));
  if (!residual.is_zero()) throw TheoremViolation("verify_eigenpair: N phi is not a multiple of phi");
  return {ratio, true};
}

enum class Method { exact, quad, gegenbauer };

struct EigenRecord {
  EigenIndex index;
  long Lambda = 0;
  std::optional<PiScalar> lambda_exact;
  double lambda_quad = std::numeric_limits<double>::quiet_NaN();
  double lambda_gegen = std::numeric_limits<double>::quiet_NaN();
  double main_term = std::numeric_limits<double>::quiet_NaN();
  double scaled = std::numeric_limits<double>::quiet_NaN();
  double err_scaled = std::numeric_limits<double>::quiet_NaN();

  /// Best available value: quadrature, then exact, then Gegenbauer.
  double lambda() const {
    if (!std::isnan(lambda_quad)) return lambda_quad;
    if (lambda_exact) return pi_to_float(*lambda_exact);
    return lambda_gegen;
  }
};

struct SweepOptions {
  std::set<Method> methods{Method::quad};
  /// Exact evaluation only where 2k + l does not exceed this.
  int exact_degree_cap = 40;
  /// 0 means: GXRAY_THREADS if set, otherwise hardware concurrency.
  unsigned threads = 0;
};

inline unsigned resolve_threads(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("GXRAY_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v > 0) n = static_cast<unsigned>(v);
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

/// Fills one record. For d = 2 the exact value comes from the closed form.
inline EigenRecord make_record(const EigenIndex& idx, const SweepOptions& opts) {
  EigenRecord r;
  r.index = idx;
  r.Lambda = big_lambda(idx);
  if (idx.d == 2) {
    r.lambda_exact = d2_closed_form(idx.k, idx.l);
  } else {
    if (opts.methods.count(Method::exact) && 2 * idx.k + idx.l <= opts.exact_degree_cap) {
      r.lambda_exact = lambda_exact(idx.k, idx.l, idx.d);
    }
    if (opts.methods.count(Method::quad)) r.lambda_quad = lambda_quad(idx.k, idx.l, idx.d);
    if (opts.methods.count(Method::gegenbauer)) r.lambda_gegen = lambda_gegenbauer(idx.k, idx.l, idx.d);
    if (idx.k != 0 || idx.l != 0) r.main_term = main_term(idx.k, idx.l, idx.d);
  }
  const double lam = r.lambda();
  const double big = static_cast<double>(r.Lambda);
  r.scaled = lam * std::sqrt(big);
  if (!std::isnan(r.main_term)) r.err_scaled = std::abs(lam - r.main_term) * std::pow(big, 0.75);
  return r;
}

/// Records for 0 <= k <= kmax, 0 <= l <= lmax, ordered by k then l.
inline std::vector<EigenRecord> sweep(int d, int kmax, int lmax, const SweepOptions& opts = {}) {
  if (d < 2) throw DomainError("sweep: need d >= 2");
  std::vector<EigenIndex> indices;
  for (int k = 0; k <= kmax; ++k) {
    for (int l = 0; l <= lmax; ++l) indices.push_back({k, l, d});
  }
  std::vector<EigenRecord> out(indices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < indices.size(); i = next++) out[i] = make_record(indices[i], opts);
  };
  const unsigned n = std::min<unsigned>(resolve_threads(opts.threads), static_cast<unsigned>(std::max<std::size_t>(1, indices.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  return out;
}

struct AsymptoticsReport {
  double cMin = 0.0;
  double cMax = 0.0;
  double ratio = 0.0;
  double errSup = std::numeric_limits<double>::quiet_NaN();
  double errSlope = std::numeric_limits<double>::quiet_NaN();
};

/// Band of lambda sqrt(Lambda) and the log-log slope of err_scaled over the upper half of Lambda.
inline AsymptoticsReport asymptotics_report(const std::vector<EigenRecord>& records) {
  if (records.empty()) throw PreconditionError("asymptotics_report: no records");
  const int d = records.front().index.d;
  AsymptoticsReport rep;
  rep.cMin = std::numeric_limits<double>::infinity();
  rep.cMax = -std::numeric_limits<double>::infinity();
  std::vector<double> lambdas;
  for (const auto& r : records) {
    if (r.index.d != d) throw PreconditionError("asymptotics_report: mixed dimensions");
    rep.cMin = std::min(rep.cMin, r.scaled);
    rep.cMax = std::max(rep.cMax, r.scaled);
    lambdas.push_back(static_cast<double>(r.Lambda));
    if (!std::isnan(r.err_scaled)) rep.errSup = std::isnan(rep.errSup) ? r.err_scaled : std::max(rep.errSup, r.err_scaled);
  }
  rep.ratio = rep.cMax / rep.cMin;
  // median of Lambda over all records (mean of the two middle values for even counts)
  std::sort(lambdas.begin(), lambdas.end());
  const std::size_t n = lambdas.size();
  const double median = n % 2 == 1 ? lambdas[n / 2] : 0.5 * (lambdas[n / 2 - 1] + lambdas[n / 2]);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const auto& r : records) {
    if (static_cast<double>(r.Lambda) < median || std::isnan(r.err_scaled) || !(r.err_scaled > 0.0)) continue;
    const double x = std::log(static_cast<double>(r.Lambda));
    const double y = std::log(r.err_scaled);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  const double den = static_cast<double>(m) * sxx - sx * sx;
  if (m >= 2 && den > 0.0) rep.errSlope = (static_cast<double>(m) * sxy - sx * sy) / den;
  return rep;
}

}  // namespace gxray
