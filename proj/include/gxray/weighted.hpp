#pragma once

#include <utility>

#include "gxray/errors.hpp"
#include "gxray/polyalg.hpp"

namespace gxray {

/// e^{-rho^2/2} * poly(z) on R^d.
struct GaussianPolyFn {
  int d = 0;
  MultiPoly poly;

  GaussianPolyFn() = default;
  GaussianPolyFn(int dim, MultiPoly p) : d(dim), poly(std::move(p)) {
    if (d < 2) throw DomainError("GaussianPolyFn: need d >= 2");
    if (poly.nvars() != d) throw DimensionError("GaussianPolyFn: polynomial must have d variables");
  }

  friend bool operator==(const GaussianPolyFn&, const GaussianPolyFn&) = default;
};

/// e^{-|p|^2/2} * poly(v, p) on the line manifold {|v| = 1, v.p = 0}.
///
/// Variable slots are (v_1..v_d, p_1..p_d, t); t is only used while building
/// the X-ray transform and never survives into a returned value. The stored
/// polynomial is one representative modulo (|v|^2 - 1, v.p).
struct DataPolyFn {
  int d = 0;
  MultiPoly poly;

  DataPolyFn() = default;
  DataPolyFn(int dim, MultiPoly p) : d(dim), poly(std::move(p)) {
    if (d < 2) throw DomainError("DataPolyFn: need d >= 2");
    if (poly.nvars() != 2 * d + 1) throw DimensionError("DataPolyFn: polynomial must have 2d+1 slots");
  }

  static int v_slot(int i) { return i; }
  int p_slot(int i) const { return d + i; }
  int t_slot() const { return 2 * d; }
  int nslots() const { return 2 * d + 1; }
};

}  // namespace gxray
