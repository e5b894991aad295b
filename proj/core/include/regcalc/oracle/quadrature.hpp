#pragma once

#include "regcalc/ext_index.hpp"
#include "regcalc/oracle/closed_form.hpp"

#include <functional>
#include <optional>

namespace regcalc::oracle {

/// Composite Simpson with interval halving.
struct QuadratureCfg {
  double rel_tol = 1e-8;
  int max_depth = 24;
  int min_depth = 6;
  double abs_tol = 1e-15;
  int sup_grid = 4097;
  // Unbounded domains without known support are integrated on [-2^w, 2^w]
  // for w = 0..max_window_log2.
  int max_window_log2 = 12;
};

/// A value with the error estimate |S_2n - S_n| / 15 of the last two levels
/// (for suprema: the change between the two grids).
struct Estimate {
  double value = 0.0;
  double error = 0.0;
  int depth = 0;
};

using RealFn = std::function<double(double)>;

/// ∫_lo^hi f on a finite interval. Throws NonConvergent when max_depth is
/// exhausted.
Estimate integrate(const RealFn& f, double lo, double hi, const QuadratureCfg& cfg = {});

/// sup |f| on a finite interval: grid of cfg.sup_grid points, a grid of
/// twice the density as check, then a golden-section polish at the peak.
Estimate sup_abs(const RealFn& f, double lo, double hi, const QuadratureCfg& cfg = {});

/// (∫|f|^p)^{1/p} on a finite interval, or sup |f| for p = INF. Exponents
/// below 1 give the quasi-norm.
Estimate lp_norm(const RealFn& f, const ExtIndex& p, double lo, double hi,
                 const QuadratureCfg& cfg = {});

/// L^p norm on `interval`, clipped to the known support of f. Unbounded
/// intervals without known support use growing windows; nullopt means the
/// window values kept growing (the norm is infinite).
std::optional<Estimate> lp_norm_if_finite(const ClosedFormFn& f, const ExtIndex& p,
                                          const Interval& interval, const QuadratureCfg& cfg = {});

/// As lp_norm_if_finite, throwing NonConvergent for an infinite norm.
Estimate lp_norm(const ClosedFormFn& f, const ExtIndex& p, const Interval& interval,
                 const QuadratureCfg& cfg = {});

}  // namespace regcalc::oracle
