#include "regcalc/oracle/quadrature.hpp"

#include "regcalc/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace regcalc::oracle {

namespace {

void require_finite(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw DomainError("quadrature needs a finite interval");
  }
}

double p_value(const ExtIndex& p) {
  if (p == ExtIndex(0)) throw DomainError("L^p norms need p > 0");
  return p.to_double();
}

Estimate integral_to_norm(const Estimate& integral, double p) {
  const double v = std::max(integral.value, 0.0);
  Estimate out{std::pow(v, 1.0 / p), 0.0, integral.depth};
  if (v > 0.0) out.error = out.value / (p * v) * integral.error;
  return out;
}

}  // namespace

Estimate integrate(const RealFn& f, double lo, double hi, const QuadratureCfg& cfg) {
  require_finite(lo, hi);
  if (lo == hi) return {};
  const double width = hi - lo;
  // Trapezoid sums T_n with n = 2^depth panels; Simpson S_2n = (4 T_2n - T_n) / 3.
  double ends = 0.5 * (f(lo) + f(hi));
  double interior = 0.0;
  double trap = ends * width;
  double simpson_prev = std::numeric_limits<double>::quiet_NaN();
  long long panels = 1;
  for (int depth = 1; depth <= cfg.max_depth; ++depth) {
    const double h = width / static_cast<double>(2 * panels);
    double added = 0.0;
    for (long long k = 0; k < panels; ++k) added += f(lo + h * static_cast<double>(2 * k + 1));
    interior += added;
    panels *= 2;
    const double trap_next = (ends + interior) * h;
    const double simpson = (4.0 * trap_next - trap) / 3.0;
    trap = trap_next;
    if (depth > cfg.min_depth) {
      const double diff = std::abs(simpson - simpson_prev);
      if (diff <= std::max(cfg.rel_tol * std::abs(simpson), cfg.abs_tol)) {
        return {simpson, diff / 15.0, depth};
      }
    }
    simpson_prev = simpson;
  }
  throw NonConvergent("Simpson refinement did not reach relative tolerance " +
                      std::to_string(cfg.rel_tol) + " within depth " + std::to_string(cfg.max_depth));
}

Estimate sup_abs(const RealFn& f, double lo, double hi, const QuadratureCfg& cfg) {
  require_finite(lo, hi);
  auto scan = [&](int points, double& arg) {
    double best = -1.0;
    for (int k = 0; k < points; ++k) {
      double x = lo + (hi - lo) * k / static_cast<double>(points - 1);
      double v = std::abs(f(x));
      if (v > best) {
        best = v;
        arg = x;
      }
    }
    return best;
  };
  const int n = std::max(cfg.sup_grid, 3);
  double arg = lo;
  const double coarse = scan(n, arg);
  const double fine = scan(2 * n - 1, arg);
  // Golden-section maximisation of |f| in the two cells around the grid peak.
  const double cell = (hi - lo) / static_cast<double>(2 * n - 2);
  double a = std::max(lo, arg - cell);
  double b = std::min(hi, arg + cell);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = std::abs(f(c));
  double fd = std::abs(f(d));
  for (int it = 0; it < 60 && b - a > 1e-15 * std::max(1.0, std::abs(arg)); ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = std::abs(f(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = std::abs(f(d));
    }
  }
  const double best = std::max({fine, fc, fd});
  return {best, std::abs(best - coarse), 1};
}

Estimate lp_norm(const RealFn& f, const ExtIndex& p, double lo, double hi, const QuadratureCfg& cfg) {
  if (p.is_inf()) return sup_abs(f, lo, hi, cfg);
  const double pv = p_value(p);
  auto integrand = [&](double x) {
    const double v = std::abs(f(x));
    return pv == 1.0 ? v : pv == 2.0 ? v * v : std::pow(v, pv);
  };
  return integral_to_norm(integrate(integrand, lo, hi, cfg), pv);
}

std::optional<Estimate> lp_norm_if_finite(const ClosedFormFn& f, const ExtIndex& p,
                                          const Interval& interval, const QuadratureCfg& cfg) {
  if (!p.is_inf()) p_value(p);
  if (f.is_zero()) return Estimate{};
  double lo = interval.lo;
  double hi = interval.hi;
  if (auto supp = f.support()) {
    lo = std::max(lo, supp->lo);
    hi = std::min(hi, supp->hi);
    if (lo >= hi) return Estimate{};
  }
  RealFn fn = [&f](double x) { return f(x); };
  if (std::isfinite(lo) && std::isfinite(hi)) return lp_norm(fn, p, lo, hi, cfg);

  // Growing windows; the norm is finite once two consecutive windows agree.
  std::optional<Estimate> prev;
  for (int w = 0; w <= cfg.max_window_log2; ++w) {
    const double radius = std::ldexp(1.0, w);
    const double wl = std::isfinite(lo) ? lo : std::min(-radius, hi - radius);
    const double wh = std::isfinite(hi) ? hi : std::max(radius, lo + radius);
    Estimate cur = lp_norm(fn, p, wl, wh, cfg);
    if (prev && w >= 3 &&
        std::abs(cur.value - prev->value) <= std::max(cfg.rel_tol * cur.value, cfg.abs_tol)) {
      cur.error += std::abs(cur.value - prev->value);
      return cur;
    }
    prev = cur;
  }
  return std::nullopt;
}

Estimate lp_norm(const ClosedFormFn& f, const ExtIndex& p, const Interval& interval, const QuadratureCfg& cfg) {
  auto out = lp_norm_if_finite(f, p, interval, cfg);
  if (!out) throw NonConvergent("L^" + p.str() + " norm of " + f.str() + " diverges on growing windows");
  return *out;
}

}  // namespace regcalc::oracle
