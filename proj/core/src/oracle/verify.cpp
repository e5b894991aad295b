#include "regcalc/oracle/verify.hpp"

#include "regcalc/error.hpp"
#include "regcalc/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace regcalc::oracle {

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

namespace {

bool holds_with(double lhs, double rhs, double slack, double tol) {
  return lhs <= rhs + slack + tol * std::max(1.0, std::abs(rhs));
}

Interval support_or_throw(const ClosedFormFn& f, const char* which) {
  if (f.is_zero()) return {0.0, 0.0};
  auto supp = f.support();
  if (!supp || !supp->is_finite()) {
    throw DomainError(std::string("Young verification needs compactly supported ") + which);
  }
  return *supp;
}

}  // namespace

InequalityReport verify_holder(const ClosedFormFn& f, const ClosedFormFn& g, const ExtIndex& p,
                               const ExtIndex& q, const Interval& interval, const QuadratureCfg& cfg,
                               double tol) {
  InequalityReport r{"holder", p, q, star_holder(p, q)};
  r.tol = tol;
  r.exponent_below_one = r.exponent < ExtIndex(1);
  const Estimate prod = lp_norm(f * g, r.exponent, interval, cfg);
  const Estimate nf = lp_norm(f, p, interval, cfg);
  const Estimate ng = lp_norm(g, q, interval, cfg);
  r.lhs = prod.value;
  r.lhs_error = prod.error;
  r.rhs = nf.value * ng.value;
  r.rhs_error = nf.error * ng.value + ng.error * nf.value;
  r.holds = holds_with(r.lhs, r.rhs, r.lhs_error + r.rhs_error, tol);
  return r;
}

double convolve_at(const ClosedFormFn& f, const ClosedFormFn& g, double x, const QuadratureCfg& cfg) {
  const Interval sf = support_or_throw(f, "f");
  const Interval sg = support_or_throw(g, "g");
  const double lo = std::max(sf.lo, x - sg.hi);
  const double hi = std::min(sf.hi, x - sg.lo);
  if (!(lo < hi)) return 0.0;
  return integrate([&](double y) { return f(y) * g(x - y); }, lo, hi, cfg).value;
}

InequalityReport verify_young(const ClosedFormFn& f, const ClosedFormFn& g, const ExtIndex& i,
                              const ExtIndex& j, const QuadratureCfg& cfg, double tol) {
  InequalityReport r{"young", i, j, star_young(i, j)};
  r.tol = tol;
  r.exponent_below_one = r.exponent < ExtIndex(1);
  const Interval sf = support_or_throw(f, "f");
  const Interval sg = support_or_throw(g, "g");
  QuadratureCfg inner = cfg;
  inner.rel_tol = std::max(cfg.rel_tol * 1e-2, 1e-13);
  RealFn conv = [&](double x) { return convolve_at(f, g, x, inner); };
  const Estimate lhs = lp_norm(conv, r.exponent, sf.lo + sg.lo, sf.hi + sg.hi, cfg);
  const Estimate nf = lp_norm(f, i, sf, cfg);
  const Estimate ng = lp_norm(g, j, sg, cfg);
  r.lhs = lhs.value;
  r.lhs_error = lhs.error;
  r.rhs = nf.value * ng.value;
  r.rhs_error = nf.error * ng.value + ng.error * nf.value;
  r.holds = holds_with(r.lhs, r.rhs, r.lhs_error + r.rhs_error, tol);
  return r;
}

double partition_sum(const ClosedFormFn& f, const ClosedFormFn& g, int order, double x, std::size_t* terms) {
  if (order < 1) throw DomainError("partition sums need order >= 1");
  std::vector<double> df(static_cast<std::size_t>(order) + 1);
  std::vector<double> dg(static_cast<std::size_t>(order) + 1);
  const double fx = f(x);
  for (int n = 1; n <= order; ++n) {
    df[static_cast<std::size_t>(n)] = derivative(f, n)(x);
    dg[static_cast<std::size_t>(n)] = derivative(g, n)(fx);
  }
  double sum = 0.0;
  const auto partitions = enumerate_partitions(order);
  for (const auto& mu : partitions) {
    double term = dg[mu.block_count()];
    for (const auto& block : mu.blocks) term *= df[block.size()];
    sum += term;
  }
  if (terms) *terms = partitions.size();
  return sum;
}

namespace {

template <class T, class F>
T difference(const F& fn, int order, T x, T h) {
  if (order < 0) throw DomainError("difference order must be >= 0");
  if (order == 0) return fn(x);
  if (h <= 0) h = std::pow(std::numeric_limits<T>::epsilon(), T(1) / (order + 2));
  T sum = 0;
  T binom = 1;
  for (int k = 0; k <= order; ++k) {
    const T sign = (k % 2 == 0) ? 1 : -1;
    sum += sign * binom * fn(x + (T(order) / 2 - k) * h);
    binom = binom * (order - k) / (k + 1);
  }
  return sum / std::pow(h, order);
}

}  // namespace

double central_difference(const RealFn& fn, int order, double x, double h) {
  return difference<double>(fn, order, x, h);
}

double central_difference(const ClosedFormFn& f, int order, double x) {
  auto fn = [&f](long double t) { return f.eval_extended(t); };
  return static_cast<double>(difference<long double>(fn, order, x, 0.0L));
}

bool FdbReport::pass() const {
  return std::all_of(points.begin(), points.end(),
                     [](const FdbPoint& p) { return p.symbolic_ok && p.fd_ok; });
}

FdbReport verify_faa_di_bruno(const ClosedFormFn& f, const ClosedFormFn& g, int order,
                              const std::vector<double>& xs) {
  if (order < 1 || order > 6) throw DomainError("Faa di Bruno checks cover orders 1..6");
  FdbReport report{order, f.is_polynomial() && g.is_polynomial()};
  const ClosedFormFn composite = substitute(g, f);
  const ClosedFormFn exact = derivative(composite, order);
  for (double x : xs) {
    FdbPoint pt{x};
    pt.partition_sum = partition_sum(f, g, order, x, &pt.terms);
    pt.symbolic = exact(x);
    pt.finite_difference = central_difference(composite, order, x);
    pt.symbolic_ok = !report.polynomial || close_rel(pt.partition_sum, pt.symbolic, kSymbolicTol);
    pt.fd_ok = close_rel(pt.partition_sum, pt.finite_difference, kFiniteDifferenceTol);
    report.points.push_back(pt);
  }
  return report;
}

bool MembershipReport::member() const {
  return std::all_of(orders.begin(), orders.end(), [](const OrderVerdict& v) { return v.member; });
}

namespace {

bool vanishes(const ClosedFormFn& f, const Interval& interval, const QuadratureCfg& cfg) {
  if (f.is_zero()) return true;
  Interval window = interval;
  if (auto supp = f.support()) {
    window.lo = std::max(window.lo, supp->lo);
    window.hi = std::min(window.hi, supp->hi);
    if (window.lo >= window.hi) return true;
  }
  if (!std::isfinite(window.lo)) window.lo = std::isfinite(window.hi) ? window.hi - 64.0 : -64.0;
  if (!std::isfinite(window.hi)) window.hi = window.lo + 128.0;
  return sup_abs([&](double x) { return f(x); }, window.lo, window.hi, cfg).value <= 1e-12;
}

}  // namespace

MembershipReport verify_membership(const ClosedFormFn& f, const FamilyDescriptor& family,
                                   const UnaryMap& alpha, const UnaryMap& beta, int k,
                                   const Interval& interval, const QuadratureCfg& cfg) {
  if (k < 0 || k > 6) throw DomainError("membership checks cover k in 0..6");
  if (family.kind == FamilyKind::sobolev) {
    throw DomainError("Sobolev chains are checked at the index level only");
  }
  MembershipReport report{family.name};
  for (int i = 0; i <= k; ++i) {
    const ClosedFormFn fi = derivative(f, i);
    OrderVerdict v{i, family.grade_of(alpha(i)), checked_sub(ExtIndex(k), beta(i))};
    const bool zero_side = !v.b_grade || !v.c_grade;
    if (zero_side) {
      v.member = vanishes(fi, interval, cfg);
      v.note = v.member ? "vanishes in the zero space" : "nonzero derivative in the zero space";
    } else if (family.kind == FamilyKind::ck) {
      v.member = true;
      v.note = "smooth";
    } else {
      auto norm = lp_norm_if_finite(fi, *v.b_grade, interval, cfg);
      v.member = norm.has_value();
      if (norm) v.norm = norm->value;
      v.note = norm ? "finite L^" + v.b_grade->str() + " norm" : "L^" + v.b_grade->str() + " norm diverges";
    }
    report.orders.push_back(std::move(v));
  }
  return report;
}

}  // namespace regcalc::oracle
