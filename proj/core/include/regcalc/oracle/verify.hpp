#pragma once

#include "regcalc/ext_index.hpp"
#include "regcalc/families.hpp"
#include "regcalc/index_laws.hpp"
#include "regcalc/oracle/closed_form.hpp"
#include "regcalc/oracle/quadrature.hpp"

#include <string>
#include <vector>

namespace regcalc::oracle {

inline constexpr double kInequalityTol = 1e-6;
inline constexpr double kSymbolicTol = 1e-9;
inline constexpr double kFiniteDifferenceTol = 1e-4;

/// |a - b| <= tol * max(1, |a|, |b|).
bool close_rel(double a, double b, double tol);

/// lhs = ‖product‖ at the combined exponent, rhs = product of the factor norms.
struct InequalityReport {
  std::string law;
  ExtIndex p;
  ExtIndex q;
  ExtIndex exponent;
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_error = 0.0;
  double rhs_error = 0.0;
  double tol = kInequalityTol;
  bool exponent_below_one = false;
  bool holds = false;
};

/// ‖fg‖_s <= ‖f‖_p ‖g‖_q with s = star_holder(p, q) on `interval`.
InequalityReport verify_holder(const ClosedFormFn& f, const ClosedFormFn& g, const ExtIndex& p,
                               const ExtIndex& q, const Interval& interval,
                               const QuadratureCfg& cfg = {}, double tol = kInequalityTol);

/// ‖f∗g‖_r <= ‖f‖_i ‖g‖_j with r = star_young(i, j); f and g need compact
/// support.
InequalityReport verify_young(const ClosedFormFn& f, const ClosedFormFn& g, const ExtIndex& i,
                              const ExtIndex& j, const QuadratureCfg& cfg = {},
                              double tol = kInequalityTol);

/// (f∗g)(x) by quadrature over supp f ∩ (x - supp g).
double convolve_at(const ClosedFormFn& f, const ClosedFormFn& g, double x, const QuadratureCfg& cfg = {});

/// Σ over partitions μ of [order] of g^(#μ)(f(x)) ∏_{b∈μ} f^(|b|)(x).
double partition_sum(const ClosedFormFn& f, const ClosedFormFn& g, int order, double x,
                     std::size_t* terms = nullptr);

/// Central difference of the given order with step h; h <= 0 picks
/// machine-epsilon^(1/(order+2)).
double central_difference(const RealFn& fn, int order, double x, double h = 0.0);

/// Central difference of f evaluated in long double, with h = epsilon of
/// long double ^ (1/(order+2)).
double central_difference(const ClosedFormFn& f, int order, double x);

struct FdbPoint {
  double x = 0.0;
  double partition_sum = 0.0;
  double symbolic = 0.0;
  double finite_difference = 0.0;
  std::size_t terms = 0;
  bool symbolic_ok = true;
  bool fd_ok = true;
};

struct FdbReport {
  int order = 0;
  bool polynomial = false;  // symbolic agreement is only gated for polynomial inputs
  std::vector<FdbPoint> points;
  bool pass() const;
};

FdbReport verify_faa_di_bruno(const ClosedFormFn& f, const ClosedFormFn& g, int order,
                              const std::vector<double>& xs);

struct OrderVerdict {
  int order = 0;
  Grade b_grade;  // family grade of α(i); nullopt is the zero space
  Grade c_grade;  // k - β(i)
  bool member = false;
  double norm = 0.0;
  std::string note;
};

struct MembershipReport {
  std::string family;
  std::vector<OrderVerdict> orders;
  bool member() const;
};

/// Per-order membership of the jets of f in B_{α(i)} ∩ C^{k-β(i)}, i = 0..k.
MembershipReport verify_membership(const ClosedFormFn& f, const FamilyDescriptor& family,
                                   const UnaryMap& alpha, const UnaryMap& beta, int k,
                                   const Interval& interval, const QuadratureCfg& cfg = {});

}  // namespace regcalc::oracle
