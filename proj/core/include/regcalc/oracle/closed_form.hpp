#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace regcalc::oracle {

/// Closed interval [lo, hi]; either end may be infinite.
struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  static Interval whole_line();
  bool is_finite() const;
  double width() const { return hi - lo; }
};

/// A 1-D function built from constants, x, +, ×, integer powers, exp, sin,
/// cos and smooth bumps. Values are immutable and share subtrees.
class ClosedFormFn {
 public:
  enum class Op { constant, x, add, mul, pow, exp, sin, cos, bump };

  ClosedFormFn();  // the zero function

  static ClosedFormFn constant(double c);
  static ClosedFormFn x();
  static ClosedFormFn exp(const ClosedFormFn& u);
  static ClosedFormFn sin(const ClosedFormFn& u);
  static ClosedFormFn cos(const ClosedFormFn& u);
  static ClosedFormFn pow(const ClosedFormFn& u, int n);
  // exp(-1/((u-a)(b-u))) on a < u < b, 0 elsewhere.
  static ClosedFormFn bump(double a, double b, const ClosedFormFn& u = x());
  // Polynomial Σ c_k x^k.
  static ClosedFormFn polynomial(const std::vector<double>& coeffs);

  friend ClosedFormFn operator+(const ClosedFormFn& a, const ClosedFormFn& b);
  friend ClosedFormFn operator*(const ClosedFormFn& a, const ClosedFormFn& b);
  friend ClosedFormFn operator-(const ClosedFormFn& a, const ClosedFormFn& b);
  friend ClosedFormFn operator*(double c, const ClosedFormFn& f);

  double operator()(double x) const;
  // Same evaluation carried out in long double.
  long double eval_extended(long double x) const;

  Op op() const;
  bool is_constant() const;
  bool is_zero() const;
  // Only constants, x, +, × and powers.
  bool is_polynomial() const;
  // Closed interval outside of which the function vanishes, if known.
  // An empty support is reported as nullopt together with is_zero().
  std::optional<Interval> support() const;
  std::string str() const;
  std::size_t node_count() const;

  struct Node;

 private:
  explicit ClosedFormFn(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;

  friend ClosedFormFn derivative(const ClosedFormFn& f, int order);
  friend ClosedFormFn substitute(const ClosedFormFn& g, const ClosedFormFn& f);
};

/// Exact symbolic derivative; order 0 returns f. Throws DomainError for
/// negative orders.
ClosedFormFn derivative(const ClosedFormFn& f, int order);

/// g∘f: every occurrence of x in g replaced by f.
ClosedFormFn substitute(const ClosedFormFn& g, const ClosedFormFn& f);

/// Order-n derivative of the standard bump on (a, b) at t.
double bump_derivative(double a, double b, int n, double t);

}  // namespace regcalc::oracle
