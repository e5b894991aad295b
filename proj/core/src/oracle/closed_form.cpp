#include "regcalc/oracle/closed_form.hpp"

#include "regcalc/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace regcalc::oracle {

namespace {

using Poly = std::vector<double>;  // coefficients, lowest degree first

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_scale(const Poly& a, double c) {
  Poly out = a;
  for (double& v : out) v *= c;
  return out;
}

Poly poly_deriv(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<double>(i);
  return out;
}

template <class T>
T poly_eval(const Poly& a, T t) {
  T v = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * t + *it;
  return v;
}

// P_n with bump^(n) = P_n / q^{2n} · exp(-1/q), q = (t-a)(b-t).
Poly bump_poly(double a, double b, int n) {
  const Poly q{-a * b, a + b, -1.0};
  const Poly dq = poly_deriv(q);
  Poly p{1.0};
  for (int k = 0; k < n; ++k) {
    Poly inner = poly_add(poly_mul(poly_deriv(p), q), poly_scale(poly_mul(dq, p), -2.0 * k));
    p = poly_add(poly_mul(q, inner), poly_mul(dq, p));
  }
  return p;
}

}  // namespace

struct ClosedFormFn::Node {
  Op op = Op::constant;
  double value = 0.0;
  int n = 0;  // power exponent or bump derivative order
  double a = 0.0;
  double b = 0.0;
  Poly poly;  // bump numerator P_n
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Interval Interval::whole_line() {
  const double inf = std::numeric_limits<double>::infinity();
  return {-inf, inf};
}

bool Interval::is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }

double bump_derivative(double a, double b, int n, double t) {
  if (!(t > a && t < b)) return 0.0;
  const double q = (t - a) * (b - t);
  if (n == 0) return std::exp(-1.0 / q);
  const double p = poly_eval<double>(bump_poly(a, b, n), t);
  if (p == 0.0) return 0.0;
  const double logv = std::log(std::abs(p)) - 2.0 * n * std::log(q) - 1.0 / q;
  return std::copysign(std::exp(logv), p);
}

namespace {

using NodePtr = std::shared_ptr<const ClosedFormFn::Node>;
using Op = ClosedFormFn::Op;

NodePtr make(ClosedFormFn::Node node) { return std::make_shared<const ClosedFormFn::Node>(std::move(node)); }

NodePtr konst(double c) { return make({Op::constant, c}); }
NodePtr var_x() { return make({Op::x}); }

bool is_const(const NodePtr& p, double c) { return p->op == Op::constant && p->value == c; }

NodePtr add(const NodePtr& l, const NodePtr& r) {
  if (l->op == Op::constant && r->op == Op::constant) return konst(l->value + r->value);
  if (is_const(l, 0.0)) return r;
  if (is_const(r, 0.0)) return l;
  return make({Op::add, 0.0, 0, 0.0, 0.0, {}, l, r});
}

NodePtr mul(NodePtr l, NodePtr r) {
  if (r->op == Op::constant && l->op != Op::constant) std::swap(l, r);
  if (l->op == Op::constant && r->op == Op::constant) return konst(l->value * r->value);
  if (is_const(l, 0.0)) return l;
  if (is_const(l, 1.0)) return r;
  if (l->op == Op::constant && r->op == Op::mul && r->lhs->op == Op::constant) {
    return mul(konst(l->value * r->lhs->value), r->rhs);
  }
  return make({Op::mul, 0.0, 0, 0.0, 0.0, {}, l, r});
}

NodePtr power(const NodePtr& u, int n) {
  if (n < 0) throw DomainError("negative powers are outside the function grammar");
  if (n == 0) return konst(1.0);
  if (n == 1) return u;
  if (u->op == Op::constant) return konst(std::pow(u->value, n));
  return make({Op::pow, 0.0, n, 0.0, 0.0, {}, u});
}

NodePtr unary(Op op, const NodePtr& u) {
  if (u->op == Op::constant) {
    switch (op) {
      case Op::exp: return konst(std::exp(u->value));
      case Op::sin: return konst(std::sin(u->value));
      case Op::cos: return konst(std::cos(u->value));
      default: break;
    }
  }
  return make({op, 0.0, 0, 0.0, 0.0, {}, u});
}

NodePtr bump_node(double a, double b, int n, const NodePtr& u) {
  if (u->op == Op::constant) return konst(bump_derivative(a, b, n, u->value));
  return make({Op::bump, 0.0, n, a, b, bump_poly(a, b, n), u});
}

template <class T>
T eval(const ClosedFormFn::Node& node, T x) {
  switch (node.op) {
    case Op::constant: return node.value;
    case Op::x: return x;
    case Op::add: return eval(*node.lhs, x) + eval(*node.rhs, x);
    case Op::mul: {
      T l = eval(*node.lhs, x);
      if (l == 0) return 0;
      return l * eval(*node.rhs, x);
    }
    case Op::pow: {
      const T u = eval(*node.lhs, x);
      T v = 1;
      for (int k = 0; k < node.n; ++k) v *= u;
      return v;
    }
    case Op::exp: return std::exp(eval(*node.lhs, x));
    case Op::sin: return std::sin(eval(*node.lhs, x));
    case Op::cos: return std::cos(eval(*node.lhs, x));
    case Op::bump: {
      const T t = eval(*node.lhs, x);
      if (!(t > node.a && t < node.b)) return 0;
      const T q = (t - node.a) * (node.b - t);
      if (node.n == 0) return std::exp(-1 / q);
      const T p = poly_eval<T>(node.poly, t);
      if (p == 0) return 0;
      return std::copysign(std::exp(std::log(std::abs(p)) - 2 * node.n * std::log(q) - 1 / q), p);
    }
  }
  return 0;
}

NodePtr diff(const NodePtr& f) {
  switch (f->op) {
    case Op::constant: return konst(0.0);
    case Op::x: return konst(1.0);
    case Op::add: return add(diff(f->lhs), diff(f->rhs));
    case Op::mul: return add(mul(diff(f->lhs), f->rhs), mul(f->lhs, diff(f->rhs)));
    case Op::pow: return mul(mul(konst(f->n), power(f->lhs, f->n - 1)), diff(f->lhs));
    case Op::exp: return mul(f, diff(f->lhs));
    case Op::sin: return mul(unary(Op::cos, f->lhs), diff(f->lhs));
    case Op::cos: return mul(mul(konst(-1.0), unary(Op::sin, f->lhs)), diff(f->lhs));
    case Op::bump: return mul(bump_node(f->a, f->b, f->n + 1, f->lhs), diff(f->lhs));
  }
  return konst(0.0);
}

NodePtr subst(const NodePtr& g, const NodePtr& f) {
  switch (g->op) {
    case Op::constant: return g;
    case Op::x: return f;
    case Op::add: return add(subst(g->lhs, f), subst(g->rhs, f));
    case Op::mul: return mul(subst(g->lhs, f), subst(g->rhs, f));
    case Op::pow: return power(subst(g->lhs, f), g->n);
    case Op::exp:
    case Op::sin:
    case Op::cos: return unary(g->op, subst(g->lhs, f));
    case Op::bump: return bump_node(g->a, g->b, g->n, subst(g->lhs, f));
  }
  return g;
}

std::optional<Interval> support_of(const ClosedFormFn::Node& node) {
  switch (node.op) {
    case Op::constant: return node.value == 0.0 ? std::optional<Interval>(Interval{0.0, 0.0}) : std::nullopt;
    case Op::x:
    case Op::exp:
    case Op::cos: return std::nullopt;
    case Op::add: {
      auto l = support_of(*node.lhs);
      auto r = support_of(*node.rhs);
      if (!l || !r) return std::nullopt;
      return Interval{std::min(l->lo, r->lo), std::max(l->hi, r->hi)};
    }
    case Op::mul: {
      auto l = support_of(*node.lhs);
      auto r = support_of(*node.rhs);
      if (l && r) {
        double lo = std::max(l->lo, r->lo);
        double hi = std::min(l->hi, r->hi);
        if (lo > hi) hi = lo;
        return Interval{lo, hi};
      }
      return l ? l : r;
    }
    case Op::pow:
    case Op::sin: return support_of(*node.lhs);
    case Op::bump: {
      const auto& u = *node.lhs;
      if (u.op == Op::x) return Interval{node.a, node.b};
      // c·x and x + c arguments map the support affinely.
      if (u.op == Op::mul && u.lhs->op == Op::constant && u.rhs->op == Op::x && u.lhs->value != 0.0) {
        double c = u.lhs->value;
        return Interval{std::min(node.a / c, node.b / c), std::max(node.a / c, node.b / c)};
      }
      if (u.op == Op::add && u.lhs->op == Op::constant && u.rhs->op == Op::x) {
        return Interval{node.a - u.lhs->value, node.b - u.lhs->value};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool polynomial(const ClosedFormFn::Node& node) {
  switch (node.op) {
    case Op::constant:
    case Op::x: return true;
    case Op::add:
    case Op::mul: return polynomial(*node.lhs) && polynomial(*node.rhs);
    case Op::pow: return polynomial(*node.lhs);
    default: return false;
  }
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

void render(const ClosedFormFn::Node& node, std::ostream& os) {
  switch (node.op) {
    case Op::constant: os << num(node.value); break;
    case Op::x: os << 'x'; break;
    case Op::add:
      os << '(';
      render(*node.lhs, os);
      os << " + ";
      render(*node.rhs, os);
      os << ')';
      break;
    case Op::mul:
      render(*node.lhs, os);
      os << '*';
      render(*node.rhs, os);
      break;
    case Op::pow:
      os << '(';
      render(*node.lhs, os);
      os << ")^" << node.n;
      break;
    case Op::exp:
    case Op::sin:
    case Op::cos:
      os << (node.op == Op::exp ? "exp(" : node.op == Op::sin ? "sin(" : "cos(");
      render(*node.lhs, os);
      os << ')';
      break;
    case Op::bump:
      os << "bump" << (node.n ? "^(" + std::to_string(node.n) + ")" : "") << '[' << num(node.a) << ','
         << num(node.b) << "](";
      render(*node.lhs, os);
      os << ')';
      break;
  }
}

std::size_t count(const ClosedFormFn::Node& node) {
  std::size_t c = 1;
  if (node.lhs) c += count(*node.lhs);
  if (node.rhs) c += count(*node.rhs);
  return c;
}

}  // namespace

ClosedFormFn::ClosedFormFn() : node_(konst(0.0)) {}
ClosedFormFn::ClosedFormFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ClosedFormFn ClosedFormFn::constant(double c) { return ClosedFormFn(konst(c)); }
ClosedFormFn ClosedFormFn::x() { return ClosedFormFn(var_x()); }
ClosedFormFn ClosedFormFn::exp(const ClosedFormFn& u) { return ClosedFormFn(unary(Op::exp, u.node_)); }
ClosedFormFn ClosedFormFn::sin(const ClosedFormFn& u) { return ClosedFormFn(unary(Op::sin, u.node_)); }
ClosedFormFn ClosedFormFn::cos(const ClosedFormFn& u) { return ClosedFormFn(unary(Op::cos, u.node_)); }
ClosedFormFn ClosedFormFn::pow(const ClosedFormFn& u, int n) { return ClosedFormFn(power(u.node_, n)); }

ClosedFormFn ClosedFormFn::bump(double a, double b, const ClosedFormFn& u) {
  if (!(a < b)) throw DomainError("bump support needs a < b");
  return ClosedFormFn(bump_node(a, b, 0, u.node_));
}

ClosedFormFn ClosedFormFn::polynomial(const std::vector<double>& coeffs) {
  NodePtr out = konst(0.0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out = add(out, mul(konst(coeffs[k]), power(var_x(), static_cast<int>(k))));
  }
  return ClosedFormFn(out);
}

ClosedFormFn operator+(const ClosedFormFn& a, const ClosedFormFn& b) { return ClosedFormFn(add(a.node_, b.node_)); }
ClosedFormFn operator*(const ClosedFormFn& a, const ClosedFormFn& b) { return ClosedFormFn(mul(a.node_, b.node_)); }
ClosedFormFn operator-(const ClosedFormFn& a, const ClosedFormFn& b) { return a + (-1.0) * b; }
ClosedFormFn operator*(double c, const ClosedFormFn& f) { return ClosedFormFn(mul(konst(c), f.node_)); }

double ClosedFormFn::operator()(double x) const { return eval<double>(*node_, x); }
long double ClosedFormFn::eval_extended(long double x) const { return eval<long double>(*node_, x); }
ClosedFormFn::Op ClosedFormFn::op() const { return node_->op; }
bool ClosedFormFn::is_constant() const { return node_->op == Op::constant; }
bool ClosedFormFn::is_zero() const { return is_const(node_, 0.0); }
bool ClosedFormFn::is_polynomial() const { return oracle::polynomial(*node_); }

std::optional<Interval> ClosedFormFn::support() const {
  if (is_zero()) return std::nullopt;
  return support_of(*node_);
}

std::string ClosedFormFn::str() const {
  std::ostringstream os;
  render(*node_, os);
  return os.str();
}

std::size_t ClosedFormFn::node_count() const { return count(*node_); }

ClosedFormFn derivative(const ClosedFormFn& f, int order) {
  if (order < 0) throw DomainError("derivative order must be >= 0");
  NodePtr out = f.node_;
  for (int k = 0; k < order; ++k) out = diff(out);
  return ClosedFormFn(out);
}

ClosedFormFn substitute(const ClosedFormFn& g, const ClosedFormFn& f) {
  return ClosedFormFn(subst(g.node_, f.node_));
}

}  // namespace regcalc::oracle
