#include "regcalc/inference.hpp"

#include "regcalc/composition.hpp"
#include "regcalc/error.hpp"

#include <sstream>

namespace regcalc {

namespace {

using dsl::Expr;

Grade delta_lift(const IndexFn& delta, const Grade& a, const Grade& b) {
  if (!a) return b;
  if (!b) return a;
  return delta(*a, *b);
}

Grade min_lift(const Grade& a, const Grade& b) {
  if (!a) return b;
  if (!b) return a;
  return min(*a, *b);
}

RegClass normalized(RegClass c) {
  if (c.is_zero()) return RegClass::zero(c.symbol);
  return c;
}

struct Typed {
  RegClass cls;
  const FamilyDescriptor* family = nullptr;
};

std::string structure_key(const FamilyDescriptor& f) {
  return to_string(f.kind) + "/" + (f.eps ? f.eps.name() : "-") + "/" + f.delta.name();
}

class Inferencer {
 public:
  explicit Inferencer(const Env& env) : env_(env) {}

  Typed infer(const Expr& e, int order) {
    auto key = std::make_pair(&e, order);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Typed t = compute(e, order);
    t.cls = normalized(t.cls);
    memo_.emplace(key, t);
    return t;
  }

 private:
  Typed compute(const Expr& e, int order) {
    switch (e.kind) {
      case Expr::Kind::var: return variable(e, order);
      case Expr::Kind::deriv: return infer(*e.lhs, order + e.order);
      case Expr::Kind::add: return add(e, order);
      case Expr::Kind::mul: return product(e, order, ProductKind::pointwise);
      case Expr::Kind::conv: return product(e, order, ProductKind::convolution);
      case Expr::Kind::compose: return compose(e, order);
    }
    throw DomainError("unknown expression kind");
  }

  Typed variable(const Expr& e, int order) {
    auto it = env_.find(e.name);
    if (it == env_.end()) throw DomainError("unbound variable " + e.name);
    const Annotation& a = it->second;
    if (a.k.is_finite() && ExtIndex(order) > a.k) {
      throw OrderOverflow("order " + std::to_string(order) + " exceeds k = " + a.k.str() +
                          " of '" + e.name + "'");
    }
    RegClass c{a.family.grade_of(a.alpha(order)), checked_sub(a.k, a.beta(order)),
               a.family.symbol()};
    return {c, &a.family};
  }

  const FamilyDescriptor* common(const Typed& l, const Typed& r, const char* op) {
    if (structure_key(*l.family) != structure_key(*r.family)) {
      throw FamilyMismatch(std::string(op) + " combines '" + l.family->name + "' with '" +
                           r.family->name + "'");
    }
    return l.family;
  }

  Typed add(const Expr& e, int order) {
    Typed l = infer(*e.lhs, order);
    Typed r = infer(*e.rhs, order);
    const FamilyDescriptor* f = common(l, r, "add");
    if (l.cls.is_zero()) return {r.cls, f};
    if (r.cls.is_zero()) return {l.cls, f};
    return {{delta_lift(f->delta, l.cls.b_index, r.cls.b_index),
             min_lift(l.cls.smooth, r.cls.smooth), f->symbol()},
            f};
  }

  void require_product(const FamilyDescriptor& f, ProductKind kind, const char* op) {
    if (f.product != kind || !f.eps) {
      throw FamilyMismatch(std::string(op) + " is not defined on family '" + f.name + "'");
    }
  }

  // Leibniz split: all a + b = order, each term ε(class_a(l), class_b(r)),
  // folded by δ; the smooth part is the min over the surviving terms.
  Typed product(const Expr& e, int order, ProductKind kind) {
    const char* op = kind == ProductKind::pointwise ? "mul" : "conv";
    Typed first = infer(*e.lhs, 0);
    Typed second = infer(*e.rhs, 0);
    const FamilyDescriptor* f = common(first, second, op);
    require_product(*f, kind, op);

    RegClass acc = RegClass::zero(f->symbol());
    for (int a = 0; a <= order; ++a) {
      RegClass cl = infer(*e.lhs, a).cls;
      RegClass cr = infer(*e.rhs, order - a).cls;
      if (cl.is_zero() || cr.is_zero()) continue;
      RegClass term{f->eps(*cl.b_index, *cr.b_index), min(*cl.smooth, *cr.smooth), f->symbol()};
      if (acc.is_zero()) {
        acc = term;
      } else {
        acc = {delta_lift(f->delta, term.b_index, acc.b_index), min_lift(term.smooth, acc.smooth),
               f->symbol()};
      }
    }
    return {acc, f};
  }

  Typed compose(const Expr& e, int order) {
    const Expr& outer = *e.lhs;
    const Expr& inner = *e.rhs;
    Typed g0 = infer(outer, 0);
    Typed f0 = infer(inner, 0);
    const FamilyDescriptor* f = common(g0, f0, "compose");
    require_product(*f, ProductKind::pointwise, "compose");
    if (order == 0) {
      if (g0.cls.is_zero()) return {g0.cls, f};
      return {{g0.cls.b_index, min_lift(g0.cls.smooth, f0.cls.smooth), f->symbol()}, f};
    }
    GradeMap outer_b = [&](int m) { return infer(outer, m).cls.b_index; };
    GradeMap inner_b = [&](int m) { return infer(inner, m).cls.b_index; };
    Grade b = composed_grade(outer_b, inner_b, f->eps, f->delta, order);

    // Smooth part: k - β≤(order) generalised to min over all Faà di Bruno
    // factors of their smooth orders.
    Grade smooth;
    bool any = false;
    for (const auto& p : enumerate_partitions(order)) {
      RegClass go = infer(outer, static_cast<int>(p.block_count())).cls;
      if (go.is_zero()) continue;
      Grade term = go.smooth;
      bool zero = false;
      for (const auto& blk : p.blocks) {
        RegClass fi = infer(inner, static_cast<int>(blk.size())).cls;
        if (fi.is_zero()) {
          zero = true;
          break;
        }
        term = min(*term, *fi.smooth);
      }
      if (zero) continue;
      smooth = any ? min_lift(smooth, term) : term;
      any = true;
    }
    if (!any) return {RegClass::zero(f->symbol()), f};
    return {{b, smooth, f->symbol()}, f};
  }

  const Env& env_;
  std::map<std::pair<const Expr*, int>, Typed> memo_;
};

}  // namespace

std::string RegClass::str() const {
  if (is_zero()) return "zero";
  return symbol + "^" + b_index->str() + " \u2229 C^" + smooth->str();
}

bool operator==(const RegClass& a, const RegClass& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return a.b_index == b.b_index && a.smooth == b.smooth && a.symbol == b.symbol;
}

Env build_env(const dsl::Program& program, int gamma_max) {
  Env env;
  for (const auto& d : program.decls) {
    auto fail = [&](const std::string& msg) -> void {
      throw dsl::DslError("DomainError", d.line, 1, "in declaration of '" + d.name + "': " + msg);
    };
    try {
      UnaryMap beta = UnaryMap::parse(d.beta);
      ExtIndex k = d.k.value_or(ExtIndex::inf());
      int hi = gamma_max;
      if (k.is_finite()) hi = std::max(hi, static_cast<int>(k.floor().value().convert_to<long>()));
      if (d.grading && d.grading->starts_with("table:")) {
        hi = static_cast<int>(std::count(d.grading->begin(), d.grading->end(), ','));
      }
      hi = std::max(hi, 1);
      GammaRange gamma(0, hi);
      DomainKind domain = d.domain.value_or(d.family == FamilyKind::lp_young ? DomainKind::unbounded
                                                                              : DomainKind::bounded);
      if (d.family != FamilyKind::sobolev && !d.grading) fail("missing grading (id, const:N or table:...)");
      if (d.family != FamilyKind::lp_holder && d.mode) fail("mode: applies to lp-holder only");
      if (d.family != FamilyKind::sobolev && (d.n || d.p || d.q || d.r)) {
        fail("n:/p:/q:/r: apply to sobolev only");
      }

      switch (d.family) {
        case FamilyKind::ck: {
          if (!d.k) fail("ck needs k:N");
          UnaryMap alpha = UnaryMap::parse(*d.grading);
          env.emplace(d.name, Annotation{make_ck_family(k, alpha, gamma, domain), alpha, beta, k});
          break;
        }
        case FamilyKind::lp_holder: {
          UnaryMap alpha = UnaryMap::parse(*d.grading);
          auto fam = make_lp_holder_family(alpha, d.mode.value_or(HolderMode::strict_zs), gamma, domain);
          env.emplace(d.name, Annotation{std::move(fam), alpha, beta, k});
          break;
        }
        case FamilyKind::lp_young: {
          if (domain != DomainKind::unbounded) fail("lp-young lives on unbounded domains");
          UnaryMap alpha = UnaryMap::parse(*d.grading);
          env.emplace(d.name, Annotation{make_lp_young_family(alpha, gamma), alpha, beta, k});
          break;
        }
        case FamilyKind::sobolev: {
          if (!d.n || !d.p || !d.q || !d.r) fail("sobolev needs n:, p:, q: and r:");
          if (d.grading) fail("sobolev takes its grading from n:, p:, q:, r:");
          auto fam = make_sobolev_chain(*d.n, *d.p, *d.q, *d.r, gamma);
          UnaryMap alpha = fam.source;
          env.emplace(d.name, Annotation{std::move(fam), alpha, beta, k});
          break;
        }
      }
    } catch (const dsl::DslError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return env;
}

RegClass infer_class(const dsl::Expr& expr, int order, const Env& env) {
  if (order < 0) throw DomainError("negative derivative order");
  return Inferencer(env).infer(expr, order).cls;
}

std::vector<QueryResult> run_queries(const dsl::Program& program, const Env& env) {
  std::vector<QueryResult> results;
  for (const auto& q : program.queries) {
    QueryResult r;
    r.query = &q;
    try {
      r.cls = infer_class(*q.expr, q.order, env);
    } catch (const Error& e) {
      r.error = std::to_string(q.line) + ":1: error: " + e.kind() + ": " + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_report(const std::vector<QueryResult>& results) {
  std::ostringstream os;
  os << "# regcalc inference report; products above order 0 use the Leibniz split rule "
        "(extension)\n";
  for (const auto& r : results) {
    if (!r.cls) continue;
    os << "class(" << dsl::to_string(*r.query->expr) << ", " << r.query->order << ") = ";
    os << r.cls->str() << '\n';
  }
  return os.str();
}

}  // namespace regcalc
