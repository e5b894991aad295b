#include "regcalc/families.hpp"

#include "regcalc/error.hpp"

namespace regcalc {

namespace {

std::vector<Grade> tabulate(const GammaRange& gamma, const std::function<Grade(int)>& g) {
  std::vector<Grade> out;
  out.reserve(static_cast<std::size_t>(gamma.size()));
  for (int i = gamma.lo; i <= gamma.hi; ++i) out.push_back(g(i));
  return out;
}

void require_eps(const FamilyDescriptor& family) {
  if (!family.eps) {
    throw FamilyMismatch("family '" + family.name + "' has no multiplicative structure");
  }
}

IndexFn holder_strict() {
  return {"holder", [](const ExtIndex& a, const ExtIndex& b) {
            ExtIndex r = star_holder(a, b);
            if (r.is_finite() && !r.is_integer()) {
              throw NotInZS(a.str() + " + " + b.str() + " does not divide " + a.str() +
                            " * " + b.str() + " (star = " + r.str() + ")");
            }
            return r;
          }};
}

}  // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::ck: return "ck";
    case FamilyKind::lp_holder: return "lp-holder";
    case FamilyKind::lp_young: return "lp-young";
    case FamilyKind::sobolev: return "sobolev";
  }
  return "?";
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::none: return "none";
  }
  return "?";
}

std::string to_string(DomainKind d) {
  return d == DomainKind::bounded ? "bounded" : "unbounded";
}

FamilyKind parse_family_kind(std::string_view keyword) {
  if (keyword == "ck") return FamilyKind::ck;
  if (keyword == "lp-holder") return FamilyKind::lp_holder;
  if (keyword == "lp-young") return FamilyKind::lp_young;
  if (keyword == "sobolev") return FamilyKind::sobolev;
  throw DomainError("unknown family '" + std::string(keyword) + "'");
}

Grade FamilyDescriptor::grade(int i) const {
  if (i < gamma.lo || i > gamma.hi) {
    throw DomainError("index " + std::to_string(i) + " outside the range of family '" +
                      name + "'");
  }
  return grading[static_cast<std::size_t>(i - gamma.lo)];
}

std::vector<ExtIndex> FamilyDescriptor::grade_points() const {
  std::vector<ExtIndex> points;
  for (const auto& g : grading) {
    if (g) points.push_back(*g);
  }
  return points;
}

std::string FamilyDescriptor::symbol() const {
  switch (kind) {
    case FamilyKind::ck: return "C";
    case FamilyKind::sobolev: return "W";
    default: return "L";
  }
}

Monotonicity trend_of(const std::vector<Grade>& grading) {
  // The zero space sits below every grade.
  auto less = [](const Grade& a, const Grade& b) {
    if (!b) return false;
    if (!a) return true;
    return *a < *b;
  };
  bool up = true;
  bool down = true;
  for (std::size_t n = 1; n < grading.size(); ++n) {
    if (less(grading[n], grading[n - 1])) up = false;
    if (less(grading[n - 1], grading[n])) down = false;
  }
  if (down) return Monotonicity::decreasing;
  if (up) return Monotonicity::increasing;
  return Monotonicity::none;
}

FamilyDescriptor make_ck_family(ExtIndex k, const UnaryMap& alpha, GammaRange gamma,
                                DomainKind domain) {
  auto grade_of = [k](const ExtIndex& a) -> Grade {
    if (k.is_inf() && a.is_inf()) {
      throw DomainError("C^{k-alpha} with k = alpha = inf is undefined");
    }
    return checked_sub(k, a);
  };
  FamilyDescriptor f;
  f.name = "C^{" + k.str() + "-" + alpha.name() + "}";
  f.kind = FamilyKind::ck;
  f.gamma = gamma;
  f.source = alpha;
  f.grading = tabulate(gamma, [&](int i) { return grade_of(alpha(i)); });
  f.trend = trend_of(f.grading);
  f.eps = IndexFn::min();
  f.delta = IndexFn::min();
  f.product = ProductKind::pointwise;
  f.membership = {true, true, true, true};
  f.domain = domain;
  f.grade_of = grade_of;
  return f;
}

FamilyDescriptor make_lp_holder_family(const UnaryMap& p, HolderMode mode, GammaRange gamma,
                                       DomainKind domain) {
  const ExtIndex floor_value = mode == HolderMode::strict_zs ? ExtIndex(2) : ExtIndex(1);
  FamilyDescriptor f;
  f.name = "L^{" + p.name() + "}";
  f.kind = FamilyKind::lp_holder;
  f.gamma = gamma;
  f.source = p;
  f.grading = tabulate(gamma, [&](int i) -> Grade {
    ExtIndex v = p(i);
    if (v < floor_value) {
      throw DomainError("L^p Hoelder family needs p(i) >= " + floor_value.str() +
                        ", got p(" + std::to_string(i) + ") = " + v.str());
    }
    return v;
  });
  f.trend = trend_of(f.grading);
  f.eps = mode == HolderMode::strict_zs ? holder_strict() : IndexFn::holder_floor();
  f.delta = IndexFn::min();
  f.product = ProductKind::pointwise;
  f.membership = {true, false, true, true};
  f.domain = domain;
  f.grade_of = [](const ExtIndex& a) -> Grade { return a; };
  return f;
}

FamilyDescriptor make_lp_young_family(const UnaryMap& p, GammaRange gamma) {
  FamilyDescriptor f;
  f.name = "L^{" + p.name() + "}*";
  f.kind = FamilyKind::lp_young;
  f.gamma = gamma;
  f.source = p;
  f.grading = tabulate(gamma, [&](int i) -> Grade {
    ExtIndex v = p(i);
    if (v < ExtIndex(1)) {
      throw DomainError("L^p Young family needs p(i) >= 1, got p(" + std::to_string(i) +
                        ") = " + v.str());
    }
    return v;
  });
  f.trend = trend_of(f.grading);
  f.eps = IndexFn::young();
  f.delta = IndexFn::min();
  f.product = ProductKind::convolution;
  f.membership = {true, false, true, true};
  f.domain = DomainKind::unbounded;
  f.grade_of = [](const ExtIndex& a) -> Grade { return a; };
  return f;
}

FamilyDescriptor make_sobolev_chain(int n, int p, int q, int r, GammaRange gamma) {
  if (n <= 0 || p <= 0 || q <= 0 || r <= 0) {
    throw DomainError("Sobolev chain parameters must be positive");
  }
  if (p >= q) {
    throw DomainError("Sobolev chain needs p < q, got p=" + std::to_string(p) +
                      ", q=" + std::to_string(q));
  }
  // l(r) = r + n(p - q)/(pq), iterated on the floored value and clamped at 0.
  const Rational step = Rational(n) * Rational(p - q) / Rational(p * q);
  std::vector<ExtIndex> orders;
  Rational current(r);
  for (int i = 0; i <= gamma.hi; ++i) {
    orders.emplace_back(current);
    Rational next = current + step;
    current = next < 0 ? Rational(0) : Rational(ExtIndex(next).floor().value());
  }
  FamilyDescriptor f;
  f.name = "W^{l,q}(n=" + std::to_string(n) + ",p=" + std::to_string(p) +
           ",q=" + std::to_string(q) + ",r=" + std::to_string(r) + ")";
  f.kind = FamilyKind::sobolev;
  f.gamma = gamma;
  f.source = UnaryMap::table(orders);
  f.grading = tabulate(gamma, [&](int i) -> Grade { return orders[static_cast<std::size_t>(i)]; });
  f.trend = trend_of(f.grading);
  f.delta = IndexFn::min();
  f.product = ProductKind::none;
  f.membership = {true, false, true, true};
  f.domain = DomainKind::bounded;
  f.grade_of = [](const ExtIndex& a) -> Grade { return a; };
  return f;
}

LawReport check_distributivity_criterion(const UnaryMap& p, StarKind star,
                                         const GammaRange& gamma) {
  IndexFn fn = star == StarKind::holder       ? IndexFn::holder()
               : star == StarKind::holder_int ? IndexFn::holder_floor()
                                              : IndexFn::young();
  LawReport report{"distributivity_criterion"};
  for (int i = gamma.lo; i <= gamma.hi; ++i) {
    for (int j = gamma.lo; j <= gamma.hi; ++j) {
      for (int k = gamma.lo; k <= gamma.hi; ++k) {
        ++report.checked;
        if (!(p(j) <= p(k))) continue;
        ExtIndex lhs = fn(p(i), p(j));
        ExtIndex rhs = fn(p(i), p(k));
        if (!(lhs <= rhs)) {
          report.counterexamples.push_back({{ExtIndex(i), ExtIndex(j), ExtIndex(k)}, lhs, rhs});
        }
      }
    }
  }
  return report;
}

LawReport check_family_additive(const FamilyDescriptor& family) {
  auto points = family.grade_points();
  return check_additive(family.delta, points);
}

LawReport check_family_left_distributive(const FamilyDescriptor& family) {
  require_eps(family);
  auto points = family.grade_points();
  return check_left_distributive(family.eps, family.delta, points);
}

LawReport check_family_right_distributive(const FamilyDescriptor& family) {
  require_eps(family);
  auto points = family.grade_points();
  return check_right_distributive(family.eps, family.delta, points);
}

}  // namespace regcalc
