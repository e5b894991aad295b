#include "regcalc/index_laws.hpp"

#include "regcalc/error.hpp"

#include <sstream>

namespace regcalc {

namespace {

void require_at_least_one(const ExtIndex& x, const char* op) {
  if (x < ExtIndex(1)) {
    throw DomainError(std::string(op) + " needs exponents >= 1, got " + x.str());
  }
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

ExtIndex star_holder(const ExtIndex& i, const ExtIndex& j) {
  require_at_least_one(i, "star_holder");
  require_at_least_one(j, "star_holder");
  if (i.is_inf()) return j;
  if (j.is_inf()) return i;
  return ExtIndex(i.value() * j.value() / (i.value() + j.value()));
}

ExtIndex star_young(const ExtIndex& i, const ExtIndex& j) {
  require_at_least_one(i, "star_young");
  require_at_least_one(j, "star_young");
  Rational s = Rational(-1);
  s += i.is_inf() ? Rational(0) : Rational(1) / i.value();
  s += j.is_inf() ? Rational(0) : Rational(1) / j.value();
  if (s < 0) {
    throw InvalidExponents("Young's inequality needs 1/i + 1/j >= 1, got i=" +
                           i.str() + ", j=" + j.str());
  }
  if (s == 0) return ExtIndex::inf();
  return ExtIndex(Rational(1) / s);
}

IndexFn IndexFn::with_override(ExtIndex i, ExtIndex j, ExtIndex value) const {
  Fn base = fn_;
  return IndexFn(name_ + "[" + i.str() + "," + j.str() + "->" + value.str() + "]",
                 [base, i, j, value](const ExtIndex& a, const ExtIndex& b) {
                   if (a == i && b == j) return value;
                   return base(a, b);
                 });
}

IndexFn IndexFn::min() {
  return {"min", [](const ExtIndex& a, const ExtIndex& b) { return regcalc::min(a, b); }};
}

IndexFn IndexFn::max() {
  return {"max", [](const ExtIndex& a, const ExtIndex& b) { return regcalc::max(a, b); }};
}

IndexFn IndexFn::sum() {
  return {"sum", [](const ExtIndex& a, const ExtIndex& b) { return a + b; }};
}

IndexFn IndexFn::first() {
  return {"first", [](const ExtIndex& a, const ExtIndex&) { return a; }};
}

IndexFn IndexFn::holder() { return {"holder", star_holder}; }

IndexFn IndexFn::holder_floor() {
  return {"holder-int",
          [](const ExtIndex& a, const ExtIndex& b) { return star_holder(a, b).floor(); }};
}

IndexFn IndexFn::young() { return {"young", star_young}; }

IndexFn IndexFn::by_name(std::string_view name) {
  if (name == "min") return min();
  if (name == "max") return max();
  if (name == "sum") return sum();
  if (name == "first") return first();
  if (name == "holder") return holder();
  if (name == "holder-int") return holder_floor();
  if (name == "young") return young();
  throw DomainError("unknown index function '" + std::string(name) + "'");
}

UnaryMap UnaryMap::identity() {
  return {"id", [](int i) { return ExtIndex(i); }};
}

UnaryMap UnaryMap::constant(ExtIndex c) {
  return {"const:" + c.str(), [c](int) { return c; }};
}

UnaryMap UnaryMap::table(std::vector<ExtIndex> values) {
  if (values.empty()) throw DomainError("empty table");
  std::ostringstream name;
  name << "table:";
  for (std::size_t n = 0; n < values.size(); ++n) {
    name << (n ? "," : "") << values[n];
  }
  return {name.str(), [values = std::move(values)](int i) {
            if (i < 0 || static_cast<std::size_t>(i) >= values.size()) {
              throw DomainError("table has no entry for index " + std::to_string(i));
            }
            return values[static_cast<std::size_t>(i)];
          }};
}

UnaryMap UnaryMap::parse(std::string_view spec) {
  if (spec == "id") return identity();
  if (spec.starts_with("const:")) return constant(ExtIndex::parse(spec.substr(6)));
  if (spec.starts_with("table:")) {
    std::vector<ExtIndex> values;
    for (const auto& part : split(spec.substr(6), ',')) {
      values.push_back(ExtIndex::parse(part));
    }
    return table(std::move(values));
  }
  throw DomainError("unknown grading '" + std::string(spec) +
                    "' (expected id, const:N or table:a,b,...)");
}

ExtIndex UnaryMap::operator()(int i) const {
  if (!fn_) throw DomainError("empty grading map");
  return fn_(i);
}

std::vector<ExtIndex> range_points(const GammaRange& gamma) {
  std::vector<ExtIndex> points;
  points.reserve(static_cast<std::size_t>(gamma.size()));
  for (int i = gamma.lo; i <= gamma.hi; ++i) points.emplace_back(i);
  return points;
}

LawReport check_additive(const IndexFn& delta, std::span<const ExtIndex> points) {
  LawReport report{"additive"};
  for (const auto& i : points) {
    ++report.checked;
    ExtIndex value = delta(i, i);
    if (value != i) report.counterexamples.push_back({{i}, value, i});
  }
  return report;
}

LawReport check_additive(const IndexFn& delta, const GammaRange& gamma) {
  auto points = range_points(gamma);
  return check_additive(delta, points);
}

LawReport check_left_distributive(const IndexFn& eps, const IndexFn& delta,
                                  std::span<const ExtIndex> points) {
  LawReport report{"left_distributive"};
  for (const auto& i : points) {
    for (const auto& j : points) {
      for (const auto& k : points) {
        ++report.checked;
        ExtIndex lhs = delta(eps(i, j), eps(i, k));
        ExtIndex rhs = eps(i, delta(j, k));
        if (lhs != rhs) report.counterexamples.push_back({{i, j, k}, lhs, rhs});
      }
    }
  }
  return report;
}

LawReport check_left_distributive(const IndexFn& eps, const IndexFn& delta,
                                  const GammaRange& gamma) {
  auto points = range_points(gamma);
  return check_left_distributive(eps, delta, points);
}

LawReport check_right_distributive(const IndexFn& eps, const IndexFn& delta,
                                   std::span<const ExtIndex> points) {
  LawReport report{"right_distributive"};
  for (const auto& i : points) {
    for (const auto& j : points) {
      for (const auto& k : points) {
        ++report.checked;
        ExtIndex lhs = delta(eps(i, k), eps(j, k));
        ExtIndex rhs = eps(delta(i, j), k);
        if (lhs != rhs) report.counterexamples.push_back({{i, j, k}, lhs, rhs});
      }
    }
  }
  return report;
}

LawReport check_right_distributive(const IndexFn& eps, const IndexFn& delta,
                                   const GammaRange& gamma) {
  auto points = range_points(gamma);
  return check_right_distributive(eps, delta, points);
}

LawReport check_index_morphism(const ValueMap& mu, const IndexFn& eps,
                               const IndexFn& eps_prime, const GammaRange& gamma) {
  LawReport report{"index_morphism"};
  auto points = range_points(gamma);
  for (const auto& i : points) {
    for (const auto& j : points) {
      ++report.checked;
      ExtIndex lhs = mu(eps(i, j));
      ExtIndex rhs = eps_prime(mu(i), mu(j));
      if (lhs != rhs) report.counterexamples.push_back({{i, j}, lhs, rhs});
    }
  }
  return report;
}

}  // namespace regcalc
