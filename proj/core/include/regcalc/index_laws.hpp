#pragma once

#include "regcalc/ext_index.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace regcalc {

/// Hölder star i⋆j = ij/(i+j), the exponent of a product of L^i and L^j
/// functions. Requires i, j >= 1; INF acts as the identity.
ExtIndex star_holder(const ExtIndex& i, const ExtIndex& j);

/// Young exponent r with 1/r = 1/i + 1/j - 1. Requires i, j >= 1 and
/// 1/i + 1/j >= 1; throws InvalidExponents otherwise.
ExtIndex star_young(const ExtIndex& i, const ExtIndex& j);

/// A named binary function on index values (ε or δ).
class IndexFn {
 public:
  using Fn = std::function<ExtIndex(const ExtIndex&, const ExtIndex&)>;

  IndexFn() = default;
  IndexFn(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  ExtIndex operator()(const ExtIndex& i, const ExtIndex& j) const { return fn_(i, j); }
  const std::string& name() const noexcept { return name_; }
  explicit operator bool() const noexcept { return static_cast<bool>(fn_); }

  // Same function except at (i, j), where it returns `value`.
  IndexFn with_override(ExtIndex i, ExtIndex j, ExtIndex value) const;

  static IndexFn min();
  static IndexFn max();
  static IndexFn sum();
  static IndexFn first();
  static IndexFn holder();
  static IndexFn holder_floor();
  static IndexFn young();

  // Looks up a builtin by name: min, max, sum, first, holder, holder-int, young.
  static IndexFn by_name(std::string_view name);

 private:
  std::string name_;
  Fn fn_;
};

/// A named map from Γ indices to index values: the gradings p(i), α(i),
/// β(i) of the families.
class UnaryMap {
 public:
  using Fn = std::function<ExtIndex(int)>;

  UnaryMap() = default;
  UnaryMap(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  static UnaryMap identity();
  static UnaryMap constant(ExtIndex c);
  // table[i] for i < size; out-of-range lookups throw DomainError.
  static UnaryMap table(std::vector<ExtIndex> values);
  // "id", "const:N", "table:a,b,c" (values may be "inf" or "a/b").
  static UnaryMap parse(std::string_view spec);

  ExtIndex operator()(int i) const;
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  Fn fn_;
};

/// A named map on index values, used for index-structure morphisms μ.
struct ValueMap {
  std::string name;
  std::function<ExtIndex(const ExtIndex&)> fn;

  ExtIndex operator()(const ExtIndex& x) const { return fn(x); }
};

struct Counterexample {
  std::vector<ExtIndex> args;
  Grade lhs;
  Grade rhs;
  std::string note;
};

struct LawReport {
  std::string law;
  std::size_t checked = 0;
  std::vector<Counterexample> counterexamples;

  bool pass() const noexcept { return counterexamples.empty(); }
};

std::vector<ExtIndex> range_points(const GammaRange& gamma);

// δ(i,i) = i.
LawReport check_additive(const IndexFn& delta, const GammaRange& gamma);
LawReport check_additive(const IndexFn& delta, std::span<const ExtIndex> points);

// δ(ε(i,j), ε(i,k)) = ε(i, δ(j,k)).
LawReport check_left_distributive(const IndexFn& eps, const IndexFn& delta,
                                  const GammaRange& gamma);
LawReport check_left_distributive(const IndexFn& eps, const IndexFn& delta,
                                  std::span<const ExtIndex> points);

// δ(ε(i,k), ε(j,k)) = ε(δ(i,j), k).
LawReport check_right_distributive(const IndexFn& eps, const IndexFn& delta,
                                   const GammaRange& gamma);
LawReport check_right_distributive(const IndexFn& eps, const IndexFn& delta,
                                   std::span<const ExtIndex> points);

// μ(ε(i,j)) = ε′(μ(i), μ(j)).
LawReport check_index_morphism(const ValueMap& mu, const IndexFn& eps,
                               const IndexFn& eps_prime, const GammaRange& gamma);

}  // namespace regcalc
