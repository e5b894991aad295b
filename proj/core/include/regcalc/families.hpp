#pragma once

#include "regcalc/ext_index.hpp"
#include "regcalc/index_laws.hpp"

#include <functional>
#include <string>
#include <vector>

namespace regcalc {

enum class FamilyKind { ck, lp_holder, lp_young, sobolev };
enum class Monotonicity { increasing, decreasing, none };
enum class DomainKind { bounded, unbounded };
enum class ProductKind { none, pointwise, convolution };
enum class HolderMode { strict_zs, int_part };
enum class StarKind { holder, holder_int, young };

std::string to_string(FamilyKind kind);
std::string to_string(Monotonicity m);
std::string to_string(DomainKind d);
FamilyKind parse_family_kind(std::string_view keyword);

/// Which canonical functions lie in every space of a family.
struct MembershipRules {
  bool constants_on_bounded = true;
  bool constants_on_unbounded = true;
  bool contains_zero = true;
  bool polynomials_on_bounded = true;

  bool contains_constants(DomainKind domain) const {
    return domain == DomainKind::bounded ? constants_on_bounded : constants_on_unbounded;
  }
};

/// A graded family B_i with its additive (δ) and multiplicative (ε)
/// structures.
///
/// `grading` is tabulated over `gamma`: entry n is the grade of B at index
/// gamma.lo + n (the exponent for L^p families, the smoothness order for
/// C^{k-α}, the Sobolev order for chains). ε and δ act on grade values.
/// `space_order` records how spaces nest as the grade grows; every builtin
/// family is decreasing (a bigger grade is a smaller space).
struct FamilyDescriptor {
  std::string name;
  FamilyKind kind = FamilyKind::ck;
  GammaRange gamma;
  UnaryMap source;
  std::vector<Grade> grading;
  Monotonicity trend = Monotonicity::none;
  Monotonicity space_order = Monotonicity::decreasing;
  IndexFn eps;
  IndexFn delta;
  ProductKind product = ProductKind::none;
  MembershipRules membership;
  DomainKind domain = DomainKind::bounded;
  // Maps a value of the annotation grading (α(i) or p(i)) to a grade.
  std::function<Grade(const ExtIndex&)> grade_of;

  Grade grade(int i) const;
  // Grade values present on the range (zero-space entries skipped).
  std::vector<ExtIndex> grade_points() const;
  // "L", "C" or "W".
  std::string symbol() const;
};

Monotonicity trend_of(const std::vector<Grade>& grading);

FamilyDescriptor make_ck_family(ExtIndex k, const UnaryMap& alpha, GammaRange gamma,
                                DomainKind domain = DomainKind::bounded);

FamilyDescriptor make_lp_holder_family(const UnaryMap& p, HolderMode mode, GammaRange gamma,
                                       DomainKind domain = DomainKind::bounded);

FamilyDescriptor make_lp_young_family(const UnaryMap& p, GammaRange gamma);

FamilyDescriptor make_sobolev_chain(int n, int p, int q, int r, GammaRange gamma);

/// p(i)⋆p(j) <= p(i)⋆p(k) whenever p(j) <= p(k), over all triples.
LawReport check_distributivity_criterion(const UnaryMap& p, StarKind star,
                                         const GammaRange& gamma);

LawReport check_family_additive(const FamilyDescriptor& family);
LawReport check_family_left_distributive(const FamilyDescriptor& family);
LawReport check_family_right_distributive(const FamilyDescriptor& family);

}  // namespace regcalc
