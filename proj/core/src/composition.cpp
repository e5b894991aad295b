#include "regcalc/composition.hpp"

#include "regcalc/error.hpp"

namespace regcalc {

namespace {

Grade lift_eps(const IndexFn& eps, const Grade& a, const Grade& b) {
  if (!a || !b) return std::nullopt;
  return eps(*a, *b);
}

Grade lift_delta(const IndexFn& delta, const Grade& a, const Grade& b) {
  if (!a) return b;
  if (!b) return a;
  return delta(*a, *b);
}

Grade fold_blocks(const SetPartition& partition, const GradeMap& inner, const IndexFn& eps) {
  const auto& blocks = partition.blocks;
  Grade acc = inner(static_cast<int>(blocks.front().size()));
  for (std::size_t r = 1; r < blocks.size(); ++r) {
    acc = lift_eps(eps, inner(static_cast<int>(blocks[r].size())), acc);
  }
  return acc;
}

Grade bar(const SetPartition& partition, const GradeMap& outer, const GradeMap& inner,
          const IndexFn& eps) {
  return lift_eps(eps, outer(static_cast<int>(partition.block_count())),
                  fold_blocks(partition, inner, eps));
}

std::vector<SetPartition> arranged(int i, const OrderingFn& ord, int cap) {
  auto parts = enumerate_partitions(i, cap);
  for (auto& p : parts) ord.arrange_blocks(p);
  ord.arrange_partitions(parts);
  return parts;
}

GradeMap as_grades(const UnaryMap& m) {
  return [m](int i) -> Grade { return m(i); };
}

ExtIndex require_grade(const Grade& g) {
  // Plain unary maps never produce the zero space.
  if (!g) throw DomainError("unexpected zero space");
  return *g;
}

// True when the space at grade `from` embeds into the space at grade `to`.
bool embeds(const Grade& from, const Grade& to, Monotonicity order) {
  if (!from) return true;
  if (!to) return false;
  switch (order) {
    case Monotonicity::decreasing: return *from >= *to;
    case Monotonicity::increasing: return *from <= *to;
    case Monotonicity::none: break;
  }
  return *from == *to;
}

}  // namespace

ExtIndex eps_fold(const SetPartition& partition, const UnaryMap& alpha, const IndexFn& eps) {
  return require_grade(fold_blocks(partition, as_grades(alpha), eps));
}

ExtIndex eps_bar(const SetPartition& partition, const UnaryMap& alpha, const IndexFn& eps) {
  auto g = as_grades(alpha);
  return require_grade(bar(partition, g, g, eps));
}

Grade composed_grade(const GradeMap& outer, const GradeMap& inner, const IndexFn& eps,
                     const IndexFn& delta, int i, const OrderingFn& ord, int cap) {
  if (i == 0) return outer(0);
  auto parts = arranged(i, ord, cap);
  Grade acc = bar(parts.front(), outer, inner, eps);
  for (std::size_t n = 1; n < parts.size(); ++n) {
    acc = lift_delta(delta, bar(parts[n], outer, inner, eps), acc);
  }
  return acc;
}

ExtIndex alpha_composed(const UnaryMap& alpha, const IndexFn& eps, const IndexFn& delta, int i,
                        const OrderingFn& ord, int cap) {
  if (i < 1) throw DomainError("alpha_composed needs order >= 1");
  auto g = as_grades(alpha);
  return require_grade(composed_grade(g, g, eps, delta, i, ord, cap));
}

ExtIndex composed_beta(const UnaryMap& beta_outer, const UnaryMap& beta_inner, int i, int cap) {
  if (i == 0) return beta_outer(0);
  ExtIndex best(0);
  for (const auto& p : enumerate_partitions(i, cap)) {
    best = max(best, beta_outer(static_cast<int>(p.block_count())));
    for (const auto& b : p.blocks) best = max(best, beta_inner(static_cast<int>(b.size())));
  }
  return best;
}

ExtIndex beta_composed(const UnaryMap& beta, int i, int cap) {
  if (i < 1) throw DomainError("beta_composed needs order >= 1");
  return composed_beta(beta, beta, i, cap);
}

std::vector<ComposedIndices> composition_table(const UnaryMap& alpha, const UnaryMap& beta,
                                               const IndexFn& eps, const IndexFn& delta,
                                               int max_order, const OrderingFn& ord) {
  std::vector<ComposedIndices> rows;
  for (int i = 1; i <= max_order; ++i) {
    rows.push_back({i, alpha_composed(alpha, eps, delta, i, ord), beta_composed(beta, i)});
  }
  return rows;
}

LawReport check_ordered(const FamilyDescriptor& family, const UnaryMap& alpha,
                        const UnaryMap& beta, const ExtIndex& k, const GammaRange& gamma,
                        const OrderingFn& ord) {
  if (!family.eps) {
    throw FamilyMismatch("family '" + family.name + "' has no multiplicative structure");
  }
  if (family.space_order == Monotonicity::none) {
    throw DomainError("ordered check needs an increasing or decreasing family");
  }
  LawReport report{"ordered"};
  GradeMap grades = [&](int i) { return family.grade_of(alpha(i)); };
  const int top = k.is_inf() ? gamma.hi
                             : std::min(gamma.hi, static_cast<int>(k.floor().value().convert_to<long>()));
  for (int i = std::max(1, gamma.lo); i <= top; ++i) {
    ++report.checked;
    Grade own = grades(i);
    Grade composed;
    try {
      composed = composed_grade(grades, grades, family.eps, family.delta, i, ord);
    } catch (const Error& e) {
      // The composed exponent left the family's index set.
      report.counterexamples.push_back({{ExtIndex(i)}, std::nullopt, own,
                                        "alpha undefined: " + e.kind() + ": " + e.what()});
      continue;
    }
    if (!embeds(composed, own, family.space_order)) {
      report.counterexamples.push_back({{ExtIndex(i)}, composed, own, "alpha"});
    }
    ExtIndex beta_le = beta_composed(beta, i);
    if (beta_le > beta(i)) {
      report.counterexamples.push_back({{ExtIndex(i)}, beta_le, beta(i), "beta"});
    }
  }
  return report;
}

bool check_unital(const FamilyDescriptor& family, const UnaryMap& alpha, const UnaryMap& beta,
                  const ExtIndex& k) {
  if (k < ExtIndex(1)) return true;
  // Orders >= 2 vanish and the zero function lies in every space.
  if (!family.membership.contains_zero) return false;
  Grade g = family.grade_of(alpha(1));
  if (!g) return false;
  if (!checked_sub(k, beta(1))) return false;
  bool sup_norm = family.kind != FamilyKind::ck && g->is_inf();
  return sup_norm || family.membership.contains_constants(family.domain);
}

}  // namespace regcalc
