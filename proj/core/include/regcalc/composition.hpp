#pragma once

#include "regcalc/ext_index.hpp"
#include "regcalc/families.hpp"
#include "regcalc/index_laws.hpp"
#include "regcalc/partitions.hpp"

#include <functional>
#include <vector>

namespace regcalc {

using GradeMap = std::function<Grade(int)>;

// Right fold of ε over α(|block|), blocks taken in the partition's order
// from last to first: ε(α|b_max|, ε(..., ε(α|b_min+1|, α|b_min|))).
ExtIndex eps_fold(const SetPartition& partition, const UnaryMap& alpha, const IndexFn& eps);

// ε(α(#blocks), eps_fold(partition)).
ExtIndex eps_bar(const SetPartition& partition, const UnaryMap& alpha, const IndexFn& eps);

/// Regularity index of the order-i derivative of g∘f: right fold of δ over
/// eps_bar of every partition of [i].
ExtIndex alpha_composed(const UnaryMap& alpha, const IndexFn& eps, const IndexFn& delta, int i,
                        const OrderingFn& ord = OrderingFn::canonical(),
                        int cap = kDefaultPartitionCap);

/// Max over partitions μ of [i] and blocks b of β(#blocks of μ), β(|b|).
ExtIndex beta_composed(const UnaryMap& beta, int i, int cap = kDefaultPartitionCap);

/// alpha_composed over grades with separate outer (g) and inner (f)
/// gradings. The zero space absorbs under ε and is neutral under δ. i = 0
/// stands for the empty partition and yields outer(0).
Grade composed_grade(const GradeMap& outer, const GradeMap& inner, const IndexFn& eps,
                     const IndexFn& delta, int i,
                     const OrderingFn& ord = OrderingFn::canonical(),
                     int cap = kDefaultPartitionCap);

/// beta_composed with separate outer and inner β; i = 0 yields outer(0).
ExtIndex composed_beta(const UnaryMap& beta_outer, const UnaryMap& beta_inner, int i,
                       int cap = kDefaultPartitionCap);

struct ComposedIndices {
  int order = 0;
  ExtIndex alpha;
  ExtIndex beta;
};

std::vector<ComposedIndices> composition_table(const UnaryMap& alpha, const UnaryMap& beta,
                                               const IndexFn& eps, const IndexFn& delta,
                                               int max_order,
                                               const OrderingFn& ord = OrderingFn::canonical());

/// Whether the (α≤, β≤) class embeds back into (α, β) for every order
/// 1 <= i <= min(gamma.hi, k), using the family's monotonicity criterion.
LawReport check_ordered(const FamilyDescriptor& family, const UnaryMap& alpha,
                        const UnaryMap& beta, const ExtIndex& k, const GammaRange& gamma,
                        const OrderingFn& ord = OrderingFn::canonical());

/// Whether identity maps are (B,k,α,β)-functions: order-1 derivatives are
/// constants, higher ones vanish.
bool check_unital(const FamilyDescriptor& family, const UnaryMap& alpha, const UnaryMap& beta,
                  const ExtIndex& k);

}  // namespace regcalc
