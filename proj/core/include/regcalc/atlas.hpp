#pragma once

#include "regcalc/index_laws.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regcalc {

enum class TransitionTag { ck, b };

/// How a B-regular factor absorbs a merely C^k factor under composition.
/// `left`: g∘f is B when f is; `right`: when g is; `full` both; `none` is the
/// control mode with no absorption. The `full_*` modes also absorb maps that
/// are not diffeomorphisms.
enum class AbsorbMode { left, right, full_left, full_right, full, none };

enum class IdealSide { left, right, both };

std::string to_string(TransitionTag tag);
std::string to_string(AbsorbMode mode);
AbsorbMode parse_absorb_mode(std::string_view text);

/// Tag of g∘f. Two B factors compose to B only for ordered families, so
/// that case throws OrderedRequired when `ordered` is false.
TransitionTag absorb_compose(TransitionTag g, TransitionTag f, AbsorbMode mode, bool ordered);

/// A finite atlas: charts 0..m-1, a reflexive symmetric overlap relation
/// and an inverse-closed tag per overlapping pair. Identity transitions are
/// always B.
class Atlas {
 public:
  explicit Atlas(int charts = 1);
  explicit Atlas(std::vector<std::string> labels);

  int size() const noexcept { return m_; }
  const std::string& label(int i) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_default_labels() const;

  // Declares U_i ∩ U_j nonempty; the new transition is tagged ck.
  void add_overlap(int i, int j);
  void set_tag(int i, int j, TransitionTag tag);

  bool overlaps(int i, int j) const;
  TransitionTag tag(int i, int j) const;

  // Ordered pairs (i, j), i and j overlapping, including i == j.
  std::vector<std::pair<int, int>> overlapping_pairs() const;

  // Throws DomainError if reflexivity, symmetry or identity tags are broken.
  void validate() const;

  friend bool operator==(const Atlas&, const Atlas&) = default;

 private:
  std::size_t at(int i, int j) const;
  void check_chart(int i) const;

  int m_;
  std::vector<std::string> labels_;
  std::vector<char> overlap_;
  std::vector<TransitionTag> tags_;
};

bool check_b_structure(const Atlas& atlas);

/// Charts (j;i) for every overlapping (i, j), transitions tagged by
/// absorbing the word r̄(φ_kl) ∘ φ_li ∘ r̄(φ_ji)⁻¹ in both groupings.
/// Throws NotAbsorbing if any transition stays C^k or the groupings disagree.
Atlas retract_atlas(const Atlas& atlas, AbsorbMode mode);

Atlas atlas_coproduct(const Atlas& a, const Atlas& b);
Atlas atlas_product(const Atlas& a, const Atlas& b);

struct MagmaElement {
  int src = 0;
  int dst = 0;
  TransitionTag tag = TransitionTag::ck;
  bool star = false;  // the distinguished element id_*
};

/// Morphisms between overlapping charts with ∘_* totalised through id_*.
class FiniteMagma {
 public:
  FiniteMagma(std::vector<MagmaElement> elements, std::vector<int> table, int star);

  std::size_t size() const noexcept { return elements_.size(); }
  const MagmaElement& element(int id) const;
  int star() const noexcept { return star_; }
  bool composable(int g, int f) const;
  // g ∘_* f.
  int compose(int g, int f) const;
  std::string describe(int id) const;

 private:
  std::vector<MagmaElement> elements_;
  std::vector<int> table_;  // -1 where not composable
  int star_;
};

/// Both tags of every transition (i→j) of the atlas, composed by
/// absorb_compose; (j→k) ∘ (i→j) is composable when U_i and U_k overlap.
FiniteMagma transition_magma(const Atlas& atlas, AbsorbMode mode, bool ordered = true);

std::vector<int> b_elements(const FiniteMagma& magma);

/// Checks closure of `subset` under composition with arbitrary elements on
/// the given side; non-composable pairs are exempt.
LawReport check_ideal(const FiniteMagma& magma, const std::vector<int>& subset, IdealSide side);

/// A formal map between atlases with a tag per local expression. For left
/// modes tags are indexed [plain chart][B chart]; for right modes
/// [B chart][plain chart].
struct FormalMorphism {
  std::string name;
  bool iso = true;
  int rows = 0;
  int cols = 0;
  std::vector<TransitionTag> local;

  TransitionTag tag(int r, int c) const { return local[static_cast<std::size_t>(r * cols + c)]; }
};

struct HomBijectionResult {
  LawReport law;
  std::vector<std::size_t> included;
  std::vector<std::size_t> excluded;
};

/// Verifies, at tag level, that the retraction functor is adjoint to the
/// forgetful functor on the given hom-set: every relocalised morphism is B
/// and the identity-on-maps assignments ι, ξ are mutually inverse.
HomBijectionResult hom_bijection_check(const Atlas& plain, const Atlas& bstructured,
                                       const std::vector<FormalMorphism>& morphisms,
                                       AbsorbMode mode);

Atlas parse_atlas(std::string_view text);
std::string format_atlas(const Atlas& atlas);

}  // namespace regcalc
