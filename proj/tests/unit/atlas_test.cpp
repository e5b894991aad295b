#include "regcalc/atlas.hpp"
#include "regcalc/error.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace regcalc;

namespace {

constexpr TransitionTag B = TransitionTag::b;
constexpr TransitionTag Ck = TransitionTag::ck;

Atlas complete(int m, TransitionTag tag) {
  Atlas a(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      a.add_overlap(i, j);
      a.set_tag(i, j, tag);
    }
  }
  return a;
}

int find_label(const Atlas& a, const std::string& label) {
  for (int i = 0; i < a.size(); ++i) {
    if (a.label(i) == label) return i;
  }
  return -1;
}

}  // namespace

TEST(AbsorbCompose, Examples) {
  EXPECT_EQ(absorb_compose(Ck, B, AbsorbMode::left, true), B);
  EXPECT_EQ(absorb_compose(B, Ck, AbsorbMode::left, true), Ck);
  EXPECT_EQ(absorb_compose(B, B, AbsorbMode::left, true), B);
  EXPECT_EQ(absorb_compose(B, Ck, AbsorbMode::right, true), B);
  EXPECT_EQ(absorb_compose(Ck, B, AbsorbMode::right, true), Ck);
  EXPECT_EQ(absorb_compose(Ck, B, AbsorbMode::none, true), Ck);
  EXPECT_EQ(absorb_compose(Ck, Ck, AbsorbMode::full, true), Ck);
  EXPECT_THROW(absorb_compose(B, B, AbsorbMode::left, false), OrderedRequired);
}

TEST(AbsorbMode, ParseAndPrint) {
  for (AbsorbMode m : {AbsorbMode::left, AbsorbMode::right, AbsorbMode::full_left, AbsorbMode::full_right,
                       AbsorbMode::full, AbsorbMode::none}) {
    EXPECT_EQ(parse_absorb_mode(to_string(m)), m);
  }
  EXPECT_THROW(parse_absorb_mode("sideways"), DomainError);
}

TEST(Atlas, InvariantsAreEnforced) {
  Atlas a(3);
  EXPECT_TRUE(a.overlaps(1, 1));
  EXPECT_EQ(a.tag(2, 2), B);
  EXPECT_THROW(a.set_tag(0, 1, B), DomainError);
  a.add_overlap(0, 1);
  EXPECT_EQ(a.tag(1, 0), Ck);
  a.set_tag(1, 0, B);
  EXPECT_EQ(a.tag(0, 1), B);
  EXPECT_THROW(a.set_tag(1, 1, Ck), DomainError);
  EXPECT_THROW(a.tag(0, 2), DomainError);
  EXPECT_THROW(Atlas(0), DomainError);
  EXPECT_NO_THROW(a.validate());
}

TEST(CheckBStructure, Examples) {
  EXPECT_TRUE(check_b_structure(complete(3, B)));
  Atlas one_edge = complete(3, B);
  one_edge.set_tag(0, 2, Ck);
  EXPECT_FALSE(check_b_structure(one_edge));
  EXPECT_TRUE(check_b_structure(Atlas(1)));
}

TEST(CheckIdeal, BSubsetOfCompleteAtlasIsLeftIdeal) {
  Atlas a = complete(4, Ck);
  FiniteMagma m = transition_magma(a, AbsorbMode::left);
  LawReport r = check_ideal(m, b_elements(m), IdealSide::left);
  EXPECT_TRUE(r.pass());
  EXPECT_GT(r.checked, 0u);
}

TEST(CheckIdeal, SingleEdgeIsNotAnIdeal) {
  Atlas a = complete(4, Ck);
  FiniteMagma m = transition_magma(a, AbsorbMode::left);
  std::vector<int> one{b_elements(m).at(1)};
  LawReport r = check_ideal(m, one, IdealSide::left);
  EXPECT_FALSE(r.pass());
  ASSERT_FALSE(r.counterexamples.empty());
  EXPECT_NE(r.counterexamples.front().note.find("leaves the subset"), std::string::npos);
}

TEST(CheckIdeal, WholeMagmaIsAnIdeal) {
  Atlas a = complete(3, Ck);
  FiniteMagma m = transition_magma(a, AbsorbMode::left);
  std::vector<int> all;
  for (int id = 0; id < static_cast<int>(m.size()); ++id) all.push_back(id);
  EXPECT_TRUE(check_ideal(m, all, IdealSide::both).pass());
}

TEST(CheckIdeal, RightModeGivesRightIdealOnly) {
  Atlas a = complete(3, Ck);
  FiniteMagma m = transition_magma(a, AbsorbMode::right);
  EXPECT_TRUE(check_ideal(m, b_elements(m), IdealSide::right).pass());
  EXPECT_FALSE(check_ideal(m, b_elements(m), IdealSide::left).pass());
}

TEST(CheckIdeal, NoAbsorptionBreaksIdealness) {
  Atlas a = complete(3, Ck);
  FiniteMagma m = transition_magma(a, AbsorbMode::none);
  LawReport r = check_ideal(m, b_elements(m), IdealSide::left);
  EXPECT_FALSE(r.pass());
}

TEST(FiniteMagma, StarTotalisesComposition) {
  Atlas a(2);  // no overlap between 0 and 1
  FiniteMagma m = transition_magma(a, AbsorbMode::left);
  EXPECT_EQ(m.size(), 5u);
  EXPECT_EQ(m.describe(m.star()), "id_*");
  // (1->1) after (0->0) is not composable.
  int f = -1;
  int g = -1;
  for (int id = 0; id < static_cast<int>(m.size()); ++id) {
    const auto& e = m.element(id);
    if (e.star || e.tag != B) continue;
    if (e.src == 0) f = id;
    if (e.src == 1) g = id;
  }
  EXPECT_FALSE(m.composable(g, f));
  EXPECT_EQ(m.compose(g, f), m.star());
  EXPECT_TRUE(m.composable(f, f));
  EXPECT_EQ(m.compose(f, f), f);
}

TEST(RetractAtlas, AllCkTriangleBecomesB) {
  Atlas r = retract_atlas(complete(3, Ck), AbsorbMode::left);
  EXPECT_EQ(r.size(), 9);
  EXPECT_TRUE(check_b_structure(r));
  EXPECT_NO_THROW(r.validate());
  EXPECT_GE(find_label(r, "1;0"), 0);
}

TEST(RetractAtlas, AllBAtlasKeepsItsTransitionsOnTheDiagonal) {
  Atlas a(3);
  a.add_overlap(0, 1);
  a.set_tag(0, 1, B);
  a.add_overlap(1, 2);
  a.set_tag(1, 2, B);
  Atlas r = retract_atlas(a, AbsorbMode::left);
  EXPECT_TRUE(check_b_structure(r));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      const int x = find_label(r, std::to_string(i) + ";" + std::to_string(i));
      const int y = find_label(r, std::to_string(j) + ";" + std::to_string(j));
      ASSERT_GE(x, 0);
      ASSERT_GE(y, 0);
      EXPECT_EQ(r.overlaps(x, y), a.overlaps(i, j));
      if (a.overlaps(i, j)) EXPECT_EQ(r.tag(x, y), a.tag(i, j));
    }
  }
}

TEST(RetractAtlas, SingleChartIsUnchanged) {
  Atlas r = retract_atlas(Atlas(1), AbsorbMode::left);
  EXPECT_EQ(r.size(), 1);
  EXPECT_EQ(r.label(0), "0;0");
  EXPECT_TRUE(check_b_structure(r));
}

TEST(RetractAtlas, NoAbsorptionIsRejected) {
  EXPECT_THROW(retract_atlas(complete(2, Ck), AbsorbMode::none), NotAbsorbing);
  EXPECT_NO_THROW(retract_atlas(complete(2, B), AbsorbMode::none));
}

TEST(RetractAtlas, RandomAtlasesRetractInBothModes) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 1000; ++t) {
    Atlas a = test_gen::random_atlas(rng);
    for (AbsorbMode mode : {AbsorbMode::left, AbsorbMode::right}) {
      Atlas r = retract_atlas(a, mode);
      ASSERT_TRUE(check_b_structure(r)) << format_atlas(a);
      ASSERT_NO_THROW(r.validate());
      FiniteMagma m = transition_magma(a, mode);
      const IdealSide side = mode == AbsorbMode::left ? IdealSide::left : IdealSide::right;
      ASSERT_TRUE(check_ideal(m, b_elements(m), side).pass()) << format_atlas(a);
    }
    Atlas b = test_gen::all_b(a);
    Atlas rb = retract_atlas(b, AbsorbMode::left);
    for (int i = 0; i < b.size(); ++i) {
      const int x = find_label(rb, b.label(i) + ";" + b.label(i));
      ASSERT_GE(x, 0);
    }
  }
}

TEST(HomBijection, Examples) {
  Atlas plain = complete(2, Ck);
  Atlas target = complete(2, B);
  FormalMorphism iso{"f", true, 2, 2, {Ck, Ck, Ck, Ck}};
  auto result = hom_bijection_check(plain, target, {iso}, AbsorbMode::left);
  EXPECT_TRUE(result.law.pass());
  EXPECT_EQ(result.included, (std::vector<std::size_t>{0}));

  FormalMorphism map{"g", false, 2, 2, {Ck, B, Ck, Ck}};
  auto core = hom_bijection_check(plain, target, {iso, map}, AbsorbMode::left);
  EXPECT_TRUE(core.law.pass());
  EXPECT_EQ(core.excluded, (std::vector<std::size_t>{1}));

  auto full = hom_bijection_check(plain, target, {iso, map}, AbsorbMode::full_left);
  EXPECT_TRUE(full.law.pass());
  EXPECT_EQ(full.included.size(), 2u);
}

TEST(HomBijection, RejectsPlainTargetsAndMissingAbsorption) {
  Atlas plain = complete(2, Ck);
  FormalMorphism iso{"f", true, 2, 2, {Ck, Ck, Ck, Ck}};
  EXPECT_FALSE(hom_bijection_check(plain, plain, {iso}, AbsorbMode::left).law.pass());
  EXPECT_THROW(hom_bijection_check(plain, complete(2, B), {iso}, AbsorbMode::none), DomainError);
  FormalMorphism wrong{"w", true, 3, 2, std::vector<TransitionTag>(6, Ck)};
  EXPECT_THROW(hom_bijection_check(plain, complete(2, B), {wrong}, AbsorbMode::left), DomainError);
}

TEST(HomBijection, RandomPairsInFullModes) {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 100; ++t) {
    Atlas plain = test_gen::random_atlas(rng);
    Atlas target = test_gen::random_b_atlas(rng);
    for (AbsorbMode mode : {AbsorbMode::full_left, AbsorbMode::full_right}) {
      auto ms = test_gen::random_morphisms(rng, plain, target, mode);
      auto r = hom_bijection_check(plain, target, ms, mode);
      ASSERT_TRUE(r.law.pass());
      EXPECT_EQ(r.included.size(), ms.size());
    }
  }
}

TEST(AtlasFormat, RoundTrip) {
  std::mt19937_64 rng(303);
  for (int t = 0; t < 200; ++t) {
    Atlas a = test_gen::random_atlas(rng);
    EXPECT_EQ(parse_atlas(format_atlas(a)), a);
  }
  Atlas r = retract_atlas(complete(2, Ck), AbsorbMode::left);
  EXPECT_EQ(parse_atlas(format_atlas(r)), r);
}

TEST(AtlasFormat, ParsesTheTextualForm) {
  Atlas a = parse_atlas("# triangle\natlas 3\noverlap 0 1\noverlap 1 2\noverlap 0 2\ntrans 0 1 tag=B\ntrans 2 1 tag=Ck\n");
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.tag(1, 0), B);
  EXPECT_EQ(a.tag(1, 2), Ck);
  EXPECT_EQ(a.tag(0, 2), Ck);
}

TEST(AtlasFormat, Errors) {
  EXPECT_THROW(parse_atlas(""), FormatError);
  EXPECT_THROW(parse_atlas("atlas x"), FormatError);
  EXPECT_THROW(parse_atlas("atlas 2\noverlap 0 5"), FormatError);
  EXPECT_THROW(parse_atlas("atlas 2\ntrans 0 1 tag=B"), FormatError);
  EXPECT_THROW(parse_atlas("atlas 2\noverlap 0 1\ntrans 0 1 tag=Q"), FormatError);
  EXPECT_THROW(parse_atlas("atlas 2\noverlap 0 1\ntrans 0 1 tag=B\ntrans 1 0 tag=Ck"), FormatError);
  EXPECT_THROW(parse_atlas("atlas 2\nwarp 0 1"), FormatError);
  try {
    parse_atlas("atlas 2\n\nbogus");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("atlas line 3:", 0), 0u) << e.what();
  }
}

TEST(AtlasCoproduct, DisjointUnion) {
  Atlas a = complete(2, B);
  Atlas b = complete(3, Ck);
  Atlas c = atlas_coproduct(a, b);
  EXPECT_EQ(c.size(), 5);
  EXPECT_EQ(c.label(0), "0.0");
  EXPECT_EQ(c.label(4), "1.2");
  EXPECT_FALSE(c.overlaps(0, 2));
  EXPECT_EQ(c.tag(0, 1), B);
  EXPECT_EQ(c.tag(2, 4), Ck);
  EXPECT_TRUE(check_b_structure(retract_atlas(c, AbsorbMode::left)));
}

TEST(AtlasProduct, PairsCharts) {
  Atlas a = complete(2, B);
  Atlas b = complete(2, Ck);
  Atlas p = atlas_product(a, b);
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.label(1), "(0,1)");
  EXPECT_EQ(p.tag(0, 2), B);   // (0,0)-(1,0)
  EXPECT_EQ(p.tag(0, 1), Ck);  // (0,0)-(0,1)
  EXPECT_TRUE(check_b_structure(atlas_product(a, a)));
}
