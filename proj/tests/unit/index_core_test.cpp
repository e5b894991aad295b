#include "regcalc/error.hpp"
#include "regcalc/ext_index.hpp"
#include "regcalc/index_laws.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace regcalc;

namespace {

const ExtIndex INF = ExtIndex::inf();

bool has_args(const LawReport& r, std::vector<ExtIndex> args) {
  return std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                     [&](const Counterexample& c) { return c.args == args; });
}

ExtIndex random_rational(std::mt19937_64& rng, int lo, int hi) {
  const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 12);
  const std::int64_t span = (hi - lo) * den;
  return ExtIndex(lo * den + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(span + 1)), den);
}

}  // namespace

TEST(ExtIndex, StoresReducedFractions) {
  EXPECT_EQ(ExtIndex(2, 4), ExtIndex(1, 2));
  EXPECT_EQ(ExtIndex(6, 3).str(), "2");
  EXPECT_EQ(ExtIndex(4, 6).str(), "2/3");
  EXPECT_TRUE(ExtIndex(8, 4).is_integer());
}

TEST(ExtIndex, InfinityIsAboveEveryFiniteValue) {
  EXPECT_LT(ExtIndex(1000000), INF);
  EXPECT_EQ(INF, INF);
  EXPECT_EQ(INF.str(), "inf");
  EXPECT_EQ(ExtIndex(3) + INF, INF);
  EXPECT_EQ(ExtIndex(0).reciprocal(), INF);
  EXPECT_EQ(INF.reciprocal(), ExtIndex(0));
}

TEST(ExtIndex, RejectsNegativeValues) {
  EXPECT_THROW(ExtIndex(-1), DomainError);
  EXPECT_THROW(ExtIndex(1, -2), DomainError);
  EXPECT_FALSE(checked_sub(ExtIndex(1), ExtIndex(2)).has_value());
  EXPECT_EQ(*checked_sub(ExtIndex(5, 2), ExtIndex(1, 2)), ExtIndex(2));
}

TEST(ExtIndex, ParseAndPrintRoundTrip) {
  for (const char* text : {"0", "7", "3/2", "inf", "12/5"}) {
    EXPECT_EQ(ExtIndex::parse(text).str(), text);
  }
  EXPECT_EQ(ExtIndex::parse("4/6"), ExtIndex(2, 3));
  EXPECT_THROW(ExtIndex::parse("x"), Error);
  EXPECT_THROW(ExtIndex::parse("1/0"), Error);
}

TEST(ExtIndex, FloorKeepsInfinity) {
  EXPECT_EQ(ExtIndex(12, 7).floor(), ExtIndex(1));
  EXPECT_EQ(INF.floor(), INF);
}

TEST(GammaRange, ValidatesBounds) {
  EXPECT_EQ(GammaRange(8).size(), 9);
  EXPECT_THROW(GammaRange(0, 0), DomainError);
  EXPECT_THROW(GammaRange(3, 2), DomainError);
}

TEST(StarHolder, Examples) {
  EXPECT_EQ(star_holder(3, 6), ExtIndex(2));
  EXPECT_EQ(star_holder(INF, 5), ExtIndex(5));
  EXPECT_EQ(star_holder(2, 2), ExtIndex(1));
  EXPECT_EQ(star_holder(INF, INF), INF);
  EXPECT_THROW(star_holder(ExtIndex(1, 2), 3), DomainError);
}

TEST(StarYoung, Examples) {
  EXPECT_EQ(star_young(1, 1), ExtIndex(1));
  EXPECT_EQ(star_young(2, 2), INF);
  EXPECT_THROW(star_young(3, 3), InvalidExponents);
  EXPECT_EQ(star_young(1, 2), ExtIndex(2));
  EXPECT_EQ(star_young(1, INF), INF);
}

TEST(StarHolder, ReciprocalLawIsExact) {
  for (int i = 1; i <= 32; ++i) {
    for (int j = 1; j <= 32; ++j) {
      EXPECT_EQ(star_holder(i, j).reciprocal(), ExtIndex(i).reciprocal() + ExtIndex(j).reciprocal());
    }
  }
}

TEST(StarYoung, ReciprocalLawIsExact) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    ExtIndex i = random_rational(rng, 1, 3);
    ExtIndex j = random_rational(rng, 1, 3);
    const Rational s = Rational(1) / i.value() + Rational(1) / j.value() - 1;
    if (s < 0) {
      EXPECT_THROW(star_young(i, j), InvalidExponents);
    } else if (s == 0) {
      EXPECT_EQ(star_young(i, j), INF);
    } else {
      EXPECT_EQ(star_young(i, j).reciprocal(), ExtIndex(s));
    }
  }
}

TEST(StarHolder, CommutativeAssociativeMonotone) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    ExtIndex a = random_rational(rng, 3, 100);
    ExtIndex b = random_rational(rng, 3, 100);
    ExtIndex c = random_rational(rng, 3, 100);
    EXPECT_EQ(star_holder(a, b), star_holder(b, a));
    EXPECT_EQ(star_holder(a, star_holder(b, c)), star_holder(star_holder(a, b), c));
    const ExtIndex lo = min(b, c);
    const ExtIndex hi = max(b, c);
    EXPECT_LE(star_holder(a, lo), star_holder(a, hi));
  }
}

TEST(CheckAdditive, MinAndMaxPassSumFails) {
  EXPECT_TRUE(check_additive(IndexFn::min(), GammaRange(8)).pass());
  EXPECT_TRUE(check_additive(IndexFn::max(), GammaRange(8)).pass());
  LawReport sum = check_additive(IndexFn::sum(), GammaRange(8));
  EXPECT_FALSE(sum.pass());
  EXPECT_TRUE(has_args(sum, {ExtIndex(1)}));
  EXPECT_EQ(sum.checked, 9u);
}

TEST(CheckLeftDistributive, Examples) {
  LawReport mins = check_left_distributive(IndexFn::min(), IndexFn::min(), GammaRange(8));
  EXPECT_TRUE(mins.pass());
  EXPECT_EQ(mins.checked, 729u);

  EXPECT_TRUE(check_left_distributive(IndexFn::holder(), IndexFn::min(), GammaRange(1, 8)).pass());

  IndexFn broken = IndexFn::sum().with_override(1, 2, 0);
  EXPECT_TRUE(check_left_distributive(IndexFn::sum(), IndexFn::max(), GammaRange(8)).pass());
  LawReport r = check_left_distributive(broken, IndexFn::max(), GammaRange(8));
  EXPECT_FALSE(r.pass());
  EXPECT_TRUE(has_args(r, {1, 2, 1}));
}

TEST(CheckRightDistributive, MatchesLeftForSymmetricPairs) {
  const std::vector<std::pair<IndexFn, IndexFn>> pairs{
      {IndexFn::min(), IndexFn::min()}, {IndexFn::max(), IndexFn::min()}, {IndexFn::sum(), IndexFn::max()},
      {IndexFn::min(), IndexFn::max()}, {IndexFn::sum(), IndexFn::sum()}};
  for (const auto& [eps, delta] : pairs) {
    EXPECT_EQ(check_left_distributive(eps, delta, GammaRange(8)).pass(),
              check_right_distributive(eps, delta, GammaRange(8)).pass())
        << eps.name() << "/" << delta.name();
  }
}

// The first projection ignores its right argument, so any δ distributes on
// the right; on the left only an idempotent δ does.
TEST(CheckRightDistributive, FirstProjectionSeparatesTheSides) {
  EXPECT_TRUE(check_right_distributive(IndexFn::first(), IndexFn::sum(), GammaRange(4)).pass());
  EXPECT_FALSE(check_left_distributive(IndexFn::first(), IndexFn::sum(), GammaRange(4)).pass());
  EXPECT_TRUE(check_left_distributive(IndexFn::first(), IndexFn::max(), GammaRange(4)).pass());
}

TEST(CheckRightDistributive, AgreesWithBruteForce) {
  IndexFn eps = IndexFn::sum().with_override(2, 3, 1);
  IndexFn delta = IndexFn::max();
  std::size_t failures = 0;
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; j <= 5; ++j) {
      for (int k = 0; k <= 5; ++k) {
        if (delta(eps(i, k), eps(j, k)) != eps(delta(i, j), k)) ++failures;
      }
    }
  }
  EXPECT_EQ(check_right_distributive(eps, delta, GammaRange(5)).counterexamples.size(), failures);
}

TEST(CheckIndexMorphism, Examples) {
  ValueMap id{"id", [](const ExtIndex& x) { return x; }};
  ValueMap twice{"2i", [](const ExtIndex& x) { return x + x; }};
  ValueMap square{"i^2", [](const ExtIndex& x) { return x * x; }};
  EXPECT_TRUE(check_index_morphism(id, IndexFn::min(), IndexFn::min(), GammaRange(8)).pass());
  EXPECT_TRUE(check_index_morphism(twice, IndexFn::min(), IndexFn::min(), GammaRange(8)).pass());
  LawReport r = check_index_morphism(square, IndexFn::sum(), IndexFn::sum(), GammaRange(8));
  EXPECT_FALSE(r.pass());
  EXPECT_TRUE(has_args(r, {1, 1}));
}

TEST(UnaryMap, ParsesGradings) {
  EXPECT_EQ(UnaryMap::parse("id")(5), ExtIndex(5));
  EXPECT_EQ(UnaryMap::parse("const:6")(2), ExtIndex(6));
  UnaryMap t = UnaryMap::parse("table:1,3/2,inf");
  EXPECT_EQ(t(1), ExtIndex(3, 2));
  EXPECT_EQ(t(2), INF);
  EXPECT_THROW(t(3), DomainError);
  EXPECT_THROW(UnaryMap::parse("linear"), Error);
}

TEST(IndexFn, LooksUpBuiltins) {
  for (const char* name : {"min", "max", "sum", "first", "holder", "holder-int", "young"}) {
    EXPECT_EQ(IndexFn::by_name(name).name(), name);
  }
  EXPECT_EQ(IndexFn::by_name("holder-int")(3, 4), ExtIndex(1));
  EXPECT_THROW(IndexFn::by_name("avg"), Error);
}
