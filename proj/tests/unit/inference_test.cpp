#include "regcalc/dsl.hpp"
#include "regcalc/error.hpp"
#include "regcalc/inference.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace regcalc;
using dsl::Expr;

namespace {

const ExtIndex INF = ExtIndex::inf();

dsl::ExprPtr v(const std::string& name) { return Expr::var(name); }
dsl::ExprPtr mul(dsl::ExprPtr a, dsl::ExprPtr b) { return Expr::binary(Expr::Kind::mul, a, b); }
dsl::ExprPtr add(dsl::ExprPtr a, dsl::ExprPtr b) { return Expr::binary(Expr::Kind::add, a, b); }
dsl::ExprPtr compose(dsl::ExprPtr a, dsl::ExprPtr b) { return Expr::binary(Expr::Kind::compose, a, b); }

Env env_of(const std::string& text) { return build_env(dsl::parse_program(text)); }

RegClass cls(ExtIndex b, ExtIndex c) { return {b, c, "L"}; }

const char* kSixTwo =
    "let f : lp-holder const:6 beta:id k:2 on bounded\n"
    "let g : lp-holder const:6 beta:id k:2 on bounded\n";

}  // namespace

TEST(ParseProgram, DeclAndQuery) {
  auto p = dsl::parse_program("let f : lp-holder const:6 beta:id k:2 on bounded\nquery class(mul(f,f), 2)");
  ASSERT_EQ(p.decls.size(), 1u);
  ASSERT_EQ(p.queries.size(), 1u);
  EXPECT_EQ(p.decls[0].name, "f");
  EXPECT_EQ(p.decls[0].family, FamilyKind::lp_holder);
  EXPECT_EQ(p.decls[0].grading, std::optional<std::string>("const:6"));
  EXPECT_EQ(p.decls[0].beta, "id");
  EXPECT_EQ(p.decls[0].k, std::optional<ExtIndex>(2));
  EXPECT_EQ(p.decls[0].domain, std::optional<DomainKind>(DomainKind::bounded));
  EXPECT_EQ(p.queries[0].order, 2);
  EXPECT_EQ(*p.queries[0].expr, *mul(v("f"), v("f")));
}

TEST(ParseProgram, CommentsAndBlankLines) {
  auto p = dsl::parse_program("# header\n\nlet f : ck id k:3 on bounded  # trailing\nquery class(deriv(f, 1), 1)\n");
  EXPECT_EQ(p.decls.size(), 1u);
  EXPECT_EQ(*p.queries[0].expr, *Expr::deriv(v("f"), 1));
}

TEST(ParseProgram, UnboundVariable) {
  try {
    dsl::parse_program("query class(f, 1)");
    FAIL() << "expected UnboundName";
  } catch (const dsl::UnboundName& e) {
    EXPECT_NE(std::string(e.what()).find("unbound variable f"), std::string::npos);
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 13);
  }
}

TEST(ParseProgram, DuplicateName) {
  EXPECT_THROW(dsl::parse_program("let f : lp-holder const:6\nlet f : ck id"), dsl::DuplicateName);
}

TEST(ParseProgram, UnknownFamily) {
  try {
    dsl::parse_program("let f : besov const:6");
    FAIL();
  } catch (const dsl::UnknownFamily& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 9);
  }
}

TEST(ParseProgram, SyntaxErrorsCarryPositionAndExpectedTokens) {
  try {
    dsl::parse_program("let f : ck id\nquery class(mul(f f), 1)");
    FAIL();
  } catch (const dsl::SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_TRUE(e.expected().contains(","));
  }
  EXPECT_THROW(dsl::parse_program("let f ck id"), dsl::SyntaxError);
  EXPECT_THROW(dsl::parse_program("let f : ck id\nquery class(deriv(f, 0), 1)"), dsl::SyntaxError);
  EXPECT_THROW(dsl::parse_program("let f : ck id\nquery class(f)"), dsl::SyntaxError);
  EXPECT_THROW(dsl::parse_program("frobnicate"), dsl::SyntaxError);
}

TEST(ParseProgram, RoundTripOfGeneratedPrograms) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::string text = test_gen::random_program_text(rng);
    dsl::Program p = dsl::parse_program(text);
    dsl::Program again = dsl::parse_program(dsl::to_text(p));
    EXPECT_EQ(p, again) << text;
    EXPECT_EQ(dsl::to_text(p), dsl::to_text(again));
  }
}

TEST(InferClass, ProductOfTwoSixes) {
  Env env = env_of(kSixTwo);
  EXPECT_EQ(infer_class(*mul(v("f"), v("f")), 2, env), cls(3, 0));
  EXPECT_EQ(infer_class(*mul(v("f"), v("f")), 2, env).str(), "L^3 ∩ C^0");
}

TEST(InferClass, CompositionOfTwoSixes) {
  Env env = env_of(kSixTwo);
  EXPECT_EQ(infer_class(*compose(v("g"), v("f")), 1, env), cls(3, 1));
}

TEST(InferClass, VariableAtOrderZero) {
  Env env = env_of(kSixTwo);
  EXPECT_EQ(infer_class(*v("f"), 0, env), cls(6, 2));
}


TEST(InferClass, InfiniteExponentsSurviveComposition) {
  Env env;
  const GammaRange gamma(8);
  for (const char* name : {"f", "g"}) {
    env.emplace(name, Annotation{make_lp_holder_family(UnaryMap::constant(INF), HolderMode::int_part, gamma),
                                 UnaryMap::constant(INF), UnaryMap::identity(), 5});
  }
  EXPECT_EQ(infer_class(*compose(v("g"), v("f")), 3, env), cls(INF, 2));
  EXPECT_EQ(infer_class(*compose(v("g"), v("f")), 3, env).str(), "L^inf ∩ C^2");
}

TEST(InferClass, Errors) {
  Env env = env_of(kSixTwo);
  EXPECT_THROW(infer_class(*v("f"), 3, env), OrderOverflow);
  Env mixed = env_of("let f : lp-holder const:6 k:2\nlet h : ck id k:4\n");
  EXPECT_THROW(infer_class(*add(v("f"), v("h")), 0, mixed), FamilyMismatch);
  EXPECT_THROW(infer_class(*Expr::binary(Expr::Kind::conv, v("f"), v("f")), 0, mixed), FamilyMismatch);
  Env young = env_of("let u : lp-young const:1 k:2\n");
  EXPECT_THROW(infer_class(*mul(v("u"), v("u")), 0, young), FamilyMismatch);
  EXPECT_EQ(infer_class(*Expr::binary(Expr::Kind::conv, v("u"), v("u")), 0, young), cls(1, 2));
}

TEST(InferClass, ZeroSpaceRendersAsZero) {
  Env env = env_of("let z : ck const:3 k:5 on bounded\n");
  EXPECT_EQ(infer_class(*v("z"), 1, env).str(), "C^2 ∩ C^5");
  Env vanishing = env_of("let z : ck const:6 k:5 on bounded\n");
  EXPECT_TRUE(infer_class(*v("z"), 1, vanishing).is_zero());
  EXPECT_EQ(infer_class(*v("z"), 1, vanishing).str(), "zero");
}

TEST(InferClass, AddWithZeroReturnsTheOtherOperand) {
  Env env = env_of("let z : ck const:6 k:5 on bounded\nlet f : ck const:1 beta:id k:5 on bounded\n");
  for (int i = 0; i <= 5; ++i) {
    EXPECT_EQ(infer_class(*add(v("z"), v("f")), i, env), infer_class(*v("f"), i, env));
    EXPECT_EQ(infer_class(*add(v("f"), v("z")), i, env), infer_class(*v("f"), i, env));
  }
}

TEST(InferClass, RunQueriesAndFormatReport) {
  const std::string text = std::string(kSixTwo) +
                           "query class(mul(f,f), 2)\nquery class(compose(g,f), 1)\nquery class(f, 3)\n";
  auto program = dsl::parse_program(text);
  Env env = build_env(program);
  auto results = run_queries(program, env);
  ASSERT_EQ(results.size(), 3u);
  EXPECT_TRUE(results[0].cls.has_value());
  EXPECT_FALSE(results[2].cls.has_value());
  EXPECT_NE(results[2].error.find("OrderOverflow"), std::string::npos);
  const std::string report = format_report(results);
  EXPECT_NE(report.find("class(mul(f,f), 2) = L^3 ∩ C^0\n"), std::string::npos) << report;
  EXPECT_NE(report.find("class(compose(g,f), 1) = L^3 ∩ C^1\n"), std::string::npos) << report;
  EXPECT_EQ(report, format_report(run_queries(program, build_env(program))));
}

namespace {

struct Outcome {
  bool ok = false;
  RegClass cls;
};

Outcome try_infer(const Expr& e, int order, const Env& env) {
  try {
    return {true, infer_class(e, order, env)};
  } catch (const Error&) {
    return {};
  }
}

// In a decreasing family a bigger grade is a smaller space; the zero space is smallest.
bool at_least_as_strong(const Grade& a, const Grade& b) {
  if (!a) return true;
  if (!b) return false;
  return *a >= *b;
}

bool strictly_stronger(const RegClass& a, const RegClass& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  return at_least_as_strong(a.b_index, b.b_index) && at_least_as_strong(a.smooth, b.smooth) && !(a == b);
}

Env holder_env(const std::vector<int>& exponents, int k) {
  Env env;
  const GammaRange gamma(8);
  for (std::size_t n = 0; n < exponents.size(); ++n) {
    UnaryMap p = UnaryMap::constant(exponents[n]);
    env.emplace(std::string(1, static_cast<char>('a' + n)),
                Annotation{make_lp_holder_family(p, HolderMode::int_part, gamma), p, UnaryMap::identity(), k});
  }
  return env;
}

}  // namespace

TEST(InferClass, MulCommutesForSymmetricEps) {
  std::mt19937_64 rng(23);
  Env env = holder_env({4, 8, 12}, 4);
  const std::vector<std::string> names{"a", "b", "c"};
  for (int t = 0; t < 200; ++t) {
    auto l = test_gen::random_expr(rng, names, 2, false);
    auto r = test_gen::random_expr(rng, names, 2, false);
    const int order = test_gen::draw(rng, 0, 2);
    Outcome lr = try_infer(*mul(l, r), order, env);
    Outcome rl = try_infer(*mul(r, l), order, env);
    ASSERT_EQ(lr.ok, rl.ok);
    if (lr.ok) EXPECT_EQ(lr.cls, rl.cls);
  }
}

TEST(InferClass, NestedDerivativesCompose) {
  std::mt19937_64 rng(29);
  Env env = holder_env({4, 8, 12}, 6);
  const std::vector<std::string> names{"a", "b", "c"};
  for (int t = 0; t < 200; ++t) {
    auto e = test_gen::random_expr(rng, names, 2, false);
    const int order = test_gen::draw(rng, 0, 2);
    Outcome twice = try_infer(*Expr::deriv(Expr::deriv(e, 1), 1), order, env);
    Outcome once = try_infer(*Expr::deriv(e, 2), order, env);
    ASSERT_EQ(twice.ok, once.ok);
    if (once.ok) EXPECT_EQ(twice.cls, once.cls);
  }
}

TEST(InferClass, WeakeningAnAnnotationNeverStrengthensTheResult) {
  std::mt19937_64 rng(31);
  const std::vector<std::string> names{"a", "b"};
  for (int t = 0; t < 300; ++t) {
    const int pa = test_gen::draw(rng, 2, 24);
    const int pb = test_gen::draw(rng, 2, 24);
    const int weaker = test_gen::draw(rng, 1, pa);
    Env strong = holder_env({pa, pb}, 4);
    Env weak = holder_env({weaker, pb}, 4);
    auto e = test_gen::random_expr(rng, names, 4, false);
    const int order = test_gen::draw(rng, 0, 3);
    Outcome s = try_infer(*e, order, strong);
    Outcome w = try_infer(*e, order, weak);
    if (!s.ok || !w.ok) continue;
    EXPECT_FALSE(strictly_stronger(w.cls, s.cls)) << dsl::to_string(*e) << " order " << order;
  }
}
