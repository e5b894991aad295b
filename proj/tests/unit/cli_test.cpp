#include "regcalc_cli/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

using regcalc::cli::kExitLawFailure;
using regcalc::cli::kExitPass;
using regcalc::cli::kExitUsage;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = regcalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(REGCALC_TEST_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

// `SUITE CASE verdict lhs rhs tol`, optionally followed by `# note`.
const std::regex kResultLine(R"(^\S+ \S+ (pass|fail) \S+ \S+ \S+( +#.*)?$)");

}  // namespace

TEST(Cli, CheckPassesForHolderIdentity) {
  Invocation r = run({"check", "--family", "lp-holder", "--grading", "id", "--gamma-max", "8"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  for (const auto& l : lines(r.out)) {
    if (l.empty() || l[0] == '#') continue;
    EXPECT_TRUE(std::regex_match(l, kResultLine)) << l;
    EXPECT_NE(l.find(" pass "), std::string::npos) << l;
  }
}

TEST(Cli, CheckReportsLawFailures) {
  Invocation r = run({"check", "--family", "lp-holder", "--grading", "table:2,3,4", "--mode", "strict", "--gamma-max", "2"});
  EXPECT_EQ(r.code, kExitLawFailure) << r.out << r.err;
  bool saw_fail = false;
  for (const auto& l : lines(r.out)) {
    if (l.empty() || l[0] == '#') continue;
    EXPECT_TRUE(std::regex_match(l, kResultLine)) << l;
    saw_fail = saw_fail || l.find(" fail ") != std::string::npos;
  }
  EXPECT_TRUE(saw_fail);
}

TEST(Cli, ComposeTable) {
  Invocation r = run({"compose", "--alpha", "const:6", "--beta", "id", "--order", "3"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("1 3 1\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("2 2 2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("3 3/2 3\n"), std::string::npos) << r.out;
}

TEST(Cli, InferReport) {
  Invocation r = run({"infer", data("sixes.rc")});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_NE(r.out.find("class(mul(f,f), 2) = L^3 ∩ C^0\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("class(compose(g,f), 1) = L^3 ∩ C^1\n"), std::string::npos) << r.out;
  EXPECT_EQ(run({"infer", data("sixes.rc")}).out, r.out);
}

TEST(Cli, InferDiagnostics) {
  Invocation unbound = run({"infer", write_temp("unbound.rc", "query class(f, 1)\n")});
  EXPECT_EQ(unbound.code, kExitUsage);
  EXPECT_NE(unbound.err.find("unbound variable f"), std::string::npos) << unbound.err;
  EXPECT_NE(unbound.err.find(":1:"), std::string::npos) << unbound.err;
  Invocation overflow = run({"infer", write_temp("overflow.rc", "let f : ck id k:1\nquery class(f, 2)\n")});
  EXPECT_EQ(overflow.code, kExitUsage);
  EXPECT_NE(overflow.err.find("OrderOverflow"), std::string::npos) << overflow.err;
  EXPECT_EQ(run({"infer", "/nonexistent/file.rc"}).code, kExitUsage);
}

TEST(Cli, AtlasRetract) {
  Invocation r = run({"atlas", "retract", "--mode", "left", data("triangle.atl")});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.out.rfind("atlas 9\n", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("chart 1;0\n"), std::string::npos);
  EXPECT_EQ(r.out.find("tag=Ck"), std::string::npos);

  Invocation none = run({"atlas", "retract", "--mode", "none", data("triangle.atl")});
  EXPECT_EQ(none.code, kExitLawFailure);
  ASSERT_FALSE(lines(none.out).empty());
  EXPECT_TRUE(std::regex_match(lines(none.out).back(), kResultLine)) << none.out;
}

TEST(Cli, AtlasCheck) {
  Invocation r = run({"atlas", "check", "--mode", "left", data("triangle.atl")});
  EXPECT_EQ(r.code, kExitLawFailure);  // the triangle has no B transitions
  EXPECT_NE(r.out.find("b_structure[0,1] fail"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("left_ideal pass"), std::string::npos) << r.out;
}

TEST(Cli, VerifyIsDeterministic) {
  Invocation a = run({"verify", "--suite", "all", "--seed", "7", "--trials", "10"});
  Invocation b = run({"verify", "--suite", "all", "--seed", "7", "--trials", "10"});
  EXPECT_EQ(a.code, kExitPass) << a.out;
  EXPECT_EQ(a.out, b.out);
  for (const auto& l : lines(a.out)) {
    if (l.empty() || l[0] == '#') continue;
    EXPECT_TRUE(std::regex_match(l, kResultLine)) << l;
  }
  Invocation c = run({"verify", "--suite", "holder", "--seed", "8", "--trials", "10"});
  EXPECT_NE(c.out, run({"verify", "--suite", "holder", "--seed", "7", "--trials", "10"}).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"check", "--no-such-flag"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"atlas", "retract", "--mode", "sideways", data("triangle.atl")}).code, kExitUsage);
  Invocation bad = run({"atlas", "retract", "--mode", "left", write_temp("bad.atl", "atlas 2\nwarp 0 1\n")});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("atlas line 2"), std::string::npos) << bad.err;
}

TEST(Cli, FormatReal) {
  EXPECT_EQ(regcalc::cli::format_real(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(regcalc::cli::format_real(30.0), "30");
}
