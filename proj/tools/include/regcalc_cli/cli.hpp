#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace regcalc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitLawFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "%.12g" rendering used for every floating-point column.
std::string format_real(double v);

/// One machine-readable result line: `SUITE CASE verdict lhs rhs tol`.
struct ResultLine {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string lhs = "-";
  std::string rhs = "-";
  std::string tol = "0";

  std::string str() const;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 100;
};

/// Oracle suites behind `verify`: holder, young, fdb, membership.
std::vector<ResultLine> run_verify_suite(const std::string& suite, const SuiteOptions& options);

}  // namespace regcalc::cli
