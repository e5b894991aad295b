#pragma once

#include "regcalc/dsl.hpp"
#include "regcalc/families.hpp"

#include <map>
#include <string>
#include <vector>

namespace regcalc {

/// Regularity class of a derivative: membership in B_{b_index} ∩ C^{smooth}.
/// Either component being the zero space makes the whole class the zero
/// space; RegClass::zero() is the canonical form.
struct RegClass {
  Grade b_index;
  Grade smooth;
  std::string symbol = "L";

  static RegClass zero(std::string symbol = "L") { return {std::nullopt, std::nullopt, std::move(symbol)}; }
  bool is_zero() const noexcept { return !b_index || !smooth; }
  // "L^3 ∩ C^0" or "zero".
  std::string str() const;

  friend bool operator==(const RegClass& a, const RegClass& b);
};

/// A variable's annotation: f is a (B,k,α,β)-function for the family B.
struct Annotation {
  FamilyDescriptor family;
  UnaryMap alpha;
  UnaryMap beta;
  ExtIndex k;
};

using Env = std::map<std::string, Annotation>;

/// Builds the environment of a parsed program. Families are tabulated over
/// 0..gamma_max (or the table length for tabulated gradings).
Env build_env(const dsl::Program& program, int gamma_max = kDefaultGammaMax);

/// Class of the order-th derivative of `expr`. Throws OrderOverflow when a
/// variable is differentiated past its k and FamilyMismatch when operands
/// do not share the structure an operation needs.
RegClass infer_class(const dsl::Expr& expr, int order, const Env& env);

struct QueryResult {
  const dsl::Query* query = nullptr;
  std::optional<RegClass> cls;
  std::string error;  // set when inference failed
};

std::vector<QueryResult> run_queries(const dsl::Program& program, const Env& env);

/// One line per query, preceded by a header comment:
/// `class(<expr>, <i>) = L^<q> ∩ C^<m>` (or `= zero`).
std::string format_report(const std::vector<QueryResult>& results);

}  // namespace regcalc
