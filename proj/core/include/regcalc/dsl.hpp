#pragma once

#include "regcalc/error.hpp"
#include "regcalc/ext_index.hpp"
#include "regcalc/families.hpp"
#include "regcalc/index_laws.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace regcalc::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree of the annotation language.
struct Expr {
  enum class Kind { var, add, mul, conv, compose, deriv };

  Kind kind = Kind::var;
  std::string name;  // var
  ExprPtr lhs;       // binary operand, compose outer, deriv body
  ExprPtr rhs;       // binary operand, compose inner
  int order = 0;     // deriv

  static ExprPtr var(std::string name);
  static ExprPtr binary(Kind kind, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr deriv(ExprPtr body, int order);
};

bool operator==(const Expr& a, const Expr& b);
std::string to_string(const Expr& e);
std::string to_string(Expr::Kind kind);

struct Decl {
  std::string name;
  FamilyKind family = FamilyKind::ck;
  std::optional<std::string> grading;  // id | const:N | table:...
  std::string beta = "const:0";
  std::optional<ExtIndex> k;
  std::optional<int> n, p, q, r;
  std::optional<HolderMode> mode;
  std::optional<DomainKind> domain;
  int line = 0;
};

// Source positions are ignored by the equality operators.
bool operator==(const Decl& a, const Decl& b);

struct Query {
  ExprPtr expr;
  int order = 0;
  int line = 0;
};

bool operator==(const Query& a, const Query& b);

struct Program {
  std::vector<Decl> decls;
  std::vector<Query> queries;
  // Source order of statements: true for a decl, false for a query.
  std::vector<bool> statement_is_decl;
};

bool operator==(const Program& a, const Program& b);

/// Diagnostic with a 1-based source position.
class DslError : public Error {
 public:
  DslError(std::string kind, int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

class SyntaxError : public DslError {
 public:
  SyntaxError(int line, int column, const std::string& message, std::set<std::string> expected);
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::set<std::string> expected_;
};

class UnknownFamily : public DslError {
 public:
  UnknownFamily(int line, int column, const std::string& keyword);
};

class DuplicateName : public DslError {
 public:
  DuplicateName(int line, int column, const std::string& name);
};

class UnboundName : public DslError {
 public:
  UnboundName(int line, int column, const std::string& name);
};

/// Parses a program. Declarations must precede the queries that use them.
Program parse_program(std::string_view text);

/// Renders a program in canonical source form; parse_program(to_text(p)) == p
/// up to line numbers.
std::string to_text(const Program& program);

}  // namespace regcalc::dsl
