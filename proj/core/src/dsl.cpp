#include "regcalc/dsl.hpp"

#include <cctype>
#include <sstream>

namespace regcalc::dsl {

namespace {

struct Word {
  std::string text;
  int column = 0;
};

bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::optional<int> parse_int(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

std::vector<Word> split_words(const std::string& line) {
  std::vector<Word> words;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size()) break;
    std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    words.push_back({line.substr(start, pos - start), static_cast<int>(start) + 1});
  }
  return words;
}

const std::set<std::string> kSpecForms = {"id",  "const:N", "table:N,...", "beta:SPEC",
                                          "k:N", "n:N",     "p:N",         "q:N",
                                          "r:N", "mode:strict|int", "on"};

const std::set<std::string> kFamilies = {"ck", "lp-holder", "lp-young", "sobolev"};

class DeclParser {
 public:
  DeclParser(int line, std::vector<Word> words) : line_(line), words_(std::move(words)) {}

  Decl parse() {
    Decl d;
    d.line = line_;
    // words_[0] is "let".
    const Word& name = at(1, {"IDENT"});
    if (!is_ident(name.text)) fail(name, "expected a variable name, got '" + name.text + "'", {"IDENT"});
    d.name = name.text;
    const Word& colon = at(2, {":"});
    if (colon.text != ":") fail(colon, "expected ':' after '" + d.name + "'", {":"});
    const Word& fam = at(3, kFamilies);
    if (!kFamilies.contains(fam.text)) throw UnknownFamily(line_, fam.column, fam.text);
    d.family = parse_family_kind(fam.text);

    std::size_t n = 4;
    for (; n < words_.size() && words_[n].text != "on"; ++n) spec(d, words_[n]);
    if (n < words_.size()) {
      const Word& dom = at(n + 1, {"bounded", "unbounded"});
      if (dom.text == "bounded") {
        d.domain = DomainKind::bounded;
      } else if (dom.text == "unbounded") {
        d.domain = DomainKind::unbounded;
      } else {
        fail(dom, "expected 'bounded' or 'unbounded'", {"bounded", "unbounded"});
      }
      if (n + 2 < words_.size()) fail(words_[n + 2], "unexpected '" + words_[n + 2].text + "'", {"end of line"});
    }
    return d;
  }

 private:
  [[noreturn]] void fail(const Word& w, const std::string& msg, std::set<std::string> expected) {
    throw SyntaxError(line_, w.column, msg, std::move(expected));
  }

  const Word& at(std::size_t n, const std::set<std::string>& expected) {
    if (n >= words_.size()) {
      end_ = {"", words_.empty() ? 1 : words_.back().column + static_cast<int>(words_.back().text.size())};
      fail(end_, "unexpected end of line", expected);
    }
    return words_[n];
  }

  template <typename T>
  void set_once(std::optional<T>& slot, T value, const Word& w) {
    if (slot) fail(w, "'" + w.text + "' repeats an earlier specification", kSpecForms);
    slot = std::move(value);
  }

  int int_value(const Word& w, std::string_view digits) {
    auto v = parse_int(digits);
    if (!v) fail(w, "expected an integer in '" + w.text + "'", {"INT"});
    return *v;
  }

  void check_map(const Word& w, std::string_view spec) {
    try {
      (void)UnaryMap::parse(spec);
    } catch (const Error& e) {
      fail(w, e.what(), {"id", "const:N", "table:N,..."});
    }
  }

  void spec(Decl& d, const Word& w) {
    const std::string& t = w.text;
    if (t == "id" || t.starts_with("const:") || t.starts_with("table:")) {
      check_map(w, t);
      set_once(d.grading, t, w);
    } else if (t.starts_with("beta:")) {
      check_map(w, std::string_view(t).substr(5));
      if (beta_seen_) fail(w, "'" + t + "' repeats an earlier specification", kSpecForms);
      beta_seen_ = true;
      d.beta = t.substr(5);
    } else if (t.starts_with("k:")) {
      try {
        set_once(d.k, ExtIndex::parse(std::string_view(t).substr(2)), w);
      } catch (const DomainError& e) {
        fail(w, e.what(), {"k:N"});
      }
    } else if (t.starts_with("n:")) {
      set_once(d.n, int_value(w, std::string_view(t).substr(2)), w);
    } else if (t.starts_with("p:")) {
      set_once(d.p, int_value(w, std::string_view(t).substr(2)), w);
    } else if (t.starts_with("q:")) {
      set_once(d.q, int_value(w, std::string_view(t).substr(2)), w);
    } else if (t.starts_with("r:")) {
      set_once(d.r, int_value(w, std::string_view(t).substr(2)), w);
    } else if (t == "mode:strict") {
      set_once(d.mode, HolderMode::strict_zs, w);
    } else if (t == "mode:int") {
      set_once(d.mode, HolderMode::int_part, w);
    } else {
      fail(w, "unexpected '" + t + "' in declaration", kSpecForms);
    }
  }

  int line_;
  std::vector<Word> words_;
  Word end_;
  bool beta_seen_ = false;
};

class QueryParser {
 public:
  QueryParser(int line, std::string text, std::size_t start, const std::set<std::string>& bound)
      : line_(line), text_(std::move(text)), pos_(start), bound_(bound) {}

  Query parse() {
    Query q;
    q.line = line_;
    expect_word("class");
    expect('(');
    q.expr = expr();
    expect(',');
    q.order = integer();
    expect(')');
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", {"end of line"});
    return q;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::set<std::string> expected) {
    throw SyntaxError(line_, static_cast<int>(pos_) + 1, msg, std::move(expected));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  void expect_word(const std::string& w) {
    skip_space();
    std::size_t start = pos_;
    if (word() != w) {
      pos_ = start;
      fail("expected '" + w + "'", {w});
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(pos_ >= text_.size() ? "unexpected end of line"
                                : "unexpected '" + std::string(1, text_[pos_]) + "'",
           {std::string(1, c)});
    }
    ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    std::string w = word();
    auto v = parse_int(w);
    if (!v) {
      pos_ = start;
      fail("expected an integer", {"INT"});
    }
    return *v;
  }

  ExprPtr expr() {
    skip_space();
    std::size_t start = pos_;
    std::string w = word();
    if (w.empty() || !is_ident(w)) {
      pos_ = start;
      fail(pos_ >= text_.size() ? "unexpected end of line" : "expected an expression",
           {"IDENT", "add", "mul", "conv", "compose", "deriv"});
    }
    if (peek('(')) {
      std::optional<Expr::Kind> kind;
      if (w == "add") kind = Expr::Kind::add;
      if (w == "mul") kind = Expr::Kind::mul;
      if (w == "conv") kind = Expr::Kind::conv;
      if (w == "compose") kind = Expr::Kind::compose;
      if (w == "deriv") kind = Expr::Kind::deriv;
      if (!kind) {
        pos_ = start;
        fail("unknown operator '" + w + "'", {"add", "mul", "conv", "compose", "deriv"});
      }
      expect('(');
      ExprPtr lhs = expr();
      expect(',');
      if (*kind == Expr::Kind::deriv) {
        skip_space();
        std::size_t at = pos_;
        int order = integer();
        if (order < 1) {
          pos_ = at;
          fail("derivative order must be at least 1", {"INT >= 1"});
        }
        expect(')');
        return Expr::deriv(std::move(lhs), order);
      }
      ExprPtr rhs = expr();
      expect(')');
      return Expr::binary(*kind, std::move(lhs), std::move(rhs));
    }
    if (!bound_.contains(w)) throw UnboundName(line_, static_cast<int>(start) + 1, w);
    return Expr::var(w);
  }

  int line_;
  std::string text_;
  std::size_t pos_;
  const std::set<std::string>& bound_;
};

}  // namespace

ExprPtr Expr::var(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::var;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::binary(Kind kind, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr Expr::deriv(ExprPtr body, int order) {
  auto e = std::make_shared<Expr>();
  e->kind = Kind::deriv;
  e->lhs = std::move(body);
  e->order = order;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::var: return a.name == b.name;
    case Expr::Kind::deriv: return a.order == b.order && *a.lhs == *b.lhs;
    default: return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
  }
}

std::string to_string(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::var: return "var";
    case Expr::Kind::add: return "add";
    case Expr::Kind::mul: return "mul";
    case Expr::Kind::conv: return "conv";
    case Expr::Kind::compose: return "compose";
    case Expr::Kind::deriv: return "deriv";
  }
  return "?";
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::var: return e.name;
    case Expr::Kind::deriv: return "deriv(" + to_string(*e.lhs) + "," + std::to_string(e.order) + ")";
    default: return to_string(e.kind) + "(" + to_string(*e.lhs) + "," + to_string(*e.rhs) + ")";
  }
}

bool operator==(const Decl& a, const Decl& b) {
  return a.name == b.name && a.family == b.family && a.grading == b.grading &&
         a.beta == b.beta && a.k == b.k && a.n == b.n && a.p == b.p && a.q == b.q &&
         a.r == b.r && a.mode == b.mode && a.domain == b.domain;
}

bool operator==(const Query& a, const Query& b) {
  return a.order == b.order && *a.expr == *b.expr;
}

bool operator==(const Program& a, const Program& b) {
  return a.decls == b.decls && a.queries == b.queries &&
         a.statement_is_decl == b.statement_is_decl;
}

DslError::DslError(std::string kind, int line, int column, const std::string& message)
    : Error(std::move(kind),
            std::to_string(line) + ":" + std::to_string(column) + ": error: " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

std::string expected_suffix(const std::set<std::string>& expected) {
  if (expected.empty()) return "";
  std::string s = " (expected ";
  bool first = true;
  for (const auto& e : expected) {
    s += (first ? "" : ", ") + e;
    first = false;
  }
  return s + ")";
}

}  // namespace

SyntaxError::SyntaxError(int line, int column, const std::string& message,
                         std::set<std::string> expected)
    : DslError("SyntaxError", line, column, message + expected_suffix(expected)),
      expected_(std::move(expected)) {}

UnknownFamily::UnknownFamily(int line, int column, const std::string& keyword)
    : DslError("UnknownFamily", line, column, "unknown family '" + keyword + "'") {}

DuplicateName::DuplicateName(int line, int column, const std::string& name)
    : DslError("DuplicateName", line, column, "duplicate declaration of '" + name + "'") {}

UnboundName::UnboundName(int line, int column, const std::string& name)
    : DslError("UnboundName", line, column, "unbound variable " + name) {}

Program parse_program(std::string_view text) {
  Program program;
  std::set<std::string> bound;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string line = strip_comment(raw);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto words = split_words(line);
    if (words.empty()) continue;

    if (words[0].text == "let") {
      Decl d = DeclParser(line_no, words).parse();
      if (bound.contains(d.name)) throw DuplicateName(line_no, words[1].column, d.name);
      bound.insert(d.name);
      program.decls.push_back(std::move(d));
      program.statement_is_decl.push_back(true);
    } else if (words[0].text == "query") {
      std::size_t after = static_cast<std::size_t>(words[0].column - 1) + words[0].text.size();
      program.queries.push_back(QueryParser(line_no, line, after, bound).parse());
      program.statement_is_decl.push_back(false);
    } else {
      throw SyntaxError(line_no, words[0].column, "unexpected '" + words[0].text + "'",
                        {"let", "query"});
    }
  }
  return program;
}

std::string to_text(const Program& program) {
  std::ostringstream os;
  std::size_t d = 0;
  std::size_t q = 0;
  for (bool is_decl : program.statement_is_decl) {
    if (is_decl) {
      const Decl& decl = program.decls[d++];
      os << "let " << decl.name << " : " << to_string(decl.family);
      if (decl.grading) os << ' ' << *decl.grading;
      if (decl.beta != "const:0") os << " beta:" << decl.beta;
      if (decl.k) os << " k:" << *decl.k;
      if (decl.n) os << " n:" << *decl.n;
      if (decl.p) os << " p:" << *decl.p;
      if (decl.q) os << " q:" << *decl.q;
      if (decl.r) os << " r:" << *decl.r;
      if (decl.mode) os << " mode:" << (*decl.mode == HolderMode::strict_zs ? "strict" : "int");
      if (decl.domain) os << " on " << to_string(*decl.domain);
      os << '\n';
    } else {
      const Query& query = program.queries[q++];
      os << "query class(" << to_string(*query.expr) << ", " << query.order << ")\n";
    }
  }
  return os.str();
}

}  // namespace regcalc::dsl
