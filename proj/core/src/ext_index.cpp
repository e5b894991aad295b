#include "regcalc/ext_index.hpp"

#include "regcalc/error.hpp"

#include <limits>
#include <ostream>

namespace regcalc {

namespace {

Rational parse_rational(std::string_view text) {
  auto to_int = [&](std::string_view part) {
    if (part.empty()) throw DomainError("malformed index '" + std::string(text) + "'");
    for (char c : part) {
      if (c < '0' || c > '9') {
        throw DomainError("malformed index '" + std::string(text) + "'");
      }
    }
    return boost::multiprecision::cpp_int(std::string(part));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(to_int(text));
  auto den = to_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(to_int(text.substr(0, slash)), den);
}

}  // namespace

ExtIndex::ExtIndex(std::int64_t n) : q_(n) {
  if (n < 0) throw DomainError("index values are nonnegative, got " + std::to_string(n));
}

ExtIndex::ExtIndex(Rational q) : q_(std::move(q)) {
  if (q_ < 0) throw DomainError("index values are nonnegative, got " + q_.str());
}

ExtIndex::ExtIndex(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if ((num < 0) != (den < 0) && num != 0) {
    throw DomainError("index values are nonnegative, got " + std::to_string(num) + "/" +
                      std::to_string(den));
  }
  q_ = Rational(num, den);
  if (q_ < 0) throw DomainError("index values are nonnegative, got " + q_.str());
}

ExtIndex ExtIndex::inf() {
  ExtIndex x;
  x.inf_ = true;
  return x;
}

const Rational& ExtIndex::value() const {
  if (inf_) throw DomainError("value() of INF");
  return q_;
}

bool ExtIndex::is_integer() const {
  return !inf_ && boost::multiprecision::denominator(q_) == 1;
}

ExtIndex ExtIndex::floor() const {
  if (inf_) return *this;
  // numerator and denominator are nonnegative, so truncation is floor.
  boost::multiprecision::cpp_int n = boost::multiprecision::numerator(q_);
  boost::multiprecision::cpp_int d = boost::multiprecision::denominator(q_);
  return ExtIndex(Rational(n / d));
}

ExtIndex ExtIndex::reciprocal() const {
  if (inf_) return ExtIndex(0);
  if (q_ == 0) return inf();
  return ExtIndex(Rational(1) / q_);
}

ExtIndex ExtIndex::parse(std::string_view text) {
  if (text == "inf" || text == "INF") return inf();
  return ExtIndex(parse_rational(text));
}

std::string ExtIndex::str() const {
  if (inf_) return "inf";
  return q_.str();
}

double ExtIndex::to_double() const {
  if (inf_) return std::numeric_limits<double>::infinity();
  return q_.convert_to<double>();
}

ExtIndex operator+(const ExtIndex& a, const ExtIndex& b) {
  if (a.inf_ || b.inf_) return ExtIndex::inf();
  return ExtIndex(a.q_ + b.q_);
}

ExtIndex operator*(const ExtIndex& a, const ExtIndex& b) {
  if (a.inf_ || b.inf_) {
    // 0 * INF has no canonical value in this algebra.
    if ((!a.inf_ && a.q_ == 0) || (!b.inf_ && b.q_ == 0)) {
      throw DomainError("0 * inf is undefined");
    }
    return ExtIndex::inf();
  }
  return ExtIndex(a.q_ * b.q_);
}

bool operator==(const ExtIndex& a, const ExtIndex& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.q_ == b.q_;
}

std::strong_ordering operator<=>(const ExtIndex& a, const ExtIndex& b) {
  if (a.inf_ || b.inf_) {
    if (a.inf_ == b.inf_) return std::strong_ordering::equal;
    return a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.q_ < b.q_) return std::strong_ordering::less;
  if (a.q_ > b.q_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExtIndex& x) {
  return os << x.str();
}

std::optional<ExtIndex> checked_sub(const ExtIndex& a, const ExtIndex& b) {
  if (b.is_inf()) {
    if (a.is_inf()) throw DomainError("inf - inf is undefined");
    return std::nullopt;
  }
  if (a.is_inf()) return ExtIndex::inf();
  Rational d = a.value() - b.value();
  if (d < 0) return std::nullopt;
  return ExtIndex(std::move(d));
}

std::string grade_str(const Grade& g) { return g ? g->str() : "zero"; }

GammaRange::GammaRange(int lo_, int hi_) : lo(lo_), hi(hi_) {
  if (lo < 0) throw DomainError("gamma range starts below 0");
  if (hi < 1) throw DomainError("gamma range max must be at least 1");
  if (lo > hi) throw DomainError("gamma range is empty");
}

}  // namespace regcalc
