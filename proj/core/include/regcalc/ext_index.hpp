#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace regcalc {

using Rational = boost::multiprecision::cpp_rational;

/// Nonnegative exact rational extended with a single point at infinity.
///
/// Every grading and index function in the library takes values here.
/// Finite values are kept as reduced fractions; INF compares above every
/// finite value.
class ExtIndex {
 public:
  ExtIndex() = default;
  ExtIndex(std::int64_t n);  // NOLINT(google-explicit-constructor)
  explicit ExtIndex(Rational q);
  ExtIndex(std::int64_t num, std::int64_t den);

  static ExtIndex inf();

  bool is_inf() const noexcept { return inf_; }
  bool is_finite() const noexcept { return !inf_; }

  // Precondition: is_finite().
  const Rational& value() const;

  bool is_integer() const;
  // Largest integer not exceeding the value. INF floors to INF.
  ExtIndex floor() const;
  // 1/x with 1/0 = INF and 1/INF = 0.
  ExtIndex reciprocal() const;

  // Parses "inf", "a", or "a/b".
  static ExtIndex parse(std::string_view text);
  std::string str() const;
  double to_double() const;

  friend ExtIndex operator+(const ExtIndex& a, const ExtIndex& b);
  friend ExtIndex operator*(const ExtIndex& a, const ExtIndex& b);

  friend bool operator==(const ExtIndex& a, const ExtIndex& b);
  friend std::strong_ordering operator<=>(const ExtIndex& a,
                                          const ExtIndex& b);

 private:
  Rational q_{0};
  bool inf_ = false;
};

std::ostream& operator<<(std::ostream& os, const ExtIndex& x);

// a - b, or nullopt when the difference would be negative. INF - finite is
// INF; anything minus INF (other than INF - INF, which is rejected) is
// negative.
std::optional<ExtIndex> checked_sub(const ExtIndex& a, const ExtIndex& b);

inline const ExtIndex& min(const ExtIndex& a, const ExtIndex& b) {
  return b < a ? b : a;
}
inline const ExtIndex& max(const ExtIndex& a, const ExtIndex& b) {
  return a < b ? b : a;
}

/// The index range Γ≥0 ∩ [lo, hi] that law checkers enumerate.
struct GammaRange {
  int lo = 0;
  int hi = 8;

  GammaRange() = default;
  GammaRange(int lo_, int hi_);
  explicit GammaRange(int hi_) : GammaRange(0, hi_) {}

  int size() const noexcept { return hi - lo + 1; }
};

inline constexpr int kDefaultGammaMax = 8;

/// A grade is an index value or the zero space (nullopt). The zero space is
/// the bottom of every inclusion chain: it sits inside every other space.
using Grade = std::optional<ExtIndex>;

std::string grade_str(const Grade& g);

}  // namespace regcalc
