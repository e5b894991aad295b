#pragma once

#include "regcalc/ext_index.hpp"
#include "regcalc/oracle/closed_form.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace regcalc::oracle {

/// Seeded draws that do not depend on the standard library's distribution
/// implementations, so a seed reproduces bit-identical cases everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive
  // Multiple of `step` in [lo, hi].
  double grid(double lo, double hi, double step);
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(integer(0, static_cast<int>(items.size()) - 1))];
  }

  // Polynomial of degree <= max_degree, coefficients on a 1/4 grid in
  // [-bound, bound].
  ClosedFormFn polynomial(int max_degree, double bound = 2.0);
  // Peak-normalised bump on a random interval containing [0, 0.5], times a
  // random polynomial or trig factor.
  ClosedFormFn compact_function();
  // Grammar function of small depth, not necessarily compactly supported.
  ClosedFormFn grammar_function(int depth = 2);
  // Hölder exponents p, q in {1, 3/2, 2, 3, 4, 6, inf}.
  ExtIndex holder_exponent();
  // Young exponents in {1, 6/5, 4/3, 3/2, 2}; every pair is admissible.
  ExtIndex young_exponent();

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace regcalc::oracle
