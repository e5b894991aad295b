#include "regcalc/oracle/sampling.hpp"

#include <cmath>

namespace regcalc::oracle {

double Sampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int Sampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

double Sampler::grid(double lo, double hi, double step) {
  const int steps = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  return lo + step * integer(0, steps);
}

ClosedFormFn Sampler::polynomial(int max_degree, double bound) {
  const int degree = integer(0, max_degree);
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1);
  for (double& c : coeffs) c = grid(-bound, bound, 0.25);
  if (coeffs.back() == 0.0) coeffs.back() = 1.0;
  return ClosedFormFn::polynomial(coeffs);
}

ClosedFormFn Sampler::compact_function() {
  // Every support contains [0, 0.5], so random pairs always interact.
  const double a = grid(-1.5, 0.0, 0.25);
  const double b = grid(0.5, 2.0, 0.25);
  const double peak = std::exp(4.0 / ((b - a) * (b - a)));
  const auto x = ClosedFormFn::x();
  ClosedFormFn factor;
  switch (integer(0, 2)) {
    case 0: factor = polynomial(2); break;
    case 1: factor = ClosedFormFn::sin(grid(0.5, 3.0, 0.5) * x) + ClosedFormFn::constant(grid(-1.0, 1.0, 0.5)); break;
    default: factor = ClosedFormFn::constant(grid(0.5, 4.0, 0.5)); break;
  }
  if (factor.is_zero()) factor = ClosedFormFn::constant(1.0);
  return (grid(0.5, 3.0, 0.5) * peak) * (ClosedFormFn::bump(a, b) * factor);
}

ClosedFormFn Sampler::grammar_function(int depth) {
  const auto x = ClosedFormFn::x();
  if (depth <= 0) {
    return integer(0, 2) == 0 ? ClosedFormFn::constant(grid(-1.0, 1.0, 0.25)) : grid(0.25, 1.0, 0.25) * x;
  }
  auto sub = [&] { return grammar_function(depth - 1); };
  switch (integer(0, 6)) {
    case 0: return sub() + sub();
    case 1: return sub() * sub();
    case 2: return ClosedFormFn::pow(sub(), 2);
    case 3: return ClosedFormFn::exp(0.5 * sub());
    case 4: return ClosedFormFn::sin(sub());
    case 5: return ClosedFormFn::cos(sub());
    default: return polynomial(2, 1.0);
  }
}

ExtIndex Sampler::holder_exponent() {
  static const std::vector<ExtIndex> choices{ExtIndex(1), ExtIndex(3, 2), ExtIndex(2), ExtIndex(3),
                                             ExtIndex(4), ExtIndex(6), ExtIndex::inf()};
  return pick(choices);
}

ExtIndex Sampler::young_exponent() {
  static const std::vector<ExtIndex> choices{ExtIndex(1), ExtIndex(6, 5), ExtIndex(4, 3), ExtIndex(3, 2),
                                             ExtIndex(2)};
  return pick(choices);
}

}  // namespace regcalc::oracle
