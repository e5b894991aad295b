#include "regcalc/error.hpp"
#include "regcalc/families.hpp"
#include "regcalc/oracle/sampling.hpp"
#include "regcalc/oracle/verify.hpp"
#include "regcalc_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace regcalc::cli {

using namespace regcalc::oracle;

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string ResultLine::str() const {
  std::ostringstream os;
  os << suite << ' ' << name << ' ' << (pass ? "pass" : "fail") << ' ' << lhs << ' ' << rhs << ' ' << tol;
  return os.str();
}

namespace {

ResultLine inequality_line(const std::string& suite, const std::string& name, const InequalityReport& r) {
  return {suite, name, r.holds, format_real(r.lhs), format_real(r.rhs), format_real(r.tol)};
}

// Runs a case; library errors become a failing line carrying the error kind.
void guarded(std::vector<ResultLine>& out, const std::string& suite, const std::string& name,
             const std::function<ResultLine()>& body) {
  try {
    out.push_back(body());
  } catch (const Error& e) {
    out.push_back({suite, name, false, e.kind(), "-", "0"});
  }
}

std::vector<ResultLine> holder_suite(const SuiteOptions& opt) {
  std::vector<ResultLine> out;
  const auto x = ClosedFormFn::x();
  const auto one = ClosedFormFn::constant(1.0);
  const Interval unit{0.0, 1.0};
  guarded(out, "holder", "ones_p2_q2", [&] {
    auto r = verify_holder(one, one, 2, 2, unit);
    return inequality_line("holder", "ones_p2_q2", r);
  });
  guarded(out, "holder", "x_x_p2_q2_equality", [&] {
    auto r = verify_holder(x, x, 2, 2, unit);
    ResultLine line = inequality_line("holder", "x_x_p2_q2_equality", r);
    line.pass = r.holds && close_rel(r.lhs, r.rhs, kSymbolicTol);
    line.tol = format_real(kSymbolicTol);
    return line;
  });
  guarded(out, "holder", "x_1mx_p2_q2_strict", [&] {
    auto r = verify_holder(x, one - x, 2, 2, unit);
    ResultLine line = inequality_line("holder", "x_1mx_p2_q2_strict", r);
    line.pass = r.holds && r.lhs < r.rhs - r.tol;
    return line;
  });
  Sampler s(opt.seed);
  for (int t = 0; t < opt.trials; ++t) {
    auto f = s.compact_function();
    auto g = s.compact_function();
    ExtIndex p = s.holder_exponent();
    ExtIndex q = s.holder_exponent();
    std::string name = "random" + std::to_string(t) + "_p" + p.str() + "_q" + q.str();
    guarded(out, "holder", name, [&] {
      return inequality_line("holder", name, verify_holder(f, g, p, q, Interval::whole_line()));
    });
  }
  return out;
}

std::vector<ResultLine> young_suite(const SuiteOptions& opt) {
  std::vector<ResultLine> out;
  const auto bump = ClosedFormFn::bump(0.0, 1.0);
  const double mass = lp_norm(bump, ExtIndex(1), Interval{0.0, 1.0}).value;
  const auto unit_bump = (1.0 / mass) * bump;
  guarded(out, "young", "unit_mass_bump_i1_j1_equality", [&] {
    auto r = verify_young(unit_bump, unit_bump, 1, 1);
    ResultLine line = inequality_line("young", "unit_mass_bump_i1_j1_equality", r);
    line.pass = r.holds && std::abs(r.lhs - r.rhs) <= kInequalityTol;
    return line;
  });
  guarded(out, "young", "bump_i1_j2", [&] {
    return inequality_line("young", "bump_i1_j2", verify_young(unit_bump, unit_bump, 1, 2));
  });
  {
    ResultLine line{"young", "i3_j3_rejected", false, "-", "-", "0"};
    try {
      verify_young(unit_bump, unit_bump, 3, 3);
    } catch (const InvalidExponents&) {
      line.pass = true;
      line.lhs = "InvalidExponents";
    }
    out.push_back(line);
  }
  Sampler s(opt.seed + 1);
  for (int t = 0; t < opt.trials; ++t) {
    auto f = s.compact_function();
    auto g = s.compact_function();
    ExtIndex i = s.young_exponent();
    ExtIndex j = s.young_exponent();
    std::string name = "random" + std::to_string(t) + "_i" + i.str() + "_j" + j.str();
    guarded(out, "young", name, [&] { return inequality_line("young", name, verify_young(f, g, i, j)); });
  }
  return out;
}

ResultLine fdb_line(const std::string& name, const FdbReport& r) {
  ResultLine line{"fdb", name, r.pass()};
  // Report the worst point.
  double worst = -1.0;
  for (const auto& p : r.points) {
    const double ref = r.polynomial ? p.symbolic : p.finite_difference;
    const double dev = std::abs(p.partition_sum - ref) / std::max({1.0, std::abs(p.partition_sum), std::abs(ref)});
    if (dev > worst) {
      worst = dev;
      line.lhs = format_real(p.partition_sum);
      line.rhs = format_real(ref);
    }
  }
  line.tol = format_real(r.polynomial ? kSymbolicTol : kFiniteDifferenceTol);
  return line;
}

std::vector<ResultLine> fdb_suite(const SuiteOptions& opt) {
  std::vector<ResultLine> out;
  const auto x = ClosedFormFn::x();
  guarded(out, "fdb", "y2_x3_order2_at1", [&] {
    auto r = verify_faa_di_bruno(ClosedFormFn::pow(x, 3), ClosedFormFn::pow(x, 2), 2, {1.0});
    ResultLine line = fdb_line("y2_x3_order2_at1", r);
    line.pass = line.pass && close_rel(r.points[0].partition_sum, 30.0, kSymbolicTol);
    return line;
  });
  guarded(out, "fdb", "exp_sin_order3_at0", [&] {
    return fdb_line("exp_sin_order3_at0",
                    verify_faa_di_bruno(ClosedFormFn::sin(x), ClosedFormFn::exp(x), 3, {0.0}));
  });
  guarded(out, "fdb", "identity_outer_order4", [&] {
    auto f = ClosedFormFn::sin(x) * ClosedFormFn::pow(x, 2);
    auto r = verify_faa_di_bruno(f, x, 4, {0.3});
    ResultLine line = fdb_line("identity_outer_order4", r);
    line.pass = line.pass && close_rel(r.points[0].partition_sum, derivative(f, 4)(0.3), kSymbolicTol);
    return line;
  });
  Sampler s(opt.seed + 2);
  for (int t = 0; t < opt.trials; ++t) {
    const bool poly = t % 2 == 0;
    auto f = poly ? s.polynomial(3, 1.0) : s.grammar_function(2);
    auto g = poly ? s.polynomial(3, 1.0) : s.grammar_function(2);
    const int order = s.integer(1, 4);
    std::vector<double> xs{s.grid(-1.0, 1.0, 0.125), s.grid(-1.0, 1.0, 0.125)};
    std::string name = std::string(poly ? "poly" : "trans") + std::to_string(t) + "_order" + std::to_string(order);
    guarded(out, "fdb", name, [&] { return fdb_line(name, verify_faa_di_bruno(f, g, order, xs)); });
  }
  return out;
}

ResultLine membership_line(const std::string& name, const MembershipReport& r, bool expected) {
  ResultLine line{"membership", name, r.member() == expected};
  line.lhs = r.member() ? "member" : "nonmember";
  line.rhs = expected ? "member" : "nonmember";
  return line;
}

std::vector<ResultLine> membership_suite(const SuiteOptions&) {
  std::vector<ResultLine> out;
  const auto x = ClosedFormFn::x();
  const auto bump = ClosedFormFn::bump(-1.0, 1.0);
  const GammaRange gamma(0, 8);
  for (int p : {1, 2, 6}) {
    auto alpha = UnaryMap::constant(ExtIndex(p));
    auto fam = make_lp_holder_family(alpha, HolderMode::int_part, gamma, DomainKind::unbounded);
    std::string name = "bump_L" + std::to_string(p) + "_k3";
    guarded(out, "membership", name, [&] {
      return membership_line(name,
                             verify_membership(bump, fam, alpha, UnaryMap::identity(), 3, Interval::whole_line()),
                             true);
    });
  }
  {
    auto alpha = UnaryMap::constant(ExtIndex::inf());
    auto fam = make_lp_holder_family(alpha, HolderMode::int_part, gamma, DomainKind::unbounded);
    guarded(out, "membership", "bump_Linf_k3", [&] {
      return membership_line("bump_Linf_k3",
                             verify_membership(bump, fam, alpha, UnaryMap::identity(), 3, Interval::whole_line()),
                             true);
    });
  }
  {
    auto alpha = UnaryMap::constant(ExtIndex(2));
    auto fam = make_lp_holder_family(alpha, HolderMode::int_part, gamma, DomainKind::unbounded);
    guarded(out, "membership", "x_unbounded_L2", [&] {
      return membership_line("x_unbounded_L2",
                             verify_membership(x, fam, alpha, UnaryMap::constant(0), 0, Interval::whole_line()),
                             false);
    });
    guarded(out, "membership", "zero_L2_k6", [&] {
      return membership_line("zero_L2_k6",
                             verify_membership(ClosedFormFn(), fam, alpha, UnaryMap::identity(), 6,
                                               Interval::whole_line()),
                             true);
    });
  }
  {
    auto alpha = UnaryMap::identity();
    auto fam = make_ck_family(ExtIndex(2), alpha, gamma);
    guarded(out, "membership", "x_ck2_bounded", [&] {
      return membership_line("x_ck2_bounded",
                             verify_membership(x, fam, alpha, UnaryMap::constant(0), 2, Interval{0.0, 1.0}),
                             true);
    });
    guarded(out, "membership", "x3_ck2_zero_space", [&] {
      return membership_line("x3_ck2_zero_space",
                             verify_membership(ClosedFormFn::pow(x, 3), fam, alpha, UnaryMap::identity(), 3,
                                               Interval{0.0, 1.0}),
                             false);
    });
  }
  return out;
}

}  // namespace

std::vector<ResultLine> run_verify_suite(const std::string& suite, const SuiteOptions& options) {
  if (suite == "holder") return holder_suite(options);
  if (suite == "young") return young_suite(options);
  if (suite == "fdb") return fdb_suite(options);
  if (suite == "membership") return membership_suite(options);
  if (suite == "all") {
    std::vector<ResultLine> out;
    for (const char* s : {"holder", "young", "fdb", "membership"}) {
      auto part = run_verify_suite(s, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace regcalc::cli
