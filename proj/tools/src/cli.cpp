#include "regcalc_cli/cli.hpp"

#include "regcalc/atlas.hpp"
#include "regcalc/composition.hpp"
#include "regcalc/dsl.hpp"
#include "regcalc/error.hpp"
#include "regcalc/families.hpp"
#include "regcalc/index_laws.hpp"
#include "regcalc/inference.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace regcalc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int env_gamma_max() {
  const char* raw = std::getenv("REGCALC_GAMMA_MAX");
  if (!raw || !*raw) return kDefaultGammaMax;
  try {
    std::size_t used = 0;
    int v = std::stoi(raw, &used);
    if (used == std::string(raw).size() && v >= 1) return v;
  } catch (const std::logic_error&) {
  }
  throw UsageError(std::string("REGCALC_GAMMA_MAX must be a positive integer, got '") + raw + "'");
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string grade_token(const Grade& g) { return g ? g->str() : "zero"; }

// Law report as result lines: one summary line, then one per counterexample.
// Grade columns are printed only for index-law reports; other reports use "-".
bool emit_law(std::ostream& out, const std::string& suite, const LawReport& report, bool grades = true) {
  out << "# " << report.law << ": " << report.checked << " cases\n";
  if (report.pass()) {
    out << ResultLine{suite, report.law, true}.str() << '\n';
    return true;
  }
  for (const auto& ce : report.counterexamples) {
    std::string name = report.law + "[";
    for (std::size_t n = 0; n < ce.args.size(); ++n) name += (n ? "," : "") + ce.args[n].str();
    name += "]";
    ResultLine line{suite, name, false};
    if (grades) {
      line.lhs = grade_token(ce.lhs);
      line.rhs = grade_token(ce.rhs);
    }
    out << line.str();
    if (!ce.note.empty()) out << "  # " << ce.note;
    out << '\n';
  }
  return false;
}

// Index errors raised while a law is being evaluated are law failures.
bool emit_guarded(std::ostream& out, const std::string& suite, const std::string& law,
                  const std::function<LawReport()>& compute) {
  try {
    return emit_law(out, suite, compute());
  } catch (const NotInZS& e) {
    out << ResultLine{suite, law, false, e.kind()}.str() << "  # " << e.what() << '\n';
  } catch (const InvalidExponents& e) {
    out << ResultLine{suite, law, false, e.kind()}.str() << "  # " << e.what() << '\n';
  }
  return false;
}

struct CheckArgs {
  std::string family;
  std::string grading = "id";
  std::optional<int> gamma_min;
  std::optional<int> gamma_max;
  std::string mode = "int";
  std::string domain;
  std::optional<std::string> k;
  int n = 1, p = 2, q = 2, r = 2;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  const FamilyKind kind = parse_family_kind(a.family);
  const bool lp = kind == FamilyKind::lp_holder || kind == FamilyKind::lp_young;
  const int hi = a.gamma_max.value_or(env_gamma_max());
  const int lo = a.gamma_min.value_or(lp ? 1 : 0);
  const GammaRange gamma(lo, hi);
  const DomainKind domain = a.domain.empty() ? (kind == FamilyKind::lp_young ? DomainKind::unbounded : DomainKind::bounded)
                            : a.domain == "unbounded" ? DomainKind::unbounded
                            : a.domain == "bounded"   ? DomainKind::bounded
                                                      : throw UsageError("--domain must be bounded or unbounded");
  if (a.mode != "int" && a.mode != "strict") throw UsageError("--mode must be strict or int");
  const HolderMode mode = a.mode == "strict" ? HolderMode::strict_zs : HolderMode::int_part;

  FamilyDescriptor family;
  UnaryMap grading = UnaryMap::parse(a.grading);
  switch (kind) {
    case FamilyKind::ck:
      if (!a.k) throw UsageError("--k is required for the ck family");
      family = make_ck_family(ExtIndex::parse(*a.k), grading, gamma, domain);
      break;
    case FamilyKind::lp_holder: family = make_lp_holder_family(grading, mode, gamma, domain); break;
    case FamilyKind::lp_young:
      if (domain == DomainKind::bounded) throw UsageError("lp-young families live on unbounded domains");
      family = make_lp_young_family(grading, gamma);
      break;
    case FamilyKind::sobolev: family = make_sobolev_chain(a.n, a.p, a.q, a.r, gamma); break;
  }

  out << "# family " << family.name << " grading " << grading.name() << " gamma " << lo << ".." << hi << '\n';
  bool ok = emit_guarded(out, "check", "additive", [&] { return check_family_additive(family); });
  if (kind != FamilyKind::sobolev) {
    ok = emit_guarded(out, "check", "left_distributive",
                      [&] { return check_family_left_distributive(family); }) && ok;
    ok = emit_guarded(out, "check", "right_distributive",
                      [&] { return check_family_right_distributive(family); }) && ok;
  }
  if (lp) {
    StarKind star = kind == FamilyKind::lp_young ? StarKind::young
                    : mode == HolderMode::strict_zs ? StarKind::holder
                                                    : StarKind::holder_int;
    ok = emit_guarded(out, "check", "distributivity_criterion",
                      [&] { return check_distributivity_criterion(grading, star, gamma); }) && ok;
  }
  return ok ? kExitPass : kExitLawFailure;
}

struct ComposeArgs {
  std::string alpha;
  std::string beta = "const:0";
  std::string eps = "holder";
  std::string delta = "min";
  int order = 3;
};

int run_compose(const ComposeArgs& a, std::ostream& out) {
  if (a.order < 1) throw UsageError("--order must be >= 1");
  auto table = composition_table(UnaryMap::parse(a.alpha), UnaryMap::parse(a.beta), IndexFn::by_name(a.eps),
                                 IndexFn::by_name(a.delta), a.order);
  out << "# i alpha_composed beta_composed\n";
  for (const auto& row : table) out << row.order << ' ' << row.alpha.str() << ' ' << row.beta.str() << '\n';
  return kExitPass;
}

int run_infer(const std::string& path, std::optional<int> gamma_max, std::ostream& out, std::ostream& err) {
  const std::string text = read_input(path);
  dsl::Program program;
  Env env;
  try {
    program = dsl::parse_program(text);
    env = build_env(program, gamma_max.value_or(env_gamma_max()));
  } catch (const dsl::DslError& e) {
    err << path << ':' << e.what() << '\n';
    return kExitUsage;
  }
  auto results = run_queries(program, env);
  out << format_report(results);
  int status = kExitPass;
  for (const auto& r : results) {
    if (!r.error.empty()) {
      err << path << ':' << r.error << '\n';
      status = kExitUsage;
    }
  }
  return status;
}

int run_atlas_check(const std::string& path, AbsorbMode mode, std::ostream& out) {
  Atlas atlas = parse_atlas(read_input(path));
  bool ok = true;
  {
    LawReport b{"b_structure"};
    for (auto [i, j] : atlas.overlapping_pairs()) {
      ++b.checked;
      if (atlas.tag(i, j) != TransitionTag::b) {
        b.counterexamples.push_back({{ExtIndex(i), ExtIndex(j)}, std::nullopt, std::nullopt,
                                     "transition " + atlas.label(i) + " -> " + atlas.label(j) + " is Ck"});
      }
    }
    ok = emit_law(out, "atlas", b, false) && ok;
  }
  if (mode != AbsorbMode::none) {
    FiniteMagma magma = transition_magma(atlas, mode);
    auto subset = b_elements(magma);
    const bool left = mode == AbsorbMode::left || mode == AbsorbMode::full_left;
    const bool right = mode == AbsorbMode::right || mode == AbsorbMode::full_right;
    IdealSide side = left ? IdealSide::left : right ? IdealSide::right : IdealSide::both;
    ok = emit_law(out, "atlas", check_ideal(magma, subset, side), false) && ok;
  }
  return ok ? kExitPass : kExitLawFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index calculus for graded function spaces", "regcalc"};
  app.require_subcommand(1);
  app.fallthrough(false);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Structure-law checks for a family");
  check_cmd->add_option("--family", check.family, "ck | lp-holder | lp-young | sobolev")->required();
  check_cmd->add_option("--grading", check.grading, "id | const:N | table:a,b,...");
  check_cmd->add_option("--gamma-min", check.gamma_min, "Lower end of the index range");
  check_cmd->add_option("--gamma-max", check.gamma_max, "Upper end of the index range");
  check_cmd->add_option("--mode", check.mode, "Hölder mode: strict | int");
  check_cmd->add_option("--domain", check.domain, "bounded | unbounded");
  check_cmd->add_option("--k", check.k, "Differentiability order (ck)");
  check_cmd->add_option("--n", check.n, "Sobolev dimension");
  check_cmd->add_option("--p", check.p, "Sobolev p");
  check_cmd->add_option("--q", check.q, "Sobolev q");
  check_cmd->add_option("--r", check.r, "Sobolev r");

  ComposeArgs compose;
  auto* compose_cmd = app.add_subcommand("compose", "Composed index table");
  compose_cmd->add_option("--alpha", compose.alpha, "Grading α")->required();
  compose_cmd->add_option("--beta", compose.beta, "Grading β");
  compose_cmd->add_option("--eps", compose.eps, "ε: holder | holder-int | young | min | max | sum | first");
  compose_cmd->add_option("--delta", compose.delta, "δ: min | max | ...");
  compose_cmd->add_option("--order", compose.order, "Largest derivative order");

  std::string infer_path;
  std::optional<int> infer_gamma;
  auto* infer_cmd = app.add_subcommand("infer", "Run the queries of a program");
  infer_cmd->add_option("file", infer_path, "Program file, or - for stdin")->required();
  infer_cmd->add_option("--gamma-max", infer_gamma, "Upper end of the index range");

  auto* atlas_cmd = app.add_subcommand("atlas", "Atlas operations");
  atlas_cmd->require_subcommand(1);
  std::string atlas_path;
  std::string atlas_mode = "left";
  auto* retract_cmd = atlas_cmd->add_subcommand("retract", "Print the retracted atlas");
  retract_cmd->add_option("--mode", atlas_mode, "left | right | full_left | full_right | full | none");
  retract_cmd->add_option("file", atlas_path, "Atlas file, or - for stdin")->required();
  auto* acheck_cmd = atlas_cmd->add_subcommand("check", "B-structure and ideal checks");
  acheck_cmd->add_option("--mode", atlas_mode, "left | right | full_left | full_right | full | none");
  acheck_cmd->add_option("file", atlas_path, "Atlas file, or - for stdin")->required();

  std::string suite = "all";
  SuiteOptions suite_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Numerical oracle suites");
  verify_cmd->add_option("--suite", suite, "holder | young | fdb | membership | all")
      ->check(CLI::IsMember({"holder", "young", "fdb", "membership", "all"}));
  verify_cmd->add_option("--seed", suite_opts.seed, "Seed for randomized cases");
  verify_cmd->add_option("--trials", suite_opts.trials, "Randomized cases per suite")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*check_cmd) return run_check(check, out);
    if (*compose_cmd) return run_compose(compose, out);
    if (*infer_cmd) return run_infer(infer_path, infer_gamma, out, err);
    if (*retract_cmd) {
      Atlas atlas = parse_atlas(read_input(atlas_path));
      out << format_atlas(retract_atlas(atlas, parse_absorb_mode(atlas_mode)));
      return kExitPass;
    }
    if (*acheck_cmd) return run_atlas_check(atlas_path, parse_absorb_mode(atlas_mode), out);
    if (*verify_cmd) {
      auto lines = run_verify_suite(suite, suite_opts);
      bool ok = true;
      for (const auto& line : lines) {
        out << line.str() << '\n';
        ok = ok && line.pass;
      }
      return ok ? kExitPass : kExitLawFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotAbsorbing& e) {
    out << ResultLine{"atlas", "retract", false, e.kind()}.str() << "  # " << e.what() << '\n';
    return kExitLawFailure;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace regcalc::cli
