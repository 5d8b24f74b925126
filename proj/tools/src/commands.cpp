#include "ginv/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "ginv/cli/matrix_io.hpp"
#include "ginv/error.hpp"
#include "ginv/fixtures.hpp"
#include "ginv/linalg.hpp"
#include "ginv/norms.hpp"
#include "ginv/perturbation.hpp"
#include "ginv/theta.hpp"

namespace ginv::cli {

namespace {

std::string join_ranks(const std::vector<std::size_t>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != 0) out += ' ';
    out += std::to_string(seq[i]);
  }
  return out;
}

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + " must be square");
}

void add_condition_table(Report& r, const PerturbationVerdict& v) {
  r.verdict("R(T+dT) subset of R(T)", v.condition_range_subset);
  if (v.condition_range_equal) r.verdict("R(T+dT) = R(T)", *v.condition_range_equal);
  r.verdict("T T^core dT = dT", v.condition_left);
  r.verdict("T^core T dT = dT", v.condition_right);
}

void add_bounds(Report& r, const BoundReport& b) {
  r.norm("||T^core||", b.norm_t_core);
  r.norm("||T^core dT||", b.norm_tcore_dt);
  r.norm("||(I + T^core dT)^-1||", b.norm_resolvent);
  r.norm("||B||", b.norm_b);
  r.norm("||B - T^core||", b.norm_b_minus_tcore);
  r.norm("||T^core||_F", b.frobenius_t_core);
  r.norm("||T^core dT||_F", b.frobenius_tcore_dt);
  r.norm("||B||_F", b.frobenius_b);
  r.verdict("bound ||B|| <= ||T^core|| ||(I + T^core dT)^-1||", b.b_bound_ok);
  r.verdict("bound ||B - T^core|| <= ||T^core|| ||(I + T^core dT)^-1|| ||T^core dT||",
            b.difference_bound_ok);
  if (b.sandwich_applicable) {
    r.norm("sandwich lower ||T^core||/(1+||T^core dT||)", b.norm_t_core / (1 + b.norm_tcore_dt));
    r.norm("sandwich upper ||T^core||/(1-||T^core dT||)", b.norm_t_core / (1 - b.norm_tcore_dt));
    r.verdict("sandwich lower bound", b.sandwich_lower_ok);
    r.verdict("sandwich upper bound", b.sandwich_upper_ok);
  } else {
    r.message("sandwich bound not applicable: ||T^core dT|| >= 1");
  }
  r.value("sandwich certified exactly (||T^core dT||_F^2 < 1)", b.sandwich_certified ? "yes" : "no");
  r.verdict("Frobenius-norm versions of the bounds", b.frobenius_bounds_ok);
}

void expect(Report& r, std::string name, bool ok) { r.verdict(std::move(name), ok); }

}  // namespace

std::size_t max_dim() {
  if (const char* env = std::getenv("GINV_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 64;
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Matrix m;
  try {
    m = parse_matrix(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.line(), e.column(), "in '" + path + "'");
  }
  const std::size_t cap = max_dim();
  if (m.rows() > cap || m.cols() > cap) {
    throw DimensionError(path + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " exceeds GINV_MAX_DIM=" + std::to_string(cap));
  }
  return m;
}

Report compute(std::string_view kind, const Matrix& t) {
  Report r;
  r.inputs_digest = digest({serialize(t)});
  if (kind == "index") {
    require_square(t, "index input");
    const IndexReport idx = index(t);
    r.value("index", std::to_string(idx.index));
    r.value("rank sequence", join_ranks(idx.rank_sequence));
    return r;
  }
  if (kind == "mp") {
    if (t.is_square()) {
      r.matrix("Moore-Penrose inverse", moore_penrose(t));
    } else {
      const Matrix p = pseudo_inverse(t);
      if (!(t * p * t == t && p * t * p == p && (t * p).adjoint() == t * p && (p * t).adjoint() == p * t)) {
        throw InternalInconsistencyError("pseudo_inverse failed its postcondition check");
      }
      r.matrix("Moore-Penrose inverse", p);
    }
    r.message("verified: equations (1),(2),(3),(4)");
    return r;
  }
  if (kind == "projector") {
    const Matrix p = orthogonal_projector(t);
    r.matrix("orthogonal projector onto R(T)", p);
    r.verdict("P^2 = P", p * p == p);
    r.verdict("P* = P", p.adjoint() == p);
    r.verdict("R(P) = R(T)", same_range(p, t));
    return r;
  }
  if (kind == "group" || kind == "core") {
    require_square(t, "input");
    const IndexReport idx = index(t);
    r.value("index", std::to_string(idx.index));
    if (idx.index > 1) {
      r.message(std::string(kind) + " inverse does not exist: index(T) = " + std::to_string(idx.index) + " > 1");
      r.exit_status = kExitNonexistent;
      return r;
    }
    if (kind == "group") {
      r.matrix("group inverse", group_inverse(t));
      r.message("verified: equations (1),(2),(5)");
    } else {
      r.matrix("core inverse", core_inverse(t));
      r.message("verified: equations (1),(2),(3),(6),(7); T S = P_T; R(S) = R(T); N(S) = N(T*)");
    }
    return r;
  }
  throw std::invalid_argument("unknown compute kind '" + std::string(kind) + "'");
}

Report perturb(const Matrix& t, const Matrix& delta_t) {
  Report r;
  r.inputs_digest = digest({serialize(t), serialize(delta_t)});
  require_square(t, "T");
  if (delta_t.rows() != t.rows() || delta_t.cols() != t.cols()) {
    throw DimensionError("T and dT must have the same size");
  }
  const IndexReport idx = index(t);
  if (idx.index > 1) {
    r.message("T has no core inverse: index(T) = " + std::to_string(idx.index));
    r.exit_status = kExitNonexistent;
    return r;
  }
  const auto c = PerturbationCase::make(t, delta_t);
  const PerturbationVerdict v = analyze(c);
  r.matrix("T^core", c.t_core);
  r.matrix("T + dT", c.t_bar);
  r.value("I + T^core dT invertible", v.invertible ? "yes" : "no");
  add_condition_table(r, v);
  r.norm("||T^core||", v.norm_t_core);
  r.norm("||T^core dT||", v.norm_tcore_dt);
  if (!v.invertible) {
    r.message("I + T^core dT is singular: the expression B is undefined");
    r.exit_status = kExitNonexistent;
    return r;
  }
  r.norms.clear();
  r.matrix("B = (I + T^core dT)^-1 T^core", *v.b);
  r.matrix("(T + dT) B", *v.tbar_b);
  r.verdict("B is the core inverse of T + dT (equations 1,2,3,6,7)", v.is_core_of_tbar);
  r.verdict("(T + dT) B = T T^core", *v.tbar_b == c.t * c.t_core);
  add_bounds(r, *v.bounds);
  if (!v.is_core_of_tbar) {
    r.message("B is not the core inverse of T + dT; failed conditions: R(T+dT) subset of R(T), "
              "R(T+dT) = R(T), T T^core dT = dT, T^core T dT = dT");
    r.exit_status = kExitRejected;
  }
  return r;
}

Report verify_theta(std::string_view theta_text, const Matrix& t, const Matrix& s) {
  Report r;
  r.inputs_digest = digest({std::string(theta_text), serialize(t), serialize(s)});
  const ThetaSet theta = ThetaSet::parse(theta_text);
  r.value("theta", theta.to_string());
  bool all = true;
  for (const auto eq : theta.equations()) {
    const bool ok = check_equation(eq, t, s);
    all = all && ok;
    r.verdict("equation (" + std::to_string(static_cast<int>(eq)) + ")", ok);
  }
  r.message(all ? "S is a " + theta.to_string() + "-inverse of T"
                : "S is not a " + theta.to_string() + "-inverse of T");
  r.exit_status = all ? kExitOk : kExitRejected;
  return r;
}

Report verify_core(const Matrix& t, const Matrix& s) {
  Report r;
  r.inputs_digest = digest({serialize(t), serialize(s)});
  const bool t137 = is_theta_inverse(ThetaSet::core_matrix(), t, s);
  const bool t12367 = is_theta_inverse(ThetaSet::core_operator(), t, s);
  const bool d12 = is_core_inverse_def12(t, s);
  const IndexReport idx = index(t);
  r.value("index", std::to_string(idx.index));
  r.verdict("equations (1),(3),(7)", t137);
  r.verdict("equations (1),(2),(3),(6),(7)", t12367);
  r.verdict("T S T = T, R(S) = R(T), N(S) = N(T*)", d12);
  bool agree = t137 == t12367 && t12367 == d12;
  if (idx.index <= 1) {
    const bool d11 = is_core_inverse_def11(t, s);
    r.verdict("T S = P_T and R(S) subset of R(T)", d11);
    agree = agree && d11 == d12;
  } else {
    r.message("index(T) > 1: the P_T characterization does not apply");
  }
  if (!agree) {
    r.message("FALSIFICATION: the core-inverse characterizations disagree");
    r.exit_status = kExitRejected;
    return r;
  }
  r.message(t137 ? "S is the core inverse of T" : "S is not the core inverse of T");
  r.exit_status = t137 ? kExitOk : kExitRejected;
  return r;
}

Report fixtures() {
  Report r;
  const auto pres = ginv::fixtures::range_preserving();
  const auto viol = ginv::fixtures::range_violating();

  const Matrix core = core_inverse(pres.t);
  r.matrix("T", pres.t);
  r.matrix("T^core", core);
  expect(r, "T^core = (1/120) [[-30,60,40,10],[21,-18,8,-31],[-15,30,40,-35],[42,-36,-24,18]]",
         core == pres.t_core);
  expect(r, "index(T) <= 1", index(pres.t).index <= 1);
  expect(r, "rank(T) = 3", rank(pres.t) == 3);

  // Range-preserving perturbation.
  {
    const auto v = analyze(PerturbationCase::make(pres.t, pres.delta_t));
    r.matrix("range-preserving dT", pres.delta_t);
    r.matrix("range-preserving B", *v.b);
    expect(r, "T + dT = [[1,-1,2,0],[0,-1,-3,2],[-2,0,-4,1],[5,-3,4,2]]", pres.t + pres.delta_t == pres.t_bar);
    expect(r, "R(T + dT) = R(T) = span{(1,2,2,1),(0,1,2,-2),(2,-1,0,0)}",
           same_range(pres.t_bar, pres.t) && same_range(pres.t, ginv::fixtures::range_basis()));
    expect(r, "I + T^core dT invertible", v.invertible);
    expect(r, "B = (1/90) [[30,0,10,10],[-201,18,-88,11],[-75,0,-40,5],[-222,36,-86,22]]",
           v.b && *v.b == pres.expression);
    expect(r, "B = core inverse of T + dT (computed directly)", v.b && core_inverse(pres.t_bar) == *v.b);
    expect(r, "B satisfies equations (1),(2),(3),(6),(7) for T + dT", v.is_core_of_tbar);
    expect(r, "(T + dT) B = T T^core", v.tbar_b && *v.tbar_b == pres.t * core);
    expect(r, "all four range conditions hold",
           v.condition_range_subset && v.condition_range_equal == true && v.condition_left && v.condition_right);
    if (v.bounds) {
      expect(r, "norm bounds hold", v.bounds_satisfied);
      r.norm("range-preserving ||T^core dT||", v.bounds->norm_tcore_dt);
      r.norm("range-preserving ||B||", v.bounds->norm_b);
    }
  }

  // Range-violating perturbation.
  {
    const auto v = analyze(PerturbationCase::make(viol.t, viol.delta_t));
    const Matrix tbar_core = core_inverse(viol.t_bar);
    const Matrix probe = Matrix{{1, 2, 2, 1}}.transpose();
    r.matrix("range-violating dT", viol.delta_t);
    r.matrix("range-violating (T + dT)^core", tbar_core);
    r.matrix("range-violating B", *v.b);
    expect(r, "T + dT = [[2,0,0,2],[0,2,0,-1],[0,0,2,3],[0,0,0,0]]", viol.t + viol.delta_t == viol.t_bar);
    expect(r, "(1,2,2,1) in R(T)", subspace_leq(probe, viol.t));
    expect(r, "(1,2,2,1) not in R(T + dT)", !subspace_leq(probe, viol.t_bar));
    expect(r, "(T + dT)^core = (1/2) [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,0]]",
           tbar_core == ginv::fixtures::range_violating_tbar_core());
    expect(r, "I + T^core dT invertible", v.invertible);
    expect(r, "B = (1/8) [[6,4,-4,22],[-1,2,2,-1],[3,6,-2,19],[-2,-4,4,-18]]", v.b && *v.b == viol.expression);
    expect(r, "B != (T + dT)^core", v.b && *v.b != tbar_core);
    expect(r, "B is not a core inverse of T + dT", !v.is_core_of_tbar);
    expect(r, "all four range conditions fail",
           !v.condition_range_subset && v.condition_range_equal == false && !v.condition_left &&
               !v.condition_right);
    expect(r, "N(T + dT) = N(T)", same_range(null_space_basis(viol.t_bar), null_space_basis(viol.t)));
    expect(r, "rank(T + dT) = rank(T) = 3", rank(viol.t_bar) == 3 && rank(viol.t) == 3);
  }

  r.exit_status = r.all_verdicts_pass() ? kExitOk : kExitRejected;
  return r;
}

Report fuzz(const FuzzArgs& args) {
  const auto kind = harness::parse_campaign_kind(args.kind);
  if (!kind) {
    throw std::invalid_argument("unknown fuzz kind '" + args.kind +
                                "' (theorem_2_1, theorem_2_2, remark_2_1, characterizations, corollary_bounds)");
  }
  if (args.cfg.dim > max_dim()) throw DimensionError("--dim exceeds GINV_MAX_DIM");

  const harness::FuzzReport fr = args.replay ? harness::run_trial(*kind, args.cfg, *args.replay)
                                             : harness::fuzz_campaign(*kind, args.trials, args.cfg, args.threads);
  Report r;
  r.value("kind", std::string(harness::to_string(*kind)));
  r.value(args.replay ? "replayed sub-seed" : "seed", std::to_string(fr.seed));
  r.value("trials", std::to_string(fr.trials));
  r.value("dim", std::to_string(args.cfg.dim));
  r.value("rank", args.cfg.rank ? std::to_string(*args.cfg.rank) : "random per trial");
  for (const auto& [name, count] : fr.counters) r.value("count " + name, std::to_string(count));
  r.value("violations", std::to_string(fr.violations.size()));
  for (const auto& v : fr.violations) {
    r.message("VIOLATION trial " + std::to_string(v.trial) + " sub-seed " + std::to_string(v.seed) + ": " +
              v.invariant + (v.detail.empty() ? "" : " | " + v.detail) +
              " (replay: ginv fuzz " + args.kind + " --dim " + std::to_string(args.cfg.dim) +
              (args.cfg.rank ? " --rank " + std::to_string(*args.cfg.rank) : "") + " --replay " +
              std::to_string(v.seed) + ")");
  }
  r.verdict("no violations", fr.passed());
  r.exit_status = fr.passed() ? kExitOk : kExitRejected;
  return r;
}

Report witnesses(std::size_t trials, std::uint64_t seed) {
  const auto demo = harness::null_space_witness_demo(trials, seed);
  Report r;
  r.verdict("reference case: N(T + dT) = N(T)", demo.fixture_null_space_equal);
  r.verdict("reference case: rank(T + dT) = rank(T)", demo.fixture_rank_equal);
  r.verdict("reference case: I + T^core dT invertible", demo.fixture_invertible);
  r.verdict("reference case: B is not the core inverse of T + dT", !demo.fixture_is_core_of_tbar);
  r.verdict("reference case: B != (T + dT)^core", demo.fixture_core_differs);
  r.value("search trials", std::to_string(demo.search_trials));
  r.value("witnesses found", std::to_string(demo.witnesses.size()));
  if (demo.witnesses.empty()) r.message("no further witnesses found in the random search");
  for (std::size_t i = 0; i < demo.witnesses.size() && i < 3; ++i) {
    r.matrix("witness " + std::to_string(i) + " T (sub-seed " + std::to_string(demo.witnesses[i].seed) + ")",
             demo.witnesses[i].t);
    r.matrix("witness " + std::to_string(i) + " dT", demo.witnesses[i].delta_t);
  }
  r.exit_status = r.all_verdicts_pass() ? kExitOk : kExitRejected;
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized inverses and core-inverse perturbation checks"};
  app.require_subcommand(1);
  bool json = false;
  std::string report_path;
  app.add_flag("--json", json, "Print the report as JSON instead of text");
  app.add_option("--report", report_path, "Also write the JSON report to this path");

  std::string compute_kind;
  std::string compute_file;
  auto* compute_cmd = app.add_subcommand("compute", "Compute an inverse, projector or index");
  compute_cmd->add_option("kind", compute_kind, "mp | group | core | projector | index")
      ->required()
      ->check(CLI::IsMember({"mp", "group", "core", "projector", "index"}));
  compute_cmd->add_option("file", compute_file, "Matrix file")->required();
  std::string output_path;
  compute_cmd->add_option("-o,--output", output_path, "Write the resulting matrix to this file");

  std::string t_file;
  std::string dt_file;
  auto* perturb_cmd = app.add_subcommand("perturb", "Analyze B = (I + T^core dT)^-1 T^core for T + dT");
  perturb_cmd->add_option("t_file", t_file, "Matrix file for T")->required();
  perturb_cmd->add_option("dt_file", dt_file, "Matrix file for dT")->required();
  perturb_cmd->add_option("--report", report_path, "Also write the JSON report to this path");

  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate inverse");
  verify_cmd->require_subcommand(1);
  std::string theta_text;
  std::string s_file;
  auto* verify_theta_cmd = verify_cmd->add_subcommand("theta", "Check the equations in SET");
  verify_theta_cmd->add_option("set", theta_text, "e.g. 1,3,7 or core_matrix")->required();
  verify_theta_cmd->add_option("t_file", t_file)->required();
  verify_theta_cmd->add_option("s_file", s_file)->required();
  auto* verify_core_cmd = verify_cmd->add_subcommand("core", "Check every core-inverse characterization");
  verify_core_cmd->add_option("t_file", t_file)->required();
  verify_core_cmd->add_option("s_file", s_file)->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Re-derive the built-in 4x4 reference cases");

  FuzzArgs fuzz_args;
  std::size_t fuzz_rank = 0;
  std::uint64_t replay_seed = 0;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized search for counterexamples");
  fuzz_cmd->add_option("kind", fuzz_args.kind,
                       "theorem_2_1 | theorem_2_2 | remark_2_1 | characterizations | corollary_bounds")
      ->required();
  fuzz_cmd->add_option("--trials", fuzz_args.trials, "Number of trials")->capture_default_str();
  fuzz_cmd->add_option("--dim", fuzz_args.cfg.dim, "Matrix size (upper bound unless --rank is given)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  auto* rank_opt = fuzz_cmd->add_option("--rank", fuzz_rank, "Fixed rank; random per trial when omitted");
  fuzz_cmd->add_option("--seed", fuzz_args.cfg.seed, "Campaign seed")->capture_default_str();
  fuzz_cmd->add_option("--entry-bound", fuzz_args.cfg.entry_bound, "Bound on numerators and denominators")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--threads", fuzz_args.threads, "Worker threads")->capture_default_str();
  fuzz_cmd->add_flag("--complex", fuzz_args.cfg.complex_entries, "Draw Gaussian-rational entries");
  auto* replay_opt = fuzz_cmd->add_option("--replay", replay_seed, "Re-run the single trial with this sub-seed");

  std::size_t witness_trials = 200;
  std::uint64_t witness_seed = 0;
  auto* witness_cmd = app.add_subcommand(
      "witnesses", "Show that keeping null space and rank does not preserve the expression");
  witness_cmd->add_option("--trials", witness_trials)->capture_default_str();
  witness_cmd->add_option("--seed", witness_seed)->capture_default_str();

  std::vector<std::string> echo;
  for (int i = 0; i < argc; ++i) echo.emplace_back(argv[i]);
  std::string command;
  for (std::size_t i = 1; i < echo.size(); ++i) command += (i > 1 ? " " : "") + echo[i];

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    Report r;
    r.command = command;
    r.message(std::string("usage error: ") + e.what());
    r.exit_status = kExitError;
    err << r.to_text();
    return kExitError;
  }

  Report report;
  try {
    if (compute_cmd->parsed()) {
      report = compute(compute_kind, load_matrix(compute_file));
      if (!output_path.empty() && !report.matrices.empty()) {
        std::ofstream file(output_path);
        if (!file) throw Error("cannot write matrix to '" + output_path + "'");
        file << serialize(report.matrices.front().second);
      }
    } else if (perturb_cmd->parsed()) {
      report = perturb(load_matrix(t_file), load_matrix(dt_file));
    } else if (verify_theta_cmd->parsed()) {
      report = verify_theta(theta_text, load_matrix(t_file), load_matrix(s_file));
    } else if (verify_core_cmd->parsed()) {
      report = verify_core(load_matrix(t_file), load_matrix(s_file));
    } else if (fixtures_cmd->parsed()) {
      report = fixtures();
    } else if (fuzz_cmd->parsed()) {
      if (*rank_opt) fuzz_args.cfg.rank = fuzz_rank;
      if (*replay_opt) fuzz_args.replay = replay_seed;
      fuzz_args.cfg.validate();
      report = fuzz(fuzz_args);
    } else if (witness_cmd->parsed()) {
      report = witnesses(witness_trials, witness_seed);
    }
  } catch (const IndexError& e) {
    report = {};
    report.message(e.what());
    report.exit_status = kExitNonexistent;
  } catch (const SingularMatrixError& e) {
    report = {};
    report.message(e.what());
    report.exit_status = kExitNonexistent;
  } catch (const TheoremFalsificationError& e) {
    report = {};
    report.message(std::string("FALSIFICATION: ") + e.what());
    report.exit_status = kExitRejected;
  } catch (const std::exception& e) {
    report = {};
    report.message(std::string("error: ") + e.what());
    report.exit_status = kExitError;
  }
  report.command = command;

  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) {
      err << "cannot write report to '" << report_path << "'\n";
      report.message("cannot write report to '" + report_path + "'");
      report.exit_status = kExitError;
    } else {
      file << report.to_json().dump(2) << '\n';
    }
  }
  if (json) {
    out << report.to_json().dump(2) << '\n';
  } else {
    out << report.to_text();
  }
  return report.exit_status;
}

}  // namespace ginv::cli
