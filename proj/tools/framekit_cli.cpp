// framekit: command-line front end for frame checks, Paulsen solves,
// seeded sweeps and property suites.
//
// Exit codes: 0 success, 1 property failure (verify), 2 input error,
// 3 solver non-convergence, 4 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "framekit/admissible.hpp"
#include "framekit/experiment.hpp"
#include "framekit/json_io.hpp"
#include "framekit/naimark.hpp"
#include "framekit/paulsen.hpp"
#include "framekit/verify.hpp"

namespace {

using namespace framekit;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitIo = 4;

struct Options {
  std::string input;
  double tol = 1e-10;
  int max_iter = 10000;
  std::uint64_t seed = 0;
  int trials = 200;
  int jobs = 1;
  std::string out;
  std::string suite = "geometry";
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing " + path);
}

SolverConfig solver_config(const Options& o) {
  SolverConfig cfg;
  cfg.tolerance = o.tol;
  cfg.max_iterations = o.max_iter;
  cfg.seed = o.seed;
  cfg.validate();
  return cfg;
}

int cmd_check(const Options& o) {
  const Frame f = frame_from_json(read_json_file(o.input));
  const FrameBounds b = frame_bounds(f);
  const FrameDefects d = defects(f);
  // Verdict threshold for "is Parseval / equal-norm".
  const double tol = 1e-9;
  std::cout << "M = " << f.dim() << "\n"
            << "N = " << f.size() << "\n"
            << "lower frame bound = " << format_double(b.lower) << "\n"
            << "upper frame bound = " << format_double(b.upper) << "\n"
            << "parseval_eps = " << format_double(d.parseval_eps) << "\n"
            << "equal_norm_eps = " << format_double(d.equal_norm_eps) << "\n"
            << "parseval: " << (d.parseval_eps <= tol ? "yes" : "no") << "\n"
            << "equal-norm: " << (d.equal_norm_eps <= tol ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_solve(const Options& o) {
  const Frame f = frame_from_json(read_json_file(o.input));
  const SolverConfig cfg = solver_config(o);
  const PaulsenInstance inst = nearest_equal_norm_parseval(f, cfg);
  const ChainRatios chains = evaluate_chains(f, cfg);
  std::cout << instance_report_json(inst, chains.chain4, chains.chain2).dump(2) << "\n";
  if (!o.out.empty()) write_text(o.out, frame_to_json(inst.solution).dump(2) + "\n");
  return inst.converged ? kExitOk : kExitNotConverged;
}

int cmd_sweep(const Options& o) {
  ExperimentConfig cfg = experiment_config_from_json(read_json_file(o.input));
  if (!o.out.empty()) cfg.output = o.out;
  const std::vector<ExperimentRow> rows = run_sweep(cfg, o.jobs);
  const std::vector<CellSummary> summary = summarize(rows);

  std::ostringstream csv;
  write_rows_csv(csv, rows);
  std::ostringstream sum;
  write_summary_csv(sum, summary);

  if (cfg.output.empty()) {
    std::cout << csv.str();
  } else {
    write_text(cfg.output, csv.str());
    write_text(cfg.output + ".summary.csv", sum.str());
  }
  std::cerr << sum.str();
  for (const CellSummary& s : summary)
    if (s.violations_16eM > 0)
      std::cerr << "note: cell M=" << s.cell.dim << " N=" << s.cell.count
                << " eps=" << format_double(s.cell.eps) << " has "
                << s.violations_16eM << " trial(s) with distance > 16 eps M\n";
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const std::vector<PropertyResult> results = run_suite(o.suite, o.seed, o.trials);
  bool all = true;
  for (const PropertyResult& r : results) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": worst "
              << format_double(r.worst) << " (limit " << format_double(r.limit) << ", "
              << r.trials << " trials)\n";
  }
  return all ? kExitOk : kExitPropertyFailure;
}

int cmd_naimark(const Options& o) {
  const Frame f = frame_from_json(read_json_file(o.input));
  json out;
  try {
    out["complement"] = frame_to_json(naimark_complement(f));
    out["branch"] = std::string(to_string(reduce_to_small(f).branch));
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
  int code = kExitOk;
  try {
    const NaimarkReport r = naimark_reduction_check(f, solver_config(o));
    out["check"] = {{"complement_distance", r.complement_distance},
                    {"lifted_distance", r.lifted_distance},
                    {"ratio", r.ratio},
                    {"holds", r.holds},
                    {"equal_norm_eps", r.input_equal_norm_eps},
                    {"complement_equal_norm_eps", r.complement_equal_norm_eps},
                    {"transfer_bound", r.transfer_bound},
                    {"transfer_holds", r.transfer_holds}};
  } catch (const ConvergenceError& e) {
    out["check"] = nullptr;
    std::cerr << e.what() << "\n";
    code = kExitNotConverged;
  }
  std::cout << out.dump(2) << "\n";
  return code;
}

int cmd_admissible(const Options& o) {
  const AdmissibilityQuery q = admissibility_query_from_json(read_json_file(o.input));
  Verdict v;
  try {
    v = q.spectrum ? is_S_admissible(q.sequence, *q.spectrum)
                   : is_parseval_admissible(q.sequence);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
  std::cout << verdict_to_json(v).dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frame toolkit: Parseval frames, principal angles, Paulsen solves"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Print frame bounds and defects");
  check->add_option("frame", o.input, "Frame JSON file")->required();

  auto* solve = app.add_subcommand("solve", "Nearest equal-norm Parseval frame");
  solve->add_option("frame", o.input, "Frame JSON file")->required();

  auto* sweep = app.add_subcommand("sweep", "Seeded batch experiment to CSV");
  sweep->add_option("config", o.input, "Experiment config JSON file")->required();
  sweep->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", o.suite, "geometry | equivalence | naimark | admissible")
      ->check(CLI::IsMember({"geometry", "equivalence", "naimark", "admissible"}));
  verify->add_option("--trials", o.trials, "Seeded trials")->check(CLI::PositiveNumber);

  auto* naimark = app.add_subcommand("naimark", "Naimark complement and reduction check");
  naimark->add_option("frame", o.input, "Parseval frame JSON file")->required();

  auto* admissible = app.add_subcommand("admissible", "Norm-sequence admissibility test");
  admissible->add_option("query", o.input, "Admissibility query JSON file")->required();

  for (auto* sub : {solve, naimark}) {
    sub->add_option("--tol", o.tol, "Solver tolerance");
    sub->add_option("--max-iter", o.max_iter, "Solver iteration cap");
  }
  for (auto* sub : {solve, verify, naimark}) sub->add_option("--seed", o.seed, "Seed");
  for (auto* sub : {solve, sweep}) sub->add_option("--out", o.out, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*check) return cmd_check(o);
    if (*solve) return cmd_solve(o);
    if (*sweep) return cmd_sweep(o);
    if (*verify) return cmd_verify(o);
    if (*naimark) return cmd_naimark(o);
    if (*admissible) return cmd_admissible(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
