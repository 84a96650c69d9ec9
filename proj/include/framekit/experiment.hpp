#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "framekit/json_io.hpp"
#include "framekit/naimark.hpp"
#include "framekit/paulsen.hpp"

namespace framekit {

/// Grid of (M, N, eps) cells, each run for `trials` seeded instances.
struct ExperimentConfig {
  std::vector<int> dims;
  std::vector<int> counts;
  std::vector<double> eps;
  int trials = 1;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  int max_iterations = 10000;
  std::string output;

  /// Throws InputError when the grid is empty, an eps lies outside (0, 1),
  /// trials < 1, or no (M, N) pair has N >= M.
  void validate() const;
};

/// Reads the JSON config: {"M": [...], "N": [...], "eps": [...],
/// "trials": int, "seed": int, "tolerance": real (optional),
/// "max_iterations": int (optional), "output": path (optional)}.
ExperimentConfig experiment_config_from_json(const json& j);

struct Cell {
  int dim;
  int count;
  double eps;
};

/// Cells with N >= M in (M, N, eps) lexicographic order of the config lists.
std::vector<Cell> experiment_cells(const ExperimentConfig& cfg);

/// Per-trial seed as a hash of (master seed, M, N, eps, trial index).
std::uint64_t trial_seed(std::uint64_t master, const Cell& cell, int trial);

struct ExperimentRow {
  int dim = 0;
  int count = 0;
  double eps = 0.0;  // nominal cell eps
  std::uint64_t seed = 0;
  bool converged = false;
  int iterations = 0;
  double distance = 0.0;
  double bound_16eM = 0.0;  // 16 * measured eps * M
  double ratio = 0.0;  // distance / bound_16eM
  double chain4 = 0.0;
  double chain2 = 0.0;
  double chain8 = 0.0;
  NaimarkBranch naimark_branch = NaimarkBranch::kOriginal;
};

/// Factor-4 and factor-2 chain ratios for the canonical Parseval frame of f.
struct ChainRatios {
  double chain4 = 0.0;
  double chain2 = 0.0;
  bool converged = false;
};

ChainRatios evaluate_chains(const Frame& f, const SolverConfig& cfg);

/// One trial: perturb the harmonic frame of the cell, solve it, and run the
/// frame/projection chains and the Naimark reduction on its canonical
/// Parseval frame.
ExperimentRow run_trial(const Cell& cell, std::uint64_t seed,
                        const SolverConfig& cfg);

/// All trials, executed on up to `jobs` threads; rows are returned in
/// (cell, trial) order regardless of completion order.
std::vector<ExperimentRow> run_sweep(const ExperimentConfig& cfg, int jobs);

struct CellSummary {
  Cell cell;
  int trials = 0;
  int converged = 0;
  double max_distance_over_eps_m = 0.0;
  double max_ratio_16eM = 0.0;
  int violations_16eM = 0;
};

std::vector<CellSummary> summarize(const std::vector<ExperimentRow>& rows);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
void write_summary_csv(std::ostream& out,
                       const std::vector<CellSummary>& summary);

}  // namespace framekit
