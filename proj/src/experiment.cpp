#include "framekit/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include "framekit/random.hpp"

namespace framekit {

namespace {

std::vector<int> int_list(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw InputError(std::string("config: missing field \"") + name + "\"");
  if (it->is_number_integer()) return {it->get<int>()};
  if (!it->is_array())
    throw InputError(std::string("config.") + name + ": expected an integer list");
  std::vector<int> out;
  for (const auto& v : *it) {
    if (!v.is_number_integer())
      throw InputError(std::string("config.") + name + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (dims.empty() || counts.empty() || eps.empty())
    throw InputError("config: M, N and eps lists must be nonempty");
  for (int m : dims)
    if (m < 1) throw InputError("config.M: dimensions must be positive");
  for (double e : eps)
    if (!(e > 0.0 && e < 1.0)) throw InputError("config.eps: values must lie in (0, 1)");
  if (trials < 1) throw InputError("config.trials: must be at least 1");
  if (!(tolerance > 0.0)) throw InputError("config.tolerance: must be positive");
  if (max_iterations < 1) throw InputError("config.max_iterations: must be at least 1");
  if (experiment_cells(*this).empty())
    throw InputError("config: no (M, N) pair satisfies N >= M");
}

ExperimentConfig experiment_config_from_json(const json& j) {
  if (!j.is_object()) throw InputError("config: expected a JSON object");
  ExperimentConfig cfg;
  cfg.dims = int_list(j, "M");
  cfg.counts = int_list(j, "N");
  auto eps = j.find("eps");
  if (eps == j.end()) throw InputError("config: missing field \"eps\"");
  if (eps->is_number()) {
    cfg.eps = {eps->get<double>()};
  } else if (eps->is_array()) {
    for (const auto& v : *eps) {
      if (!v.is_number()) throw InputError("config.eps: expected numbers");
      cfg.eps.push_back(v.get<double>());
    }
  } else {
    throw InputError("config.eps: expected a number list");
  }
  auto get_int = [&](const char* name, auto& dst) {
    if (auto it = j.find(name); it != j.end()) {
      if (!it->is_number_integer())
        throw InputError(std::string("config.") + name + ": expected an integer");
      dst = it->get<std::remove_reference_t<decltype(dst)>>();
    }
  };
  get_int("trials", cfg.trials);
  get_int("seed", cfg.seed);
  get_int("max_iterations", cfg.max_iterations);
  if (auto it = j.find("tolerance"); it != j.end()) {
    if (!it->is_number()) throw InputError("config.tolerance: expected a number");
    cfg.tolerance = it->get<double>();
  }
  if (auto it = j.find("output"); it != j.end()) {
    if (!it->is_string()) throw InputError("config.output: expected a string");
    cfg.output = it->get<std::string>();
  }
  cfg.validate();
  return cfg;
}

std::vector<Cell> experiment_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (int m : cfg.dims)
    for (int n : cfg.counts)
      if (n >= m && m >= 1)
        for (double e : cfg.eps) cells.push_back({m, n, e});
  return cells;
}

std::uint64_t trial_seed(std::uint64_t master, const Cell& cell, int trial) {
  return derive_seed({master, static_cast<std::uint64_t>(cell.dim),
                      static_cast<std::uint64_t>(cell.count),
                      std::bit_cast<std::uint64_t>(cell.eps),
                      static_cast<std::uint64_t>(trial)});
}

ChainRatios evaluate_chains(const Frame& f, const SolverConfig& cfg) {
  const Frame fp = canonical_parseval(f);
  const PaulsenInstance inst = nearest_equal_norm_parseval(fp, cfg);
  ChainRatios out;
  if (!inst.converged) return out;
  out.chain4 = safe_ratio((gram(fp) - gram(inst.solution)).squaredNorm(),
                          inst.distance);
  out.chain2 = lift_against_solution(fp, inst.solution).ratio;
  out.converged = true;
  return out;
}

ExperimentRow run_trial(const Cell& cell, std::uint64_t seed,
                        const SolverConfig& cfg) {
  SolverConfig local = cfg;
  local.seed = seed;
  const Frame f = perturb(harmonic_frame(cell.dim, cell.count), cell.eps, seed);
  const PaulsenInstance inst = nearest_equal_norm_parseval(f, local);

  ExperimentRow row;
  row.dim = cell.dim;
  row.count = cell.count;
  row.eps = cell.eps;
  row.seed = seed;
  row.iterations = inst.iterations;
  row.distance = inst.distance;
  row.bound_16eM = inst.bound_16eM;
  row.ratio = safe_ratio(inst.distance, inst.bound_16eM);

  const Frame fp = canonical_parseval(f);
  row.naimark_branch = reduce_to_small(fp).branch;
  const ChainRatios chains = evaluate_chains(f, local);
  row.chain4 = chains.chain4;
  row.chain2 = chains.chain2;

  bool chain8_ok = true;
  if (cell.count > cell.dim) {
    try {
      row.chain8 = naimark_reduction_check(fp, local).ratio;
    } catch (const ConvergenceError&) {
      chain8_ok = false;
    }
  }
  row.converged = inst.converged && chains.converged && chain8_ok;
  return row;
}

std::vector<ExperimentRow> run_sweep(const ExperimentConfig& cfg, int jobs) {
  cfg.validate();
  const std::vector<Cell> cells = experiment_cells(cfg);
  const std::size_t total = cells.size() * static_cast<std::size_t>(cfg.trials);
  SolverConfig solver;
  solver.tolerance = cfg.tolerance;
  solver.max_iterations = cfg.max_iterations;

  std::vector<ExperimentRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total || failed.load()) return;
      const Cell& cell = cells[idx / static_cast<std::size_t>(cfg.trials)];
      const int trial = static_cast<int>(idx % static_cast<std::size_t>(cfg.trials));
      try {
        rows[idx] = run_trial(cell, trial_seed(cfg.seed, cell, trial), solver);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };

  const int threads = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(total, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<CellSummary> summarize(const std::vector<ExperimentRow>& rows) {
  std::vector<CellSummary> out;
  for (const ExperimentRow& r : rows) {
    if (out.empty() || out.back().cell.dim != r.dim ||
        out.back().cell.count != r.count || out.back().cell.eps != r.eps)
      out.push_back({{r.dim, r.count, r.eps}});
    CellSummary& s = out.back();
    ++s.trials;
    if (r.converged) ++s.converged;
    s.max_distance_over_eps_m =
        std::max(s.max_distance_over_eps_m, r.distance / (r.eps * r.dim));
    s.max_ratio_16eM = std::max(s.max_ratio_16eM, r.ratio);
    if (r.ratio > 1.0) ++s.violations_16eM;
  }
  return out;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "M,N,eps,seed,converged,iterations,distance,bound_16eM,ratio,chain4,"
         "chain2,chain8,naimark_branch\n";
  for (const ExperimentRow& r : rows) {
    out << r.dim << ',' << r.count << ',' << format_double(r.eps) << ','
        << r.seed << ',' << (r.converged ? "true" : "false") << ','
        << r.iterations << ',' << format_double(r.distance) << ','
        << format_double(r.bound_16eM) << ',' << format_double(r.ratio) << ','
        << format_double(r.chain4) << ',' << format_double(r.chain2) << ','
        << format_double(r.chain8) << ',' << to_string(r.naimark_branch)
        << '\n';
  }
}

void write_summary_csv(std::ostream& out,
                       const std::vector<CellSummary>& summary) {
  out << "M,N,eps,trials,converged,max_distance_over_eps_M,max_ratio_16eM,"
         "violations_16eM\n";
  for (const CellSummary& s : summary) {
    out << s.cell.dim << ',' << s.cell.count << ',' << format_double(s.cell.eps)
        << ',' << s.trials << ',' << s.converged << ','
        << format_double(s.max_distance_over_eps_m) << ','
        << format_double(s.max_ratio_16eM) << ',' << s.violations_16eM << '\n';
  }
}

}  // namespace framekit
