#include "framekit/paulsen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "framekit/random.hpp"

namespace framekit {

namespace {

constexpr double kZeroVector = 1e-14;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kParsevalInput = 1e-8;
constexpr double kChainSlack = 1e-8;
constexpr int kParsevalRetries = 5;
constexpr int kBisectionSteps = 40;

double combined_defect(const Mat& synth, const RealVec& targets) {
  double worst = parseval_defect(synth * synth.adjoint());
  for (Eigen::Index i = 0; i < synth.cols(); ++i)
    worst = std::max(worst,
                     std::abs(synth.col(i).squaredNorm() / targets(i) - 1.0));
  return worst;
}

std::optional<Frame> try_frame(Mat synth) {
  try {
    return Frame(std::move(synth));
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

void require_parseval_input(const Frame& f, const char* op) {
  const double eps = defects(f).parseval_eps;
  if (eps > kParsevalInput) {
    std::ostringstream os;
    os << op << ": input frame is not Parseval (parseval defect " << eps << ")";
    throw PreconditionError(os.str());
  }
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tolerance > 0.0))
    throw PreconditionError("solver: tolerance must be positive");
  if (max_iterations < 1)
    throw PreconditionError("solver: max_iterations must be at least 1");
}

double safe_ratio(double numerator, double denominator) {
  if (denominator > 0.0) return numerator / denominator;
  return 0.0;
}

Frame harmonic_frame(Eigen::Index dim, Eigen::Index count) {
  if (dim < 1 || count < dim) {
    std::ostringstream os;
    os << "harmonic_frame: need 1 <= M <= N, got M=" << dim << " N=" << count;
    throw PreconditionError(os.str());
  }
  Mat synth(dim, count);
  const double scale = 1.0 / std::sqrt(static_cast<double>(count));
  for (Eigen::Index i = 0; i < count; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) {
      // Reduce i*j mod N before the trig call so large products stay exact.
      const double phase = 2.0 * std::numbers::pi *
                           static_cast<double>((i * j) % count) /
                           static_cast<double>(count);
      synth(j, i) = std::polar(scale, phase);
    }
  return Frame(std::move(synth));
}

Frame random_parseval(Eigen::Index dim, Eigen::Index count,
                      std::uint64_t seed) {
  if (dim < 1 || count < dim)
    throw PreconditionError("random_parseval: need 1 <= M <= N");
  for (int attempt = 0; attempt < kParsevalRetries; ++attempt) {
    Rng rng(derive_seed({seed, static_cast<std::uint64_t>(attempt)}));
    if (auto f = try_frame(gaussian_matrix(dim, count, rng)))
      return canonical_parseval(*f);
  }
  throw Error("random_parseval: Gaussian draws were rank deficient");
}

Projection random_projection(Eigen::Index dim, Eigen::Index count,
                             std::uint64_t seed) {
  return Projection(gram(random_parseval(dim, count, seed)));
}

Frame perturb(const Frame& f, double eps, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0))
    throw PreconditionError("perturb: eps must lie in (0, 1)");
  if (defects(f).max() > 1e-9)
    throw PreconditionError("perturb: base frame is not equal-norm Parseval");

  Rng rng(seed);
  Mat direction = gaussian_matrix(f.dim(), f.size(), rng);
  direction *= f.synthesis().norm() / direction.norm();

  auto feasible = [&](double amplitude) {
    auto g = try_frame(f.synthesis() + amplitude * direction);
    return g && defects(*g).max() <= eps;
  };

  double lo = 0.0;
  double hi = 1.0;
  while (feasible(hi) && hi < 1e6) {
    lo = hi;
    hi *= 2.0;
  }
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      lo = mid;
    else
      hi = mid;
  }
  return Frame(f.synthesis() + lo * direction);
}

PaulsenInstance solve_prescribed_norms(const Frame& f,
                                       const RealVec& target_sq_norms,
                                       const SolverConfig& cfg) {
  cfg.validate();
  if (target_sq_norms.size() != f.size())
    throw DimensionError("solver: one target norm per frame vector required");
  if ((target_sq_norms.array() <= 0.0).any())
    throw PreconditionError("solver: target norms must be positive");

  const RealVec target_norms = target_sq_norms.cwiseSqrt();
  PaulsenInstance out{f, defects(f), f};
  out.eps = out.defects.max();
  out.bound_16eM = 16.0 * out.eps * static_cast<double>(f.dim());
  out.seed = cfg.seed;

  Mat x = f.synthesis();
  double prev = combined_defect(x, target_sq_norms);
  Mat best = x;
  double best_defect = prev;

  if (prev <= cfg.tolerance) {
    out.converged = true;
    out.distance = 0.0;
    return out;
  }

  for (int k = 1; k <= cfg.max_iterations; ++k) {
    x = inv_sqrt_psd(x * x.adjoint()) * x;
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      double n = x.col(i).norm();
      if (n < kZeroVector) {
        x.col(i).setZero();
        x(0, i) = 1.0;
        n = 1.0;
        out.degenerate = true;
      }
      x.col(i) *= target_norms(i) / n;
    }
    const double current = combined_defect(x, target_sq_norms);
    if (current > prev + kMonotoneSlack) out.monotone = false;
    prev = current;
    out.iterations = k;
    if (current < best_defect) {
      best_defect = current;
      best = x;
    }
    if (current <= cfg.tolerance) {
      out.converged = out.monotone;
      break;
    }
  }

  out.solution = Frame(best);
  out.distance = frame_distance(f, out.solution);
  return out;
}

PaulsenInstance nearest_equal_norm_parseval(const Frame& f,
                                            const SolverConfig& cfg) {
  const double target =
      static_cast<double>(f.dim()) / static_cast<double>(f.size());
  return solve_prescribed_norms(f, RealVec::Constant(f.size(), target), cfg);
}

FrameToProjectionReport equivalence_chain_frame_to_projection(
    const Frame& f, const SolverConfig& cfg) {
  require_parseval_input(f, "equivalence_chain_frame_to_projection");
  const PaulsenInstance inst = nearest_equal_norm_parseval(f, cfg);
  if (!inst.converged)
    throw ConvergenceError(
        "equivalence_chain_frame_to_projection: solver did not converge");

  const Projection q(gram(inst.solution));
  const Mat p = gram(f);
  FrameToProjectionReport out;
  out.frame_distance = inst.distance;
  out.projection_distance = (p - q.matrix()).squaredNorm();
  out.ratio = safe_ratio(out.projection_distance, out.frame_distance);
  out.iterations = inst.iterations;
  const double target =
      static_cast<double>(f.dim()) / static_cast<double>(f.size());
  for (Eigen::Index i = 0; i < q.size(); ++i)
    out.q_diagonal_error = std::max(
        out.q_diagonal_error, std::abs(q.matrix()(i, i).real() - target));
  out.holds = out.q_diagonal_error <= kChainSlack &&
              out.projection_distance <= 4.0 * out.frame_distance + kChainSlack;
  return out;
}

ProjectionToFrameReport lift_against_solution(const Frame& parseval_frame,
                                              const Frame& solution) {
  const Projection q(gram(solution));
  const Projection p(gram(parseval_frame));
  const Frame lifted = frame_lift(parseval_frame, q);

  ProjectionToFrameReport out;
  out.projection_distance = proj_distance(p, q);
  out.lifted_distance = frame_distance(parseval_frame, lifted);
  out.ratio = safe_ratio(out.lifted_distance, out.projection_distance);
  out.lifted_equal_norm_eps = defects(lifted).equal_norm_eps;
  out.lifted_gram_residual = (gram(lifted) - q.matrix()).norm();
  out.holds = out.lifted_distance <= 2.0 * out.projection_distance + kChainSlack;
  return out;
}

ProjectionToFrameReport equivalence_chain_projection_to_frame(
    const Projection& p, const SolverConfig& cfg) {
  if (!(diagonal_defect(p) < 1.0))
    throw PreconditionError(
        "equivalence_chain_projection_to_frame: diagonal defect must be < 1");
  const Frame f = frame_from_projection(p);
  const double extraction = (gram(f) - p.matrix()).norm();

  const PaulsenInstance inst = nearest_equal_norm_parseval(f, cfg);
  if (!inst.converged)
    throw ConvergenceError(
        "equivalence_chain_projection_to_frame: solver did not converge");

  ProjectionToFrameReport out = lift_against_solution(f, inst.solution);
  out.extraction_residual = extraction;
  out.iterations = inst.iterations;
  return out;
}

}  // namespace framekit
