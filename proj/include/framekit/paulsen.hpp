#pragma once

#include <cstdint>

#include "framekit/frame.hpp"
#include "framekit/subspace.hpp"

namespace framekit {

struct SolverConfig {
  double tolerance = 1e-10;
  int max_iterations = 10000;
  std::uint64_t seed = 0;

  /// Throws PreconditionError unless tolerance > 0 and max_iterations >= 1.
  void validate() const;
};

/// Thrown by the chain drivers when the inner solve does not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// One solved instance of the nearest equal-norm (or prescribed-norm)
/// Parseval frame problem.
struct PaulsenInstance {
  Frame input;
  FrameDefects defects;
  Frame solution;  // best iterate when not converged
  double eps = 0.0;  // max of the two input defects
  double distance = 0.0;
  int iterations = 0;
  bool converged = false;
  bool degenerate = false;  // a zero vector was replaced during rescaling
  bool monotone = true;  // combined defect never increased between iterations
  double bound_16eM = 0.0;
  std::uint64_t seed = 0;
};

/// Harmonic frame f_i = N^{-1/2} (w^{i j})_{j < M}, w = exp(2 pi i / N).
/// Equal-norm Parseval. Throws PreconditionError unless 1 <= M <= N.
Frame harmonic_frame(Eigen::Index dim, Eigen::Index count);

/// Canonical Parseval frame of a seeded complex Gaussian vector list.
Frame random_parseval(Eigen::Index dim, Eigen::Index count, std::uint64_t seed);

/// Gram matrix of random_parseval: a random rank-M projection on C^N.
Projection random_projection(Eigen::Index dim, Eigen::Index count,
                             std::uint64_t seed);

/// Random additive perturbation of an equal-norm Parseval frame, scaled by
/// bisection (40 steps) to the largest amplitude whose defects stay <= eps.
Frame perturb(const Frame& f, double eps, std::uint64_t seed);

/// Alternating projections between the Parseval frames (canonical Parseval
/// step) and the frames with |g_i|^2 = target_sq_norms(i) (rescaling step).
PaulsenInstance solve_prescribed_norms(const Frame& f,
                                       const RealVec& target_sq_norms,
                                       const SolverConfig& cfg);

/// Nearest equal-norm Parseval frame, all targets M/N.
PaulsenInstance nearest_equal_norm_parseval(const Frame& f,
                                            const SolverConfig& cfg);

/// Frame side of the frame/projection equivalence: solve F (distance
/// delta_frame), take Q = gram(solution) and compare d(gram F, Q) with
/// 4 delta_frame.
struct FrameToProjectionReport {
  double frame_distance = 0.0;
  double projection_distance = 0.0;
  double ratio = 0.0;  // projection_distance / frame_distance, 0 if both vanish
  double q_diagonal_error = 0.0;  // max_i |Q_ii - M/N|
  int iterations = 0;
  bool holds = false;
};

FrameToProjectionReport equivalence_chain_frame_to_projection(
    const Frame& f, const SolverConfig& cfg);

/// Projection side: extract F with gram(F) = P, find a constant-diagonal Q
/// via the frame solver, lift F against Q and compare d(F, lift) with
/// 2 d(P, Q).
struct ProjectionToFrameReport {
  double extraction_residual = 0.0;  // ||gram(F) - P||_HS
  double projection_distance = 0.0;
  double lifted_distance = 0.0;
  double ratio = 0.0;  // lifted_distance / projection_distance
  double lifted_equal_norm_eps = 0.0;
  double lifted_gram_residual = 0.0;  // ||gram(lift) - Q||_HS
  int iterations = 0;
  bool holds = false;
};

ProjectionToFrameReport equivalence_chain_projection_to_frame(
    const Projection& p, const SolverConfig& cfg);

/// Factor-2 comparison for a Parseval frame and an already solved
/// equal-norm Parseval frame: Q = gram(solution), lift F against Q.
ProjectionToFrameReport lift_against_solution(const Frame& parseval_frame,
                                              const Frame& solution);

/// Ratio a / b with the 0/0 case mapped to 0.
double safe_ratio(double numerator, double denominator);

}  // namespace framekit
