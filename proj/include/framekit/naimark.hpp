#pragma once

#include <string_view>

#include "framekit/frame.hpp"
#include "framekit/paulsen.hpp"

namespace framekit {

/// Parseval frame {(I - P) e_i} in C^{N-M}, where P = gram(f). Coordinates
/// are taken in an eigenbasis of I - P; only Gram-level properties are fixed.
/// Throws PreconditionError if f is not Parseval within 1e-8 or N == M.
Frame naimark_complement(const Frame& f);

enum class NaimarkBranch { kOriginal, kComplemented };

std::string_view to_string(NaimarkBranch branch);

struct ReducedFrame {
  Frame frame;
  NaimarkBranch branch;
};

/// F itself when N <= 2M, otherwise its Naimark complement; either way the
/// result has N <= 2 * dim.
ReducedFrame reduce_to_small(const Frame& f);

struct NaimarkReport {
  double input_equal_norm_eps = 0.0;
  double complement_equal_norm_eps = 0.0;
  double transfer_bound = 0.0;  // eps * M / (N - M)
  double complement_distance = 0.0;  // solver distance on the complement
  double projection_distance = 0.0;  // d(P, Q)
  double lifted_distance = 0.0;  // d(F, K)
  double ratio = 0.0;  // lifted_distance / complement_distance
  double lifted_equal_norm_eps = 0.0;
  double gram_identity_residual = 0.0;  // ||gram(F) + gram(comp) - I||_HS
  int iterations = 0;
  bool transfer_holds = false;
  bool holds = false;
};

/// Solve the Paulsen instance on the Naimark complement, map the solution
/// back through Q = I - gram(solution) and lift F against Q; checks
/// d(F, K) <= 8 * complement distance.
NaimarkReport naimark_reduction_check(const Frame& f, const SolverConfig& cfg);

}  // namespace framekit
