#include "framekit/naimark.hpp"

#include <cmath>
#include <sstream>

#include "framekit/subspace.hpp"

namespace framekit {

namespace {

constexpr double kParsevalInput = 1e-8;
constexpr double kEigenOneTol = 1e-6;
constexpr double kTransferSlack = 1e-9;
constexpr double kChainSlack = 1e-8;

}  // namespace

Frame naimark_complement(const Frame& f) {
  const double eps = defects(f).parseval_eps;
  if (eps > kParsevalInput) {
    std::ostringstream os;
    os << "naimark_complement: frame is not Parseval (parseval defect " << eps
       << ")";
    throw PreconditionError(os.str());
  }
  const Eigen::Index n = f.size();
  const Eigen::Index k = n - f.dim();
  if (k == 0)
    throw PreconditionError(
        "naimark_complement: N == M, complement has dimension zero");

  const HermEig eig = herm_eig(Mat::Identity(n, n) - gram(f));
  for (Eigen::Index j = 0; j < k; ++j)
    if (std::abs(eig.eigenvalues(j) - 1.0) > kEigenOneTol) {
      std::ostringstream os;
      os << "naimark_complement: I - P has eigenvalue " << eig.eigenvalues(j)
         << " where 1 was expected";
      throw PreconditionError(os.str());
    }
  return Frame(eig.eigenvectors.leftCols(k).adjoint());
}

std::string_view to_string(NaimarkBranch branch) {
  return branch == NaimarkBranch::kOriginal ? "original" : "complemented";
}

ReducedFrame reduce_to_small(const Frame& f) {
  if (f.size() <= 2 * f.dim()) return {f, NaimarkBranch::kOriginal};
  return {naimark_complement(f), NaimarkBranch::kComplemented};
}

NaimarkReport naimark_reduction_check(const Frame& f, const SolverConfig& cfg) {
  const Frame comp = naimark_complement(f);
  const Eigen::Index n = f.size();
  const double m = static_cast<double>(f.dim());

  NaimarkReport out;
  out.input_equal_norm_eps = defects(f).equal_norm_eps;
  out.complement_equal_norm_eps = defects(comp).equal_norm_eps;
  out.transfer_bound =
      out.input_equal_norm_eps * m / (static_cast<double>(n) - m);
  out.transfer_holds =
      out.complement_equal_norm_eps <= out.transfer_bound + kTransferSlack;
  out.gram_identity_residual =
      (gram(f) + gram(comp) - Mat::Identity(n, n)).norm();

  const PaulsenInstance inst = nearest_equal_norm_parseval(comp, cfg);
  if (!inst.converged)
    throw ConvergenceError(
        "naimark_reduction_check: solver did not converge on the complement");
  out.complement_distance = inst.distance;
  out.iterations = inst.iterations;

  const Projection q(Mat::Identity(n, n) - gram(inst.solution));
  const Frame lifted = frame_lift(f, q);
  out.projection_distance = (gram(f) - q.matrix()).squaredNorm();
  out.lifted_distance = frame_distance(f, lifted);
  out.ratio = safe_ratio(out.lifted_distance, out.complement_distance);
  out.lifted_equal_norm_eps = defects(lifted).equal_norm_eps;
  out.holds =
      out.lifted_distance <= 8.0 * out.complement_distance + kChainSlack;
  return out;
}

}  // namespace framekit
