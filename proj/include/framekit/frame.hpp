#pragma once

#include <utility>
#include <vector>

#include "framekit/numerics.hpp"

namespace framekit {

/// A finite frame: N vectors spanning C^M, stored as the columns of an
/// M x N synthesis matrix. Construction rejects vector lists that do not span.
class Frame {
 public:
  /// Columns are the frame vectors. Throws DimensionError on empty or
  /// non-finite input, PreconditionError if the vectors do not span C^M.
  explicit Frame(Mat synthesis);

  static Frame from_vectors(const std::vector<Vec>& vectors);

  Eigen::Index dim() const noexcept { return synthesis_.rows(); }
  Eigen::Index size() const noexcept { return synthesis_.cols(); }

  const Mat& synthesis() const noexcept { return synthesis_; }
  Vec vector(Eigen::Index i) const { return synthesis_.col(i); }

 private:
  Mat synthesis_;
};

/// Smallest epsilons with (1-e)I <= S <= (1+e)I and
/// (1-e)M/N <= |f_i|^2 <= (1+e)M/N.
struct FrameDefects {
  double parseval_eps = 0.0;
  double equal_norm_eps = 0.0;

  double max() const noexcept {
    return parseval_eps > equal_norm_eps ? parseval_eps : equal_norm_eps;
  }
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// N x M matrix T with (T f)_i = <f, f_i>; row i is f_i*.
Mat analysis_matrix(const Frame& f);

/// S = T*T, an M x M Hermitian positive-definite matrix.
Mat frame_operator(const Frame& f);

FrameBounds frame_bounds(const Frame& f);
FrameDefects defects(const Frame& f);

/// Equal-norm defect against arbitrary squared-norm targets:
/// max_i | |f_i|^2 / target_i - 1 |.
double norm_defect(const Frame& f, const RealVec& target_sq_norms);

double parseval_defect(const Mat& frame_op);

/// {S^{-1/2} f_i}, the closest Parseval frame to f.
Frame canonical_parseval(const Frame& f);

/// sum_i |f_i - g_i|^2. Throws DimensionError on shape mismatch.
double frame_distance(const Frame& f, const Frame& g);

/// sum_{i,j} |<f_i, f_j>|^2 = Tr S^2.
double frame_potential(const Frame& f);

/// N x N Gram matrix with entry (i, j) = <f_j, f_i>.
Mat gram(const Frame& f);

/// Squared norms |f_i|^2 in index order.
RealVec squared_norms(const Frame& f);

/// Upper bound M(2 - e - 2 sqrt(1 - e)) on the distance from an e-nearly
/// Parseval frame to its canonical Parseval frame.
double canonical_distance_bound(double eps, Eigen::Index dim);

/// Bounds (1-e)^2/(1+e) M/N and (1+e)^2/(1-e) M/N on the squared norms of
/// the canonical Parseval frame of an e-nearly equal-norm, e-nearly Parseval
/// frame.
std::pair<double, double> canonical_norm_bounds(double eps, Eigen::Index dim,
                                                Eigen::Index count);

}  // namespace framekit
