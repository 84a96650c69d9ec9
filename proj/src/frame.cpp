#include "framekit/frame.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace framekit {

namespace {

// Relative floor for the lower frame bound; below it the vectors are treated
// as not spanning.
constexpr double kSpanTol = 1e-12;

void require_same_shape(const Frame& f, const Frame& g, const char* op) {
  if (f.dim() != g.dim() || f.size() != g.size()) {
    std::ostringstream os;
    os << op << ": frame shapes differ (" << f.dim() << "x" << f.size()
       << " vs " << g.dim() << "x" << g.size() << ")";
    throw DimensionError(os.str());
  }
}

}  // namespace

Frame::Frame(Mat synthesis) : synthesis_(std::move(synthesis)) {
  if (synthesis_.rows() == 0 || synthesis_.cols() == 0)
    throw DimensionError("frame: dimension and vector count must be positive");
  if (!all_finite(synthesis_))
    throw DimensionError("frame: vectors contain non-finite entries");
  if (synthesis_.cols() < synthesis_.rows()) {
    std::ostringstream os;
    os << "frame: " << synthesis_.cols() << " vectors cannot span C^"
       << synthesis_.rows();
    throw PreconditionError(os.str());
  }
  const HermEig eig = herm_eig(synthesis_ * synthesis_.adjoint());
  const double lmax = eig.eigenvalues(0);
  const double lmin = eig.eigenvalues(eig.eigenvalues.size() - 1);
  if (!(lmin > kSpanTol * std::max(1.0, lmax))) {
    std::ostringstream os;
    os << "frame: vectors do not span C^" << synthesis_.rows()
       << " (lower frame bound " << lmin << ")";
    throw PreconditionError(os.str());
  }
}

Frame Frame::from_vectors(const std::vector<Vec>& vectors) {
  if (vectors.empty()) throw DimensionError("frame: no vectors");
  const Eigen::Index m = vectors.front().size();
  Mat synth(m, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != m)
      throw DimensionError("frame: vectors have differing lengths");
    synth.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  return Frame(std::move(synth));
}

Mat analysis_matrix(const Frame& f) { return f.synthesis().adjoint(); }

Mat frame_operator(const Frame& f) {
  return symmetrize(f.synthesis() * f.synthesis().adjoint());
}

FrameBounds frame_bounds(const Frame& f) {
  const HermEig eig = herm_eig(frame_operator(f));
  return {eig.eigenvalues(eig.eigenvalues.size() - 1), eig.eigenvalues(0)};
}

double parseval_defect(const Mat& frame_op) {
  const HermEig eig = herm_eig(frame_op);
  const double lmax = eig.eigenvalues(0);
  const double lmin = eig.eigenvalues(eig.eigenvalues.size() - 1);
  return std::max({0.0, 1.0 - lmin, lmax - 1.0});
}

RealVec squared_norms(const Frame& f) {
  return f.synthesis().colwise().squaredNorm().transpose();
}

double norm_defect(const Frame& f, const RealVec& target_sq_norms) {
  if (target_sq_norms.size() != f.size())
    throw DimensionError("norm_defect: target count differs from frame size");
  const RealVec norms = squared_norms(f);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < norms.size(); ++i)
    worst = std::max(worst, std::abs(norms(i) / target_sq_norms(i) - 1.0));
  return worst;
}

FrameDefects defects(const Frame& f) {
  FrameDefects out;
  out.parseval_eps = parseval_defect(frame_operator(f));
  const double scale =
      static_cast<double>(f.size()) / static_cast<double>(f.dim());
  const RealVec norms = squared_norms(f);
  for (Eigen::Index i = 0; i < norms.size(); ++i)
    out.equal_norm_eps =
        std::max(out.equal_norm_eps, std::abs(scale * norms(i) - 1.0));
  return out;
}

Frame canonical_parseval(const Frame& f) {
  return Frame(inv_sqrt_psd(frame_operator(f)) * f.synthesis());
}

double frame_distance(const Frame& f, const Frame& g) {
  require_same_shape(f, g, "frame_distance");
  return (f.synthesis() - g.synthesis()).squaredNorm();
}

double frame_potential(const Frame& f) {
  return frame_operator(f).squaredNorm();
}

Mat gram(const Frame& f) {
  return symmetrize(f.synthesis().adjoint() * f.synthesis());
}

double canonical_distance_bound(double eps, Eigen::Index dim) {
  return static_cast<double>(dim) * (2.0 - eps - 2.0 * std::sqrt(1.0 - eps));
}

std::pair<double, double> canonical_norm_bounds(double eps, Eigen::Index dim,
                                                Eigen::Index count) {
  const double ratio = static_cast<double>(dim) / static_cast<double>(count);
  return {(1.0 - eps) * (1.0 - eps) / (1.0 + eps) * ratio,
          (1.0 + eps) * (1.0 + eps) / (1.0 - eps) * ratio};
}

}  // namespace framekit
