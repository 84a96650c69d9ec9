#include "framekit/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace framekit {

namespace {

constexpr double kProjectionTol = 1e-9;
constexpr double kTraceTol = 1e-8;
constexpr double kParsevalTol = 1e-8;
constexpr double kCosineOvershoot = 1e-12;
constexpr double kUnitaryTol = 1e-10;

void require_equal_rank(const Projection& p, const Projection& q,
                        const char* op) {
  if (p.size() != q.size() || p.rank() != q.rank()) {
    std::ostringstream os;
    os << op << ": projections differ in size or rank (" << p.size() << "/"
       << p.rank() << " vs " << q.size() << "/" << q.rank() << ")";
    throw DimensionError(os.str());
  }
}

void require_parseval(const Frame& f, const char* op) {
  const double eps = parseval_defect(frame_operator(f));
  if (eps > kParsevalTol) {
    std::ostringstream os;
    os << op << ": frame is not Parseval (parseval defect " << eps << ")";
    throw PreconditionError(os.str());
  }
}

}  // namespace

Projection::Projection(Mat matrix) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols())
    throw DimensionError("projection: matrix must be square and nonempty");
  if (!all_finite(matrix))
    throw DimensionError("projection: non-finite entries");
  const double scale = tol_scale(matrix);
  if ((matrix - matrix.adjoint()).norm() > kProjectionTol * scale)
    throw PreconditionError("projection: matrix is not Hermitian");
  matrix_ = symmetrize(matrix);
  const double idem = (matrix_ * matrix_ - matrix_).norm();
  if (idem > kProjectionTol * scale) {
    std::ostringstream os;
    os << "projection: matrix is not idempotent (residual " << idem << ")";
    throw PreconditionError(os.str());
  }
  const HermEig eig = herm_eig(matrix_);
  while (rank_ < eig.eigenvalues.size() && eig.eigenvalues(rank_) > 0.5)
    ++rank_;
  const double trace = matrix_.trace().real();
  if (std::abs(trace - static_cast<double>(rank_)) > kTraceTol) {
    std::ostringstream os;
    os << "projection: trace " << trace << " does not match rank " << rank_;
    throw PreconditionError(os.str());
  }
}

Mat Projection::range_basis() const { return eigenspace_above(matrix_, 0.5); }

Projection Projection::complement() const {
  return Projection(Mat::Identity(size(), size()) - matrix_);
}

Projection projection_from_frame(const Frame& f) {
  require_parseval(f, "projection_from_frame");
  return Projection(gram(f));
}

Frame frame_from_projection(const Projection& p) {
  return Frame(p.range_basis().adjoint());
}

double diagonal_defect(const Projection& p) {
  const double target =
      static_cast<double>(p.rank()) / static_cast<double>(p.size());
  double worst = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    worst = std::max(worst, std::abs(p.matrix()(i, i).real() / target - 1.0));
  return worst;
}

double proj_distance(const Projection& p, const Projection& q) {
  if (p.size() != q.size())
    throw DimensionError("proj_distance: projections act on different spaces");
  return (p.matrix() - q.matrix()).squaredNorm();
}

PrincipalAngles principal_angles(const Projection& p, const Projection& q) {
  require_equal_rank(p, q, "principal_angles");
  PrincipalAngles out;
  const Eigen::Index m = p.rank();
  out.cosines = RealVec::Zero(m);
  out.angles = RealVec::Constant(m, std::acos(0.0));
  if (m == 0) return out;
  const Svd dec = svd(p.range_basis().adjoint() * q.range_basis());
  for (Eigen::Index j = 0; j < m; ++j) {
    double c = dec.singular_values(j);
    if (c > 1.0 + kCosineOvershoot) {
      std::ostringstream os;
      os << "principal_angles: cosine " << c << " exceeds 1";
      throw Error(os.str());
    }
    c = std::clamp(c, 0.0, 1.0);
    out.cosines(j) = c;
    out.angles(j) = std::acos(c);
  }
  return out;
}

double chordal_sq(const Projection& p, const Projection& q) {
  require_equal_rank(p, q, "chordal_sq");
  // Tr PQ = sum_ij P_ij Q_ji = sum_ij P_ij conj(Q_ij) for Hermitian Q.
  const double tr = (p.matrix().cwiseProduct(q.matrix().conjugate())).sum().real();
  return static_cast<double>(p.rank()) - tr;
}

namespace {

AlignedBases align_ranges(const Mat& a0, const Mat& b0) {
  AlignedBases out;
  const Eigen::Index m = a0.cols();
  if (m == 0) {
    out.first = a0;
    out.second = b0;
    out.cosines = RealVec(0);
    return out;
  }
  const Svd dec = svd(a0.adjoint() * b0);
  out.first = a0 * dec.left;
  out.second = b0 * dec.right;
  out.cosines = RealVec(m);
  // Rotate each b_j so <a_j, b_j> is real and nonnegative.
  for (Eigen::Index j = 0; j < m; ++j) {
    const Complex ip = out.first.col(j).dot(out.second.col(j));
    const double mag = std::abs(ip);
    if (mag > 0.0) out.second.col(j) *= std::conj(ip) / mag;
    out.cosines(j) = std::min(1.0, mag);
  }
  return out;
}

}  // namespace

AlignedBases aligned_bases(const Projection& p, const Projection& q) {
  require_equal_rank(p, q, "aligned_bases");
  return align_ranges(p.range_basis(), q.range_basis());
}

Frame frame_lift(const Frame& f, const Projection& q) {
  require_parseval(f, "frame_lift");
  if (q.size() != f.size() || q.rank() != f.dim()) {
    std::ostringstream os;
    os << "frame_lift: projection of size " << q.size() << " and rank "
       << q.rank() << " does not match a frame of " << f.size()
       << " vectors in C^" << f.dim();
    throw DimensionError(os.str());
  }
  // The range of T_F is spanned by the top M eigenvectors of gram(F).
  const AlignedBases ab =
      align_ranges(eigenspace_above(gram(f), 0.5), q.range_basis());
  // T_F = A C for the unitary C = A* T_F; the lifted frame has T_G = B C.
  Mat c = ab.first.adjoint() * analysis_matrix(f);
  if (orthonormality_residual(c) > kUnitaryTol) c = polar_unitary(c);
  return Frame((ab.second * c).adjoint());
}

}  // namespace framekit
