#include "framekit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace framekit {

double hs_norm(const Mat& a) { return a.norm(); }

double hs_norm_sq(const Mat& a) { return a.squaredNorm(); }

double tol_scale(const Mat& a) { return std::max(1.0, a.norm()); }

bool all_finite(const Mat& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag()))
        return false;
  return true;
}

Mat symmetrize(const Mat& h) {
  if (h.rows() != h.cols()) {
    std::ostringstream os;
    os << "expected a square matrix, got " << h.rows() << "x" << h.cols();
    throw DimensionError(os.str());
  }
  return (h + h.adjoint()) * 0.5;
}

HermEig herm_eig(const Mat& h) {
  const Mat sym = symmetrize(h);
  if (!all_finite(sym)) throw Error("herm_eig: non-finite entries");
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error("herm_eig: eigensolver did not converge");

  // Eigen returns ascending order.
  HermEig out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

Svd svd(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0)
    throw DimensionError("svd: empty matrix");
  if (!all_finite(a)) throw Error("svd: non-finite entries");
  Eigen::JacobiSVD<Mat> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return Svd{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Mat inv_sqrt_psd(const Mat& s, double min_eigenvalue) {
  const HermEig eig = herm_eig(s);
  const double lmin = eig.eigenvalues(eig.eigenvalues.size() - 1);
  if (!(lmin > min_eigenvalue)) {
    std::ostringstream os;
    os << "inv_sqrt_psd: matrix is singular or indefinite (smallest eigenvalue "
       << lmin << ")";
    throw SingularityError(os.str(), lmin);
  }
  const RealVec d = eig.eigenvalues.array().rsqrt();
  Mat r = eig.eigenvectors * d.cast<Complex>().asDiagonal() *
          eig.eigenvectors.adjoint();
  return symmetrize(r);
}

Mat eigenspace_above(const Mat& h, double threshold) {
  const HermEig eig = herm_eig(h);
  Eigen::Index count = 0;
  while (count < eig.eigenvalues.size() && eig.eigenvalues(count) > threshold)
    ++count;
  return eig.eigenvectors.leftCols(count);
}

Mat polar_unitary(const Mat& a) {
  const Svd dec = svd(a);
  return dec.left * dec.right.adjoint();
}

double orthonormality_residual(const Mat& u) {
  return (u.adjoint() * u - Mat::Identity(u.cols(), u.cols())).norm();
}

}  // namespace framekit
