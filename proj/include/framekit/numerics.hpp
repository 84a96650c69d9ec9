#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace framekit {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

// Error hierarchy. Everything thrown by the library derives from Error so the
// CLI can map failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
struct HermEig {
  RealVec eigenvalues;
  Mat eigenvectors;  // column j pairs with eigenvalues(j)
};

/// Thin singular value decomposition A = U diag(s) V*, s descending.
struct Svd {
  Mat left;
  RealVec singular_values;
  Mat right;
};

inline constexpr double kDecompositionTol = 1e-9;

double hs_norm(const Mat& a);
double hs_norm_sq(const Mat& a);

/// Scale used by relative tolerances: max(1, ||A||_HS).
double tol_scale(const Mat& a);

bool all_finite(const Mat& a);

/// (H + H*) / 2; throws DimensionError for non-square input.
Mat symmetrize(const Mat& h);

HermEig herm_eig(const Mat& h);
Svd svd(const Mat& a);

/// Inverse square root of a Hermitian positive-definite matrix. Throws
/// SingularityError when the smallest eigenvalue is <= min_eigenvalue.
Mat inv_sqrt_psd(const Mat& s, double min_eigenvalue = 1e-12);

/// Orthonormal basis (as columns) of the eigenspace of a Hermitian matrix
/// whose eigenvalues exceed `threshold`.
Mat eigenspace_above(const Mat& h, double threshold);

/// Nearest unitary (polar factor) of a square matrix.
Mat polar_unitary(const Mat& a);

/// ||U*U - I||_HS for a matrix with (intended) orthonormal columns.
double orthonormality_residual(const Mat& u);

}  // namespace framekit
