#pragma once

#include "framekit/frame.hpp"
#include "framekit/numerics.hpp"

namespace framekit {

/// Orthogonal projection on C^N of rank M. Validated on construction:
/// Hermitian and idempotent within 1e-9, trace within 1e-8 of the rank.
class Projection {
 public:
  explicit Projection(Mat matrix);

  Eigen::Index size() const noexcept { return matrix_.rows(); }
  Eigen::Index rank() const noexcept { return rank_; }
  const Mat& matrix() const noexcept { return matrix_; }

  /// Orthonormal basis of the range, N x M.
  Mat range_basis() const;

  Projection complement() const;

 private:
  Mat matrix_;
  Eigen::Index rank_ = 0;
};

/// Cosines sigma_1 >= ... >= sigma_M in [0, 1] and angles arccos(sigma_j).
struct PrincipalAngles {
  RealVec cosines;
  RealVec angles;
};

/// Orthonormal bases of two equal-rank ranges paired so that
/// <a_j, b_k> = delta_jk sigma_j with sigma_j real and nonnegative.
struct AlignedBases {
  Mat first;
  Mat second;
  RealVec cosines;
};

/// Gram matrix of a Parseval frame, viewed as the projection onto the range
/// of its analysis operator. Throws PreconditionError if f is not Parseval
/// within 1e-8.
Projection projection_from_frame(const Frame& f);

/// Parseval frame whose Gram matrix is p: the coordinates of {P e_i} in an
/// orthonormal basis of range(P).
Frame frame_from_projection(const Projection& p);

/// Smallest e with (1-e)M/N <= P_ii <= (1+e)M/N for all i.
double diagonal_defect(const Projection& p);

/// sum_i |P e_i - Q e_i|^2 = ||P - Q||_HS^2.
double proj_distance(const Projection& p, const Projection& q);

PrincipalAngles principal_angles(const Projection& p, const Projection& q);

/// Squared chordal distance M - Tr PQ.
double chordal_sq(const Projection& p, const Projection& q);

AlignedBases aligned_bases(const Projection& p, const Projection& q);

/// Parseval frame G with gram(G) = Q and d(F, G) <= 2 d(gram F, Q).
/// Equal-norm whenever Q has constant diagonal.
Frame frame_lift(const Frame& f, const Projection& q);

}  // namespace framekit
