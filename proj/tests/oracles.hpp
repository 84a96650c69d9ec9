#pragma once

// Reference computations used only by tests. Each one takes a route that is
// independent of the library implementation it is compared against.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "framekit/frame.hpp"
#include "framekit/subspace.hpp"

namespace oracle {

using framekit::Complex;
using framekit::Mat;
using framekit::RealVec;
using framekit::Vec;

// <x, y> = sum_k x_k conj(y_k), written out.
inline Complex inner(const Vec& x, const Vec& y) {
  Complex s = 0.0;
  for (Eigen::Index k = 0; k < x.size(); ++k) s += x(k) * std::conj(y(k));
  return s;
}

// sum_i |<x, f_i>|^2 by direct summation over the frame vectors.
inline double frame_energy(const framekit::Frame& f, const Vec& x) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) s += std::norm(inner(x, f.vector(i)));
  return s;
}

// Gram entry (i, j) = <f_j, f_i> by loops.
inline Mat gram(const framekit::Frame& f) {
  Mat g(f.size(), f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    for (Eigen::Index j = 0; j < f.size(); ++j) g(i, j) = inner(f.vector(j), f.vector(i));
  return g;
}

// Principal cosines from the spectrum of P Q P: its nonzero eigenvalues are
// sigma_j^2. No SVD involved.
inline RealVec principal_cosines(const framekit::Projection& p, const framekit::Projection& q) {
  const Mat pqp = p.matrix() * q.matrix() * p.matrix();
  Eigen::SelfAdjointEigenSolver<Mat> es((pqp + pqp.adjoint()) * 0.5);
  RealVec ev = es.eigenvalues().reverse();
  RealVec out(p.rank());
  for (Eigen::Index j = 0; j < p.rank(); ++j) out(j) = std::sqrt(std::clamp(ev(j), 0.0, 1.0));
  return out;
}

// (1/2) sum_i |P e_i - Q e_i|^2 by columns.
inline double half_column_distance(const framekit::Projection& p, const framekit::Projection& q) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    s += (p.matrix().col(i) - q.matrix().col(i)).squaredNorm();
  return 0.5 * s;
}

// Harmonic frame entry N^{-1/2} exp(2 pi i k j / N).
inline Complex harmonic_entry(Eigen::Index k, Eigen::Index j, Eigen::Index n) {
  const double phase = 2.0 * std::numbers::pi * static_cast<double>(k * j) / static_cast<double>(n);
  return std::polar(1.0 / std::sqrt(static_cast<double>(n)), phase);
}

// Coordinate projection onto span{e_k : k in idx}.
inline framekit::Projection coordinate_projection(Eigen::Index n, std::vector<Eigen::Index> idx) {
  Mat p = Mat::Zero(n, n);
  for (Eigen::Index k : idx) p(k, k) = 1.0;
  return framekit::Projection(p);
}

}  // namespace oracle
