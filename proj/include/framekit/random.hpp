#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "framekit/numerics.hpp"

namespace framekit {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive combination of seed components.
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

/// Entries i.i.d. standard complex Gaussian (real and imaginary parts N(0, 1/2)).
Mat gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary via QR of a Gaussian matrix with phase fix.
Mat random_unitary(Eigen::Index n, Rng& rng);

}  // namespace framekit
