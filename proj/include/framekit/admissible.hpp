#pragma once

#include <optional>
#include <string>
#include <vector>

#include "framekit/frame.hpp"
#include "framekit/paulsen.hpp"

namespace framekit {

/// Candidate norm sequence a_1, ..., a_N for a frame in C^M.
class AdmissibleSequence {
 public:
  /// Throws PreconditionError for empty, non-positive or non-finite values.
  AdmissibleSequence(std::vector<double> values, Eigen::Index target_dim);

  /// Values sorted descending.
  const std::vector<double>& sorted() const noexcept { return sorted_; }
  /// Values in the order given, used for norm assignment.
  const std::vector<double>& original() const noexcept { return original_; }
  Eigen::Index target_dim() const noexcept { return target_dim_; }
  Eigen::Index count() const noexcept {
    return static_cast<Eigen::Index>(original_.size());
  }

 private:
  std::vector<double> original_;
  std::vector<double> sorted_;
  Eigen::Index target_dim_;
};

/// Eigenvalues lambda_1 >= ... >= lambda_d > 0 of a frame operator.
class SpectrumSpec {
 public:
  explicit SpectrumSpec(std::vector<double> eigenvalues);
  const std::vector<double>& eigenvalues() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

struct Verdict {
  bool admissible = false;
  std::optional<std::string> violated;
};

/// sum a_i^2 == M (within 1e-9 M) and every a_i <= 1.
Verdict is_parseval_admissible(const AdmissibleSequence& a);

/// Majorization test: for k = 1..d the k largest a_i^2 sum to at most the k
/// largest eigenvalues, and the totals agree (slack 1e-9). Requires
/// count(a) >= d.
Verdict is_S_admissible(const AdmissibleSequence& a, const SpectrumSpec& spec);

/// Nearest Parseval frame with |g_i| = a_i (original index order), by the same
/// alternating projections as the equal-norm solver.
PaulsenInstance nearest_prescribed_norm_parseval(const Frame& f,
                                                 const AdmissibleSequence& a,
                                                 const SolverConfig& cfg);

}  // namespace framekit
