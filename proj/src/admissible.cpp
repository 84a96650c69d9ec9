#include "framekit/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace framekit {

namespace {

constexpr double kSumTol = 1e-9;
constexpr double kUnitTol = 1e-12;

}  // namespace

AdmissibleSequence::AdmissibleSequence(std::vector<double> values,
                                       Eigen::Index target_dim)
    : original_(std::move(values)), target_dim_(target_dim) {
  if (original_.empty())
    throw PreconditionError("admissible sequence: no values");
  if (target_dim_ < 1)
    throw PreconditionError("admissible sequence: dimension must be positive");
  for (double v : original_)
    if (!std::isfinite(v) || !(v > 0.0))
      throw PreconditionError(
          "admissible sequence: values must be positive and finite");
  sorted_ = original_;
  std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
}

SpectrumSpec::SpectrumSpec(std::vector<double> eigenvalues)
    : values_(std::move(eigenvalues)) {
  if (values_.empty()) throw PreconditionError("spectrum: no eigenvalues");
  for (double v : values_)
    if (!std::isfinite(v) || !(v > 0.0))
      throw PreconditionError("spectrum: eigenvalues must be positive");
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

Verdict is_parseval_admissible(const AdmissibleSequence& a) {
  const double m = static_cast<double>(a.target_dim());
  double total = 0.0;
  for (double v : a.sorted()) total += v * v;
  if (a.sorted().front() > 1.0 + kUnitTol) {
    std::ostringstream os;
    os << "a_i <= 1 fails: largest value " << a.sorted().front();
    return {false, os.str()};
  }
  if (std::abs(total - m) > kSumTol * m) {
    std::ostringstream os;
    os << "sum of squares " << total << " != M = " << a.target_dim();
    return {false, os.str()};
  }
  return {true, std::nullopt};
}

Verdict is_S_admissible(const AdmissibleSequence& a, const SpectrumSpec& spec) {
  const auto& lambda = spec.eigenvalues();
  const auto& values = a.sorted();
  if (values.size() < lambda.size()) {
    std::ostringstream os;
    os << "is_S_admissible: " << values.size() << " norms cannot realize "
       << lambda.size() << " eigenvalues";
    throw PreconditionError(os.str());
  }
  double norms = 0.0;
  double eigs = 0.0;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    norms += values[k] * values[k];
    eigs += lambda[k];
    if (norms > eigs + kSumTol) {
      std::ostringstream os;
      os << "partial sum k=" << k + 1 << ": " << norms << " > " << eigs;
      return {false, os.str()};
    }
  }
  for (std::size_t k = lambda.size(); k < values.size(); ++k)
    norms += values[k] * values[k];
  if (std::abs(norms - eigs) > kSumTol) {
    std::ostringstream os;
    os << "total " << norms << " != trace " << eigs;
    return {false, os.str()};
  }
  return {true, std::nullopt};
}

PaulsenInstance nearest_prescribed_norm_parseval(const Frame& f,
                                                 const AdmissibleSequence& a,
                                                 const SolverConfig& cfg) {
  const Verdict v = is_parseval_admissible(a);
  if (!v.admissible)
    throw PreconditionError("nearest_prescribed_norm_parseval: " + *v.violated);
  if (a.target_dim() != f.dim() || a.count() != f.size())
    throw DimensionError(
        "nearest_prescribed_norm_parseval: sequence does not match frame shape");
  RealVec targets(a.count());
  for (Eigen::Index i = 0; i < a.count(); ++i)
    targets(i) = a.original()[static_cast<std::size_t>(i)] *
                 a.original()[static_cast<std::size_t>(i)];
  return solve_prescribed_norms(f, targets, cfg);
}

}  // namespace framekit
