#include "framekit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "framekit/admissible.hpp"
#include "framekit/naimark.hpp"
#include "framekit/paulsen.hpp"
#include "framekit/random.hpp"
#include "framekit/subspace.hpp"

namespace framekit {

namespace {

// Tracks the largest observed value of each named quantity, preserving the
// order in which properties were first registered.
class Tally {
 public:
  void record(const std::string& name, double value, double limit) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      index_.emplace(name, results_.size());
      results_.push_back({name, -std::numeric_limits<double>::infinity(), limit, 0, true});
      it = index_.find(name);
    }
    PropertyResult& r = results_[it->second];
    r.worst = std::max(r.worst, value);
    ++r.trials;
    if (!(value <= limit)) r.passed = false;
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyResult> results_;
};

Eigen::Index pick(Rng& rng, Eigen::Index lo, Eigen::Index hi) {
  std::uniform_int_distribution<Eigen::Index> d(lo, hi);
  return d(rng);
}

double pick_real(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

Frame perturbed_parseval(Eigen::Index m, Eigen::Index n, double eps,
                         std::uint64_t seed) {
  return canonical_parseval(perturb(harmonic_frame(m, n), eps, seed));
}

void geometry_suite(Tally& tally, Rng& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    const Eigen::Index m = pick(rng, 1, 8);
    const Eigen::Index n = pick(rng, m, 32);
    const Projection p = random_projection(m, n, rng());
    const Projection q = random_projection(m, n, rng());

    const double d = proj_distance(p, q);
    const double dc = chordal_sq(p, q);
    tally.record("chordal = d(P,Q)/2", std::abs(dc - 0.5 * d) / std::max(1.0, d), 1e-8);

    const PrincipalAngles pa = principal_angles(p, q);
    const double sines = pa.angles.array().sin().square().sum();
    tally.record("M - Tr PQ = sum sin^2", std::abs(dc - sines), 1e-8);

    const AlignedBases ab = aligned_bases(p, q);
    const double pair_sum = (ab.first - ab.second).squaredNorm();
    tally.record("aligned-basis sandwich", std::max(dc - pair_sum, pair_sum - 4.0 * dc), 1e-9);
    const Mat cross = ab.first.adjoint() * ab.second;
    const Mat expected = ab.cosines.cast<Complex>().asDiagonal();
    tally.record("aligned-basis pairing", (cross - expected).norm(), 1e-9);

    // Parseval pair at a controlled distance.
    const Frame f = random_parseval(m, n, rng());
    Rng local(rng());
    const double scale = std::pow(10.0, pick_real(rng, -2.5, 0.0));
    const Frame g = canonical_parseval(Frame(f.synthesis() + scale * gaussian_matrix(m, n, local) /
                                                                 std::sqrt(static_cast<double>(n))));
    const double delta = frame_distance(f, g);
    const double rows = (gram(f) - gram(g)).squaredNorm();
    tally.record("Gram rows <= 4 d(F,G)", (rows - 4.0 * delta) / std::max(1.0, delta), 1e-9);

    const Frame lifted = frame_lift(f, q);
    const Projection pf(gram(f));
    tally.record("lift Gram equals Q", (gram(lifted) - q.matrix()).norm(), 1e-8);
    tally.record("lift d(F,G) <= 2 d(P,Q)",
                 frame_distance(f, lifted) - 2.0 * proj_distance(pf, q), 1e-8);
  }
}

void equivalence_suite(Tally& tally, Rng& rng, int trials) {
  SolverConfig cfg;
  for (int t = 0; t < trials; ++t) {
    const Eigen::Index m = pick(rng, 1, 6);
    const Eigen::Index n = pick(rng, m, 18);
    const double eps = pick_real(rng, 0.005, 0.1);
    const Frame f = perturbed_parseval(m, n, eps, rng());
    const FrameToProjectionReport r4 = equivalence_chain_frame_to_projection(f, cfg);
    tally.record("d(P,Q) <= 4 d(F,G)", r4.projection_distance - 4.0 * r4.frame_distance, 1e-8);
    tally.record("Q constant diagonal", r4.q_diagonal_error, 1e-8);

    const Projection p(gram(perturbed_parseval(m, n, eps, rng())));
    const ProjectionToFrameReport r2 = equivalence_chain_projection_to_frame(p, cfg);
    tally.record("d(F,lift) <= 2 d(P,Q)", r2.lifted_distance - 2.0 * r2.projection_distance, 1e-8);
    tally.record("extracted Gram equals P", r2.extraction_residual, 1e-9);
  }
}

void naimark_suite(Tally& tally, Rng& rng, int trials) {
  SolverConfig cfg;
  for (int t = 0; t < trials; ++t) {
    const Eigen::Index m = pick(rng, 1, 6);
    const Eigen::Index n = pick(rng, m + 1, 18);
    const double eps = pick_real(rng, 0.005, 0.1);
    const Frame f = perturbed_parseval(m, n, eps, rng());
    const Frame comp = naimark_complement(f);

    tally.record("gram(F) + gram(comp) = I",
                 (gram(f) + gram(comp) - Mat::Identity(n, n)).norm(), 1e-9);
    const RealVec sum = squared_norms(f) + squared_norms(comp);
    tally.record("|f_i|^2 + |comp_i|^2 = 1", (sum.array() - 1.0).abs().maxCoeff(), 1e-10);

    const NaimarkReport r = naimark_reduction_check(f, cfg);
    tally.record("defect transfer eps M/(N-M)",
                 r.complement_equal_norm_eps - r.transfer_bound, 1e-9);
    tally.record("d(F,K) <= 8 d(comp,H)", r.lifted_distance - 8.0 * r.complement_distance, 1e-8);

    const ReducedFrame reduced = reduce_to_small(f);
    tally.record("reduced N - 2 dim",
                 static_cast<double>(reduced.frame.size() - 2 * reduced.frame.dim()), 0.0);
  }
}

void admissible_suite(Tally& tally, Rng& rng, int trials) {
  const std::string tabulated = "tabulated verdict mismatches";
  auto expect = [&](bool got, bool want) { tally.record(tabulated, got == want ? 0.0 : 1.0, 0.0); };

  expect(is_parseval_admissible(AdmissibleSequence({1.0, 1.0, 1.0}, 3)).admissible, true);
  const double r = std::sqrt(2.0 / 5.0);
  expect(is_parseval_admissible(AdmissibleSequence({r, r, r, r, r}, 2)).admissible, true);
  expect(is_parseval_admissible(AdmissibleSequence({1.2, std::sqrt(0.31), std::sqrt(0.25)}, 2))
             .admissible,
         false);
  expect(is_S_admissible(AdmissibleSequence({1.0, 1.0, 1.0}, 2), SpectrumSpec({2.0, 1.0}))
             .admissible,
         true);
  expect(is_S_admissible(AdmissibleSequence({std::sqrt(2.5), 0.5, 0.5}, 2), SpectrumSpec({2.0, 1.0}))
             .admissible,
         false);
  expect(is_S_admissible(AdmissibleSequence({r, r, r, r, r}, 2), SpectrumSpec({1.0, 1.0}))
             .admissible,
         true);

  for (int t = 0; t < 5 * trials; ++t) {
    const Eigen::Index m = pick(rng, 1, 8);
    const Eigen::Index n = pick(rng, m, 3 * m);
    std::vector<double> a(static_cast<std::size_t>(n));
    for (double& v : a) v = pick_real(rng, 0.05, 1.3);
    if (rng() % 2 == 0) {
      double total = 0.0;
      for (double v : a) total += v * v;
      for (double& v : a) v *= std::sqrt(static_cast<double>(m) / total);
    }
    const AdmissibleSequence seq(a, m);
    const bool parseval = is_parseval_admissible(seq).admissible;
    const bool spectral =
        is_S_admissible(seq, SpectrumSpec(std::vector<double>(static_cast<std::size_t>(m), 1.0)))
            .admissible;
    tally.record("S = I agrees with Parseval test", parseval == spectral ? 0.0 : 1.0, 0.0);
  }
}

}  // namespace

std::vector<std::string_view> suite_names() {
  return {"geometry", "equivalence", "naimark", "admissible"};
}

std::vector<PropertyResult> run_suite(std::string_view suite, std::uint64_t seed, int trials) {
  if (trials < 1) throw PreconditionError("verify: trials must be at least 1");
  std::uint64_t tag = 0xcbf29ce484222325ULL;  // FNV-1a of the suite name
  for (char c : suite) tag = (tag ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  Rng rng(derive_seed({seed, tag}));
  Tally tally;
  if (suite == "geometry")
    geometry_suite(tally, rng, trials);
  else if (suite == "equivalence")
    equivalence_suite(tally, rng, trials);
  else if (suite == "naimark")
    naimark_suite(tally, rng, trials);
  else if (suite == "admissible")
    admissible_suite(tally, rng, trials);
  else
    throw PreconditionError("verify: unknown suite \"" + std::string(suite) + "\"");
  return tally.take();
}

}  // namespace framekit
