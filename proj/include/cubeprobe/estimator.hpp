#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cubeprobe/bitstring.hpp"
#include "cubeprobe/errors.hpp"
#include "cubeprobe/gbas.hpp"
#include "cubeprobe/rng.hpp"
#include "cubeprobe/sampler.hpp"

namespace cubeprobe {

// Parameters of the distance estimator for an n-dimensional cube.
//   alpha       = ceil((2/zeta^2) ln(4/delta))        outer samples
//   gamma       = zeta / (1.11 (2 + zeta))            per-point relative error
//   delta_prime = delta / (2 alpha)                   per-point confidence
//   k           = ceil((3n/gamma^2) ln(2n/delta'))    GBAS successes per marginal
// All logarithms are natural.
struct EstimatorParams {
  std::size_t n = 0;
  double zeta = 0.0;
  double delta = 0.0;
  std::uint64_t alpha = 0;
  double gamma = 0.0;
  double delta_prime = 0.0;
  std::uint64_t k = 0;
};

// Requires zeta in (0,1), delta in (0,1] and n >= 1; InvalidParameter otherwise.
EstimatorParams derive_params(std::size_t n, double zeta, double delta);

// ceil((3n/gamma^2) ln(2n/delta_prime)).
std::uint64_t gbas_repetitions(std::size_t n, double gamma, double delta_prime);

// Chain-rule estimate of P(x).
struct MassEstimate {
  double p_hat_x = 0.0;
  std::vector<GbasResult> marginals;  // one per coordinate, in order
  std::uint64_t draws = 0;
};

// Product of the marginal estimates; a direct product up to 32 terms, a
// sum of logs beyond that.
double combine_marginals(const std::vector<GbasResult>& marginals);

// For i = 0..n-1, binds the sampler to the prefix x_0..x_{i-1} and runs GBAS
// with head x_i and the given k. `max_draws` caps the total over all
// coordinates.
MassEstimate est_mass(const ConditionalSampler& sampler, const BitString& x, std::uint64_t k,
                      RngStream& rng, std::uint64_t max_draws = UINT64_MAX);

MassEstimate est_mass(const ConditionalSampler& sampler, const BitString& x,
                      const EstimatorParams& params, RngStream& rng,
                      std::uint64_t max_draws = UINT64_MAX);

struct EstimateReport {
  double dtv_estimate = 0.0;
  std::uint64_t total_samples = 0;
  std::vector<double> per_sample_terms;  // max(0, 1 - Q(x)/p_hat(x)), one per outer sample
  EstimatorParams params;
  std::uint64_t seed = 0;
};

struct EstimateOptions {
  unsigned threads = 1;
  std::uint64_t max_total_samples = 0;  // 0 = unlimited
};

// Raised when EstimateOptions::max_total_samples runs out. Carries the terms
// of the outer iterations that did complete.
class EstimateAborted : public BudgetExhausted {
 public:
  EstimateAborted(const std::string& what, EstimateReport partial)
      : BudgetExhausted(what, partial.total_samples), partial_(std::move(partial)) {}
  const EstimateReport& partial() const noexcept { return partial_; }

 private:
  EstimateReport partial_;
};

// Estimates d_TV(P, Q) for P behind `sampler` and Q = `known`.
//
// Outer iteration i uses RngStream(seed, i): it draws x ~ P unconditioned,
// estimates P(x) with est_mass and records max(0, 1 - Q(x)/p_hat(x)). The
// result is the mean of the alpha terms, within +-zeta of the true distance
// with probability at least 1 - delta. Iterations are independent, so the
// report does not depend on options.threads.
EstimateReport cube_probe_est(const ConditionalSampler& sampler, const KnownDistribution& known,
                              double zeta, double delta, std::uint64_t seed,
                              const EstimateOptions& options = {});

EstimateReport cube_probe_est(const ConditionalSampler& sampler, const KnownDistribution& known,
                              const EstimatorParams& params, std::uint64_t seed,
                              const EstimateOptions& options = {});

}  // namespace cubeprobe
