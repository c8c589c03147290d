#pragma once

#include <cstddef>
#include <cstdint>

#include "cubeprobe/bitstring.hpp"
#include "cubeprobe/rng.hpp"
#include "cubeprobe/sampler.hpp"

namespace cubeprobe {

// Outcome of one Gamma Bernoulli Approximation Scheme run.
struct GbasResult {
  double p_hat = 0.0;       // (k - 1) / r
  std::uint64_t draws = 0;  // sampler calls made
  double r = 0.0;           // sum of one Exp(1) per draw
  std::uint64_t s = 0;      // successes; equals k on return
};

// Exp(1) by inversion: -ln(1 - u).
double exp1_from_uniform(double u);
double sample_exp1(RngStream& rng);

// 1000 * k / 1e-6, saturating.
std::uint64_t default_max_draws(std::uint64_t k);

// Estimates p = Pr[w[coord] == head] for w drawn from `bound`.
//
// Draws until k successes have been seen, adding one Exp(1) variate to r per
// draw (successful or not), and returns p_hat = (k-1)/r. The estimate is
// unbiased and satisfies Pr(|p_hat/p - 1| > eps) <= delta whenever
// k >= 3 ln(2/delta) / eps^2; the expected number of draws is k/p.
//
// Throws InvalidParameter for k < 2 or coord >= dim, and BudgetExhausted if
// max_draws draws pass without reaching k successes.
GbasResult gbas_estimate(const BoundSampler& bound, std::size_t coord, std::uint8_t head,
                         std::uint64_t k, RngStream& rng, std::uint64_t max_draws);

// Binds `sampler` to `condition` first. `coord` must be free in the condition.
GbasResult gbas_estimate(const ConditionalSampler& sampler, const SubcubeCondition& condition,
                         std::size_t coord, std::uint8_t head, std::uint64_t k, RngStream& rng,
                         std::uint64_t max_draws);

}  // namespace cubeprobe
