#include "cubeprobe/gbas.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cubeprobe/errors.hpp"

namespace cubeprobe {

double exp1_from_uniform(double u) { return -std::log1p(-u); }

double sample_exp1(RngStream& rng) { return exp1_from_uniform(rng.uniform01()); }

std::uint64_t default_max_draws(std::uint64_t k) {
  constexpr double kEpsFloor = 1e-6;
  const double budget = 1000.0 * static_cast<double>(k) / kEpsFloor;
  if (budget >= static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(budget);
}

GbasResult gbas_estimate(const BoundSampler& bound, std::size_t coord, std::uint8_t head,
                         std::uint64_t k, RngStream& rng, std::uint64_t max_draws) {
  if (k < 2) throw InvalidParameter("GBAS needs k >= 2");
  if (coord >= bound.dim()) {
    throw InvalidParameter("coordinate " + std::to_string(coord) + " out of range");
  }
  if (head > 1) throw InvalidParameter("head must be 0 or 1");

  GbasResult res;
  while (res.s < k) {
    if (res.draws >= max_draws) {
      throw BudgetExhausted("GBAS exhausted " + std::to_string(max_draws) + " draws with " +
                                std::to_string(res.s) + "/" + std::to_string(k) + " successes",
                            res.draws);
    }
    const BitString w = bound.draw(rng);
    ++res.draws;
    if (w[coord] == head) ++res.s;
    res.r += sample_exp1(rng);
  }
  res.p_hat = static_cast<double>(k - 1) / res.r;
  return res;
}

GbasResult gbas_estimate(const ConditionalSampler& sampler, const SubcubeCondition& condition,
                         std::size_t coord, std::uint8_t head, std::uint64_t k, RngStream& rng,
                         std::uint64_t max_draws) {
  if (coord >= sampler.dim() || condition.is_fixed(coord)) {
    throw InvalidParameter("coordinate " + std::to_string(coord) + " is not free in the condition");
  }
  const auto bound = sampler.bind(condition);
  return gbas_estimate(*bound, coord, head, k, rng, max_draws);
}

}  // namespace cubeprobe
