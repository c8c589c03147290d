#pragma once

#include <cstdint>
#include <string_view>

#include "cubeprobe/estimator.hpp"

namespace cubeprobe {

// zeta = (eta - eps)/2, delta_t = 2 delta, K = (eta + eps)/2.
struct TesterParams {
  double epsilon = 0.0;
  double eta = 0.0;
  double delta = 0.0;
  double zeta = 0.0;
  double delta_t = 0.0;
  double threshold_k = 0.0;
};

// Requires 0 < epsilon < eta <= 1 and delta in (0, 1/2].
TesterParams make_tester_params(double epsilon, double eta, double delta);

enum class Decision { Accept, Reject };

std::string_view to_string(Decision d) noexcept;

// Reject only when the estimate strictly exceeds K; a tie accepts.
Decision decide(double dtv_estimate, const TesterParams& params) noexcept;

struct Verdict {
  Decision decision = Decision::Accept;
  EstimateReport estimate;
  TesterParams params;
};

// Accepts with probability >= 1 - delta when d_TV(P,Q) <= epsilon and rejects
// with probability >= 1 - delta when d_TV(P,Q) >= eta.
Verdict cube_probe_tester(const ConditionalSampler& sampler, const KnownDistribution& known,
                          double epsilon, double eta, double delta, std::uint64_t seed,
                          const EstimateOptions& options = {});

}  // namespace cubeprobe
