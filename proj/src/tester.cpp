#include "cubeprobe/tester.hpp"

#include <string>

namespace cubeprobe {

TesterParams make_tester_params(double epsilon, double eta, double delta) {
  if (!(epsilon > 0.0 && epsilon < eta && eta <= 1.0)) {
    throw InvalidParameter("need 0 < epsilon < eta <= 1, got epsilon=" + std::to_string(epsilon) +
                           ", eta=" + std::to_string(eta));
  }
  if (!(delta > 0.0 && delta <= 0.5)) {
    throw InvalidParameter("delta must lie in (0, 1/2], got " + std::to_string(delta));
  }
  TesterParams p;
  p.epsilon = epsilon;
  p.eta = eta;
  p.delta = delta;
  p.zeta = (eta - epsilon) / 2.0;
  p.delta_t = 2.0 * delta;
  p.threshold_k = (eta + epsilon) / 2.0;
  return p;
}

std::string_view to_string(Decision d) noexcept {
  return d == Decision::Reject ? "REJECT" : "ACCEPT";
}

Decision decide(double dtv_estimate, const TesterParams& params) noexcept {
  return dtv_estimate > params.threshold_k ? Decision::Reject : Decision::Accept;
}

Verdict cube_probe_tester(const ConditionalSampler& sampler, const KnownDistribution& known,
                          double epsilon, double eta, double delta, std::uint64_t seed,
                          const EstimateOptions& options) {
  Verdict v;
  v.params = make_tester_params(epsilon, eta, delta);
  v.estimate = cube_probe_est(sampler, known, v.params.zeta, v.params.delta_t, seed, options);
  v.decision = decide(v.estimate.dtv_estimate, v.params);
  return v;
}

}  // namespace cubeprobe
