#include <doctest.h>

#include <thread>

#include "cubeprobe/errors.hpp"
#include "cubeprobe/oracle.hpp"
#include "cubeprobe/poset_sampler.hpp"
#include "cubeprobe/tester.hpp"
#include "fixtures.hpp"

using namespace cubeprobe;

TEST_CASE("tester parameters") {
  const auto p = make_tester_params(0.01, 0.61, 0.1);
  CHECK(p.zeta == doctest::Approx(0.3));
  CHECK(p.threshold_k == doctest::Approx(0.31));
  CHECK(p.delta_t == doctest::Approx(0.2));
  CHECK_THROWS_AS(make_tester_params(0.5, 0.4, 0.1), InvalidParameter);
  CHECK_THROWS_AS(make_tester_params(0.4, 0.4, 0.1), InvalidParameter);
  CHECK_THROWS_AS(make_tester_params(0.1, 1.2, 0.1), InvalidParameter);
  CHECK_THROWS_AS(make_tester_params(0.1, 0.5, 0.6), InvalidParameter);
  CHECK_NOTHROW(make_tester_params(0.1, 1.0, 0.5));
}

TEST_CASE("decision is a strict threshold") {
  const auto p = make_tester_params(0.01, 0.61, 0.1);
  CHECK(decide(p.threshold_k, p) == Decision::Accept);
  CHECK(decide(std::nextafter(p.threshold_k, 1.0), p) == Decision::Reject);
  CHECK(decide(0.0, p) == Decision::Accept);
  CHECK(to_string(Decision::Reject) == "REJECT");
}

TEST_CASE("verdict is reproducible from its stored estimate") {
  const UniformExtensionSampler known(fixtures::kite());
  const BiasedExtensionSampler biased(fixtures::kite(), {1, 1, 1, 1});
  EstimateOptions opts;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  const auto v = cube_probe_tester(biased, known, 0.01, 0.61, 0.1, 3, opts);
  CHECK(decide(v.estimate.dtv_estimate, v.params) == v.decision);
  CHECK(v.estimate.params.zeta == doctest::Approx(0.3));
  CHECK(v.estimate.params.delta == doctest::Approx(0.2));
}

TEST_CASE("l-infinity-close samplers are accepted") {
  // Perturb the uniform kite masses by at most a 0.05 factor each.
  // Every point is then 0.05-close in l-infinity, so the distance is <= 0.05.
  const std::map<BitString, double> masses{{BitString::from_string("11"), (1.0 / 3) * 1.05},
                                           {BitString::from_string("10"), (1.0 / 3) * 0.95},
                                           {BitString::from_string("01"), 1.0 / 3}};
  const TableSampler perturbed(2, masses);
  const UniformExtensionSampler known(fixtures::kite());
  for (const auto& [x, m] : masses) {
    CHECK(m >= (1 - 0.05) * known.mass(x));
    CHECK(m <= (1 + 0.05) * known.mass(x));
  }
  EstimateOptions opts;
  opts.threads = std::max(1u, std::thread::hardware_concurrency());
  int accepted = 0;
  for (std::uint64_t t = 0; t < 10; ++t) {
    accepted += cube_probe_tester(perturbed, known, 0.05, 0.65, 0.1, t, opts).decision == Decision::Accept;
  }
  CHECK(accepted >= 8);
}
