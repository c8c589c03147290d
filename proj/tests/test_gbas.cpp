#include <doctest.h>

#include <cmath>
#include <vector>

#include "cubeprobe/errors.hpp"
#include "cubeprobe/gbas.hpp"
#include "cubeprobe/poset_sampler.hpp"
#include "cubeprobe/sampler.hpp"
#include "fixtures.hpp"

using namespace cubeprobe;

namespace {

GbasResult run_coin(double p, std::uint64_t k, std::uint64_t seed) {
  const ProductSampler coin({p});
  RngStream rng(seed, 0);
  return gbas_estimate(coin, SubcubeCondition(1), 0, 1, k, rng, default_max_draws(k));
}

}  // namespace

TEST_CASE("exp1 by inversion") {
  CHECK(exp1_from_uniform(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(exp1_from_uniform(0.0) == 0.0);
  RngStream rng(1, 1);
  double sum = 0.0;
  constexpr int kN = 100000;
  for (int i = 0; i < kN; ++i) {
    const double a = sample_exp1(rng);
    REQUIRE(a >= 0.0);
    sum += a;
  }
  const double mean = sum / kN;
  CHECK(mean >= 0.98);
  CHECK(mean <= 1.02);
}

TEST_CASE("gbas result invariants") {
  const auto res = run_coin(0.3, 50, 4);
  CHECK(res.s == 50);
  CHECK(res.draws >= 50);
  CHECK(res.r > 0.0);
  CHECK(res.p_hat == static_cast<double>(49) / res.r);
  CHECK(res.p_hat > 0.0);
}

TEST_CASE("gbas on a deterministic coordinate") {
  // kite poset conditioned on 3 before 2 forces 3 before 4: p = 1.
  const UniformExtensionSampler kite(fixtures::kite());
  const auto cond = make_condition(2, {{0, 0}});
  int within = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    RngStream rng(t, 0);
    const auto res = gbas_estimate(kite, cond, 1, 1, 300, rng, default_max_draws(300));
    CHECK(res.draws == 300);
    within += std::abs(res.p_hat - 1.0) <= 0.2;
  }
  CHECK(within >= 190);
}

TEST_CASE("gbas meets its relative-error guarantee on a fair coin") {
  const std::uint64_t k = static_cast<std::uint64_t>(std::ceil(3 * std::log(40.0) / 0.01));
  REQUIRE(k == 1107);
  int within = 0;
  double draws = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto res = run_coin(0.5, k, 1000 + t);
    within += std::abs(res.p_hat / 0.5 - 1.0) <= 0.1;
    draws += static_cast<double>(res.draws);
  }
  CHECK(within >= 190);
  CHECK(std::abs(draws / 200 / 2214.0 - 1.0) <= 0.1);
}

TEST_CASE("gbas is unbiased") {
  for (double p : {0.25, 0.5, 0.75}) {
    constexpr int kTrials = 1000;
    std::vector<double> est;
    for (int t = 0; t < kTrials; ++t) est.push_back(run_coin(p, 500, 77 * t + 1).p_hat);
    double mean = 0;
    for (double e : est) mean += e;
    mean /= kTrials;
    double var = 0;
    for (double e : est) var += (e - mean) * (e - mean);
    const double se = std::sqrt(var / (kTrials - 1) / kTrials);
    CAPTURE(p);
    CHECK(std::abs(mean - p) <= 3 * se);
  }
}

TEST_CASE("gbas errors") {
  const ProductSampler never({0.0});
  RngStream rng(0, 0);
  CHECK_THROWS_AS(gbas_estimate(never, SubcubeCondition(1), 0, 1, 10, rng, 1000), BudgetExhausted);
  try {
    gbas_estimate(never, SubcubeCondition(1), 0, 1, 10, rng, 1000);
  } catch (const BudgetExhausted& e) {
    CHECK(e.draws() == 1000);
  }
  const ProductSampler coin({0.5, 0.5});
  CHECK_THROWS_AS(gbas_estimate(coin, SubcubeCondition(2), 0, 1, 1, rng, 100), InvalidParameter);
  CHECK_THROWS_AS(gbas_estimate(coin, make_condition(2, {{0, 1}}), 0, 1, 5, rng, 100), InvalidParameter);
  CHECK_THROWS_AS(gbas_estimate(coin, SubcubeCondition(2), 2, 1, 5, rng, 100), InvalidParameter);
}

TEST_CASE("default draw budget") {
  CHECK(default_max_draws(2) == 2000000000ULL);
  CHECK(default_max_draws(UINT64_MAX / 2) == UINT64_MAX);
}
