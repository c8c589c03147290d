#include "cubeprobe/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace cubeprobe {

EstimatorParams derive_params(std::size_t n, double zeta, double delta) {
  if (!(zeta > 0.0 && zeta < 1.0)) {
    throw InvalidParameter("zeta must lie in (0,1), got " + std::to_string(zeta));
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw InvalidParameter("delta must lie in (0,1], got " + std::to_string(delta));
  }
  EstimatorParams p;
  p.n = n;
  p.zeta = zeta;
  p.delta = delta;
  p.alpha = static_cast<std::uint64_t>(std::ceil((2.0 / (zeta * zeta)) * std::log(4.0 / delta)));
  p.gamma = zeta / (1.11 * (2.0 + zeta));
  p.delta_prime = delta / (2.0 * static_cast<double>(p.alpha));
  // A zero-dimensional cube has a single point and needs no marginals.
  p.k = n == 0 ? 0 : gbas_repetitions(n, p.gamma, p.delta_prime);
  return p;
}

std::uint64_t gbas_repetitions(std::size_t n, double gamma, double delta_prime) {
  if (n == 0) throw InvalidParameter("dimension must be at least 1");
  if (!(gamma > 0.0)) throw InvalidParameter("gamma must be positive");
  if (!(delta_prime > 0.0 && delta_prime < 1.0)) {
    throw InvalidParameter("delta' must lie in (0,1)");
  }
  const double nd = static_cast<double>(n);
  return static_cast<std::uint64_t>(
      std::ceil((3.0 * nd / (gamma * gamma)) * std::log(2.0 * nd / delta_prime)));
}

double combine_marginals(const std::vector<GbasResult>& marginals) {
  if (marginals.size() <= 32) {
    double prod = 1.0;
    for (const auto& m : marginals) prod *= m.p_hat;
    return prod;
  }
  double log_sum = 0.0;
  for (const auto& m : marginals) log_sum += std::log(m.p_hat);
  return std::exp(log_sum);
}

MassEstimate est_mass(const ConditionalSampler& sampler, const BitString& x, std::uint64_t k,
                      RngStream& rng, std::uint64_t max_draws) {
  if (x.size() != sampler.dim()) {
    throw DimensionMismatch("point has dimension " + std::to_string(x.size()) +
                            ", sampler has " + std::to_string(sampler.dim()));
  }
  MassEstimate out;
  out.marginals.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto bound = sampler.bind(prefix_condition(x, i));
    try {
      const std::uint64_t cap = std::min(default_max_draws(k), max_draws - out.draws);
      out.marginals.push_back(gbas_estimate(*bound, i, x[i], k, rng, cap));
    } catch (const BudgetExhausted& e) {
      throw BudgetExhausted(e.what(), out.draws + e.draws());
    }
    out.draws += out.marginals.back().draws;
  }
  out.p_hat_x = combine_marginals(out.marginals);
  return out;
}

MassEstimate est_mass(const ConditionalSampler& sampler, const BitString& x,
                      const EstimatorParams& params, RngStream& rng, std::uint64_t max_draws) {
  if (params.n != x.size()) {
    throw DimensionMismatch("parameters were derived for n=" + std::to_string(params.n));
  }
  return est_mass(sampler, x, params.k, rng, max_draws);
}

EstimateReport cube_probe_est(const ConditionalSampler& sampler, const KnownDistribution& known,
                              double zeta, double delta, std::uint64_t seed,
                              const EstimateOptions& options) {
  return cube_probe_est(sampler, known, derive_params(sampler.dim(), zeta, delta), seed, options);
}

namespace {

struct Iteration {
  double term = 0.0;
  std::uint64_t draws = 0;
  bool done = false;
};

}  // namespace

EstimateReport cube_probe_est(const ConditionalSampler& sampler, const KnownDistribution& known,
                              const EstimatorParams& params, std::uint64_t seed,
                              const EstimateOptions& options) {
  if (sampler.dim() != known.dim()) {
    throw DimensionMismatch("sampler has dimension " + std::to_string(sampler.dim()) +
                            ", known distribution has " + std::to_string(known.dim()));
  }
  if (params.n != sampler.dim()) {
    throw DimensionMismatch("parameters were derived for n=" + std::to_string(params.n));
  }

  const std::uint64_t budget =
      options.max_total_samples == 0 ? UINT64_MAX : options.max_total_samples;
  const auto full = sampler.bind(SubcubeCondition(sampler.dim()));

  std::vector<Iteration> iterations(params.alpha);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> used{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= params.alpha || stop.load()) return;
      try {
        RngStream rng(seed, i);
        const std::uint64_t spent = used.load();
        if (spent >= budget) throw BudgetExhausted("sample budget exhausted", spent);
        const BitString x = full->draw(rng);
        used.fetch_add(1);
        const MassEstimate est = est_mass(sampler, x, params.k, rng, budget - spent - 1);
        used.fetch_add(est.draws);
        const double q = evaluate_mass(known, x);
        iterations[i].term = std::max(0.0, 1.0 - q / est.p_hat_x);
        iterations[i].draws = 1 + est.draws;
        iterations[i].done = true;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop.store(true);
        return;
      }
    }
  };

  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(params.alpha)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  EstimateReport report;
  report.params = params;
  report.seed = seed;
  double sum = 0.0;
  for (const auto& it : iterations) {
    if (!it.done) continue;
    report.per_sample_terms.push_back(it.term);
    report.total_samples += it.draws;
    sum += it.term;
  }
  if (!report.per_sample_terms.empty()) {
    report.dtv_estimate = sum / static_cast<double>(report.per_sample_terms.size());
  }

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const BudgetExhausted& e) {
      report.total_samples = std::max(report.total_samples, used.load());
      throw EstimateAborted(std::string("estimate aborted: ") + e.what(), std::move(report));
    }
  }
  return report;
}

}  // namespace cubeprobe
