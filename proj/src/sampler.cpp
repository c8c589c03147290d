#include "cubeprobe/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cubeprobe/errors.hpp"

namespace cubeprobe {

double evaluate_mass(const KnownDistribution& known, const BitString& x) {
  if (x.size() != known.dim()) {
    throw DimensionMismatch("point has dimension " + std::to_string(x.size()) +
                            ", distribution has " + std::to_string(known.dim()));
  }
  return known.mass(x);
}

BitString UniformSubcubeSampler::draw(RngStream& rng) const {
  BitString out(condition_.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out.set(i, (rng() >> 63) != 0);
  for (const auto& [index, bit] : condition_.fixed()) out.set(index, bit != 0);
  return out;
}

namespace {

class ConditionedProduct final : public BoundSampler {
 public:
  ConditionedProduct(std::vector<double> probs, SubcubeCondition condition)
      : probs_(std::move(probs)), condition_(std::move(condition)) {}

  std::size_t dim() const override { return probs_.size(); }

  BitString draw(RngStream& rng) const override {
    BitString out(probs_.size());
    for (std::size_t i = 0; i < probs_.size(); ++i) out.set(i, rng.bernoulli(probs_[i]));
    for (const auto& [index, bit] : condition_.fixed()) out.set(index, bit != 0);
    return out;
  }

 private:
  std::vector<double> probs_;
  SubcubeCondition condition_;
};

void check_condition_dim(std::size_t n, const SubcubeCondition& condition) {
  if (condition.dim() != n) {
    throw DimensionMismatch("condition has dimension " + std::to_string(condition.dim()) +
                            ", sampler has " + std::to_string(n));
  }
}

}  // namespace

ProductSampler::ProductSampler(std::vector<double> one_probabilities)
    : probs_(std::move(one_probabilities)) {
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("coordinate probabilities must lie in [0,1]");
  }
}

std::shared_ptr<const BoundSampler> ProductSampler::bind(const SubcubeCondition& condition) const {
  check_condition_dim(dim(), condition);
  for (const auto& [index, bit] : condition.fixed()) {
    const double p = bit ? probs_[index] : 1.0 - probs_[index];
    if (p <= 0.0) return std::make_shared<UniformSubcubeSampler>(condition);
  }
  return std::make_shared<ConditionedProduct>(probs_, condition);
}

double ProductSampler::mass(const BitString& x) const {
  double m = 1.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) m *= x[i] ? probs_[i] : 1.0 - probs_[i];
  return m;
}

TableSampler::TableSampler(std::size_t n, std::map<BitString, double> masses)
    : dim_(n), masses_(std::move(masses)) {
  double total = 0.0;
  for (const auto& [x, m] : masses_) {
    if (x.size() != n) throw DimensionMismatch("table entry has the wrong dimension");
    if (!(m >= 0.0)) throw InvalidParameter("table masses must be non-negative");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidParameter("table masses must sum to 1");
}

std::shared_ptr<const BoundSampler> TableSampler::bind(const SubcubeCondition& condition) const {
  check_condition_dim(dim_, condition);
  std::vector<BitString> points;
  std::vector<double> weights;
  for (const auto& [x, m] : masses_) {
    if (m > 0.0 && condition.contains(x)) {
      points.push_back(x);
      weights.push_back(m);
    }
  }
  if (points.empty()) return std::make_shared<UniformSubcubeSampler>(condition);
  return std::make_shared<DiscreteSampler>(dim_, std::move(points), weights);
}

double TableSampler::mass(const BitString& x) const {
  auto it = masses_.find(x);
  return it == masses_.end() ? 0.0 : it->second;
}

DiscreteSampler::DiscreteSampler(std::size_t n, std::vector<BitString> points,
                                 const std::vector<double>& weights)
    : dim_(n), points_(std::move(points)) {
  if (points_.empty() || points_.size() != weights.size()) {
    throw InvalidParameter("discrete sampler needs one positive weight per point");
  }
  cumulative_.reserve(weights.size());
  double acc = 0.0;
  for (double w : weights) {
    acc += w;
    cumulative_.push_back(acc);
  }
  if (!(acc > 0.0)) throw InvalidParameter("discrete sampler weights sum to zero");
}

BitString DiscreteSampler::draw(RngStream& rng) const {
  const double u = rng.uniform01() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return points_[static_cast<std::size_t>(it - cumulative_.begin())];
}

}  // namespace cubeprobe
