#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "cubeprobe/bitstring.hpp"
#include "cubeprobe/rng.hpp"

namespace cubeprobe {

// A sampler already restricted to one subcube. Draws never disagree with
// the condition it was bound to. Implementations are immutable, so one bound
// sampler may be shared by concurrent callers that bring their own streams.
class BoundSampler {
 public:
  virtual ~BoundSampler() = default;
  virtual std::size_t dim() const = 0;
  virtual BitString draw(RngStream& rng) const = 0;
};

// Subcube-conditional access to an unknown sampler.
//
// bind() does whatever rewriting of the instance the condition requires
// and returns something cheap to draw from repeatedly. When the condition
// has zero mass the bound sampler is uniform over the subcube.
class ConditionalSampler {
 public:
  virtual ~ConditionalSampler() = default;
  virtual std::size_t dim() const = 0;
  virtual std::shared_ptr<const BoundSampler> bind(const SubcubeCondition& condition) const = 0;

  BitString draw(const SubcubeCondition& condition, RngStream& rng) const {
    return bind(condition)->draw(rng);
  }
};

// A distribution whose mass is exactly computable at any point.
class KnownDistribution {
 public:
  virtual ~KnownDistribution() = default;
  virtual std::size_t dim() const = 0;
  virtual double mass(const BitString& x) const = 0;
};

// Q(x), checking the dimension.
double evaluate_mass(const KnownDistribution& known, const BitString& x);

// Fixed coordinates copied from the condition, free ones fair coins.
class UniformSubcubeSampler final : public BoundSampler {
 public:
  explicit UniformSubcubeSampler(SubcubeCondition condition) : condition_(std::move(condition)) {}
  std::size_t dim() const override { return condition_.dim(); }
  BitString draw(RngStream& rng) const override;

 private:
  SubcubeCondition condition_;
};

// Independent coordinates with Pr[x_i = 1] = p[i].
class ProductSampler final : public ConditionalSampler, public KnownDistribution {
 public:
  explicit ProductSampler(std::vector<double> one_probabilities);

  std::size_t dim() const override { return probs_.size(); }
  std::shared_ptr<const BoundSampler> bind(const SubcubeCondition& condition) const override;
  double mass(const BitString& x) const override;

  const std::vector<double>& one_probabilities() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

// An explicit mass table over {0,1}^n. Conditioning is exact: the support is
// filtered by the condition and renormalised.
class TableSampler final : public ConditionalSampler, public KnownDistribution {
 public:
  // Masses must be non-negative and sum to 1 within 1e-9.
  TableSampler(std::size_t n, std::map<BitString, double> masses);

  std::size_t dim() const override { return dim_; }
  std::shared_ptr<const BoundSampler> bind(const SubcubeCondition& condition) const override;
  double mass(const BitString& x) const override;

  const std::map<BitString, double>& masses() const noexcept { return masses_; }

 private:
  std::size_t dim_;
  std::map<BitString, double> masses_;
};

// Draws from a finite list of points with the given cumulative weights.
// Used by the table and poset samplers once the support is known.
class DiscreteSampler final : public BoundSampler {
 public:
  DiscreteSampler(std::size_t n, std::vector<BitString> points, const std::vector<double>& weights);
  std::size_t dim() const override { return dim_; }
  BitString draw(RngStream& rng) const override;

 private:
  std::size_t dim_;
  std::vector<BitString> points_;
  std::vector<double> cumulative_;
};

}  // namespace cubeprobe
