#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cubeprobe/extensions.hpp"
#include "cubeprobe/numeric.hpp"
#include "cubeprobe/poset.hpp"
#include "cubeprobe/sampler.hpp"

namespace cubeprobe {

// Named sampler presets: "uniform", "biased-equal", "biased:w1,w2,...".
struct SamplerSpec {
  enum class Kind { Uniform, Biased };

  Kind kind = Kind::Uniform;
  std::vector<double> weights;  // Biased only; empty means all weights equal

  static SamplerSpec uniform() { return {}; }
  static SamplerSpec biased(std::vector<double> weights = {}) {
    return {Kind::Biased, std::move(weights)};
  }

  // Throws ParseError on unknown names or malformed weight lists.
  static SamplerSpec parse(std::string_view text);
  std::string to_string() const;

  // One weight per element; checks positivity and count.
  std::vector<double> weights_for(std::size_t k) const;
};

// Linear extensions of a poset as points of its free-bit cube.
//
// A draw walks the elements first to last, each step choosing among the
// currently minimal elements. Subclasses provide the step weights through a
// table over downsets; bind() rewrites the poset with subcond() for every
// fixed bit and conditions the walk exactly on the result, which keeps the
// sampler self-reducible. Contradictory conditions fall back to uniform bits
// over the subcube. Bound samplers are cached per condition.
class ExtensionSampler : public ConditionalSampler {
 public:
  explicit ExtensionSampler(Poset poset);

  std::size_t dim() const override { return map_.size(); }
  std::shared_ptr<const BoundSampler> bind(const SubcubeCondition& condition) const override;

  const Poset& poset() const noexcept { return poset_; }
  const FreeBitMap& free_map() const noexcept { return map_; }

 protected:
  // Builds the exact conditional walk over extensions of `conditioned`.
  virtual std::shared_ptr<const BoundSampler> build(const Poset& conditioned) const = 0;

 private:
  Poset poset_;
  FreeBitMap map_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const BoundSampler>> cache_;
};

// Exactly uniform over L(P): the next element is chosen with probability
// proportional to the number of extensions that continue with it. Doubles as
// the known distribution with mass 1/|L(P)| on valid encodings.
class UniformExtensionSampler final : public ExtensionSampler, public KnownDistribution {
 public:
  // TooLarge beyond the counting cap.
  explicit UniformExtensionSampler(Poset poset);

  std::size_t dim() const override { return ExtensionSampler::dim(); }
  double mass(const BitString& x) const override;
  const BigInt& extension_count() const noexcept { return count_; }

 protected:
  std::shared_ptr<const BoundSampler> build(const Poset& conditioned) const override;

 private:
  BigInt count_;
};

// Greedy weighted walk: among the minimal elements of P, element e is chosen
// next with probability w_e / (sum of minimal weights). Conditioned draws
// follow the same distribution restricted to the subcube.
class BiasedExtensionSampler final : public ExtensionSampler, public KnownDistribution {
 public:
  BiasedExtensionSampler(Poset poset, std::vector<double> weights);

  std::size_t dim() const override { return ExtensionSampler::dim(); }
  // Product of the step ratios along the encoded extension; 0 on invalid bits.
  double mass(const BitString& x) const override;
  const std::vector<double>& weights() const noexcept { return weights_; }

 protected:
  std::shared_ptr<const BoundSampler> build(const Poset& conditioned) const override;

 private:
  std::vector<double> weights_;
};

std::unique_ptr<ExtensionSampler> make_sampler(const SamplerSpec& spec, const Poset& poset);

}  // namespace cubeprobe
