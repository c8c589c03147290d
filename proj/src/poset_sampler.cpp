#include "cubeprobe/poset_sampler.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>

#include "cubeprobe/errors.hpp"

namespace cubeprobe {

// ---------------------------------------------------------------------------
// Sampler specs

SamplerSpec SamplerSpec::parse(std::string_view text) {
  if (text == "uniform") return uniform();
  if (text == "biased-equal") return biased();
  constexpr std::string_view kPrefix = "biased:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::vector<double> weights;
    std::string_view rest = text.substr(kPrefix.size());
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string item(rest.substr(0, comma));
      std::size_t used = 0;
      double w = 0.0;
      try {
        w = std::stod(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != item.size()) {
        throw ParseError("malformed weight '" + item + "' in sampler spec");
      }
      weights.push_back(w);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (weights.empty()) throw ParseError("sampler spec 'biased:' needs at least one weight");
    return biased(std::move(weights));
  }
  throw ParseError("unknown sampler spec '" + std::string(text) +
                   "' (expected uniform, biased-equal or biased:w1,w2,...)");
}

std::string SamplerSpec::to_string() const {
  if (kind == Kind::Uniform) return "uniform";
  if (weights.empty()) return "biased-equal";
  std::ostringstream out;
  out.precision(17);
  out << "biased:";
  for (std::size_t i = 0; i < weights.size(); ++i) out << (i ? "," : "") << weights[i];
  return out.str();
}

std::vector<double> SamplerSpec::weights_for(std::size_t k) const {
  if (weights.empty()) return std::vector<double>(k, 1.0);
  if (weights.size() != k) {
    throw InvalidParameter("sampler spec has " + std::to_string(weights.size()) +
                           " weights for a poset with " + std::to_string(k) + " elements");
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw InvalidParameter("weights must be positive and finite");
  }
  return weights;
}

// ---------------------------------------------------------------------------
// Walk over downsets

namespace {

// Precomputed conditional walk: node i is a downset of placed elements,
// with the admissible next elements, the node each choice leads to, and the
// cumulative choice probabilities.
class ExtensionWalk final : public BoundSampler {
 public:
  struct Node {
    std::vector<std::uint8_t> elements;
    std::vector<std::uint32_t> children;
    std::vector<double> cumulative;
  };

  ExtensionWalk(std::size_t k, const FreeBitMap& map, std::vector<Node> nodes)
      : k_(k), positions_(map.positions), nodes_(std::move(nodes)) {}

  std::size_t dim() const override { return positions_.size(); }

  BitString draw(RngStream& rng) const override {
    std::vector<std::size_t> rank(k_);
    std::uint32_t at = 0;
    for (std::size_t step = 0; step < k_; ++step) {
      const Node& node = nodes_[at];
      std::size_t c = 0;
      if (node.elements.size() > 1) {
        const double u = rng.uniform01();
        while (c + 1 < node.elements.size() && u >= node.cumulative[c]) ++c;
      }
      rank[node.elements[c]] = step;
      at = node.children[c];
    }
    BitString out(positions_.size());
    for (std::size_t i = 0; i < positions_.size(); ++i) {
      out.set(i, rank[positions_[i].first] < rank[positions_[i].second]);
    }
    return out;
  }

 private:
  std::size_t k_;
  std::vector<ElementPair> positions_;
  std::vector<Node> nodes_;
};

double ratio(const BigInt& num, const BigInt& den) { return to_double(Rational(num, den)); }
double ratio(double num, double den) { return num / den; }

// value(D) = sum over minimal e outside D of step(D, e) * value(D + e), with
// value(all) = 1. Choice probabilities are step(D,e) * value(D+e) / value(D).
template <class Value, class Step>
class WalkBuilder {
 public:
  WalkBuilder(const Poset& conditioned, Step step) : poset_(conditioned), step_(std::move(step)) {}

  std::vector<ExtensionWalk::Node> run() {
    visit(0);
    return std::move(nodes_);
  }

 private:
  std::uint32_t visit(std::uint64_t placed) {
    if (auto it = index_.find(placed); it != index_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    index_.emplace(placed, id);
    nodes_.emplace_back();
    values_.emplace_back(1);
    if (placed == poset_.all_elements()) return id;

    ExtensionWalk::Node node;
    std::vector<Value> weights;
    std::uint64_t candidates = poset_.minimal_outside(placed);
    while (candidates != 0) {
      const auto e = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      const std::uint32_t child = visit(placed | (std::uint64_t{1} << e));
      node.elements.push_back(static_cast<std::uint8_t>(e));
      node.children.push_back(child);
      weights.push_back(step_(placed, e) * values_[child]);
    }
    Value total = 0;
    for (const auto& w : weights) total += w;
    Value partial = 0;
    for (const auto& w : weights) {
      partial += w;
      node.cumulative.push_back(ratio(partial, total));
    }
    node.cumulative.back() = 1.0;
    nodes_[id] = std::move(node);
    values_[id] = total;
    return id;
  }

  const Poset& poset_;
  Step step_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<ExtensionWalk::Node> nodes_;
  std::vector<Value> values_;
};

template <class Value, class Step>
std::shared_ptr<const BoundSampler> make_walk(const Poset& conditioned, const FreeBitMap& map,
                                              Step step) {
  WalkBuilder<Value, Step> builder(conditioned, std::move(step));
  return std::make_shared<ExtensionWalk>(conditioned.size(), map, builder.run());
}

constexpr std::size_t kMaxCachedBindings = 4096;

}  // namespace

// ---------------------------------------------------------------------------
// ExtensionSampler

ExtensionSampler::ExtensionSampler(Poset poset)
    : poset_(std::move(poset)), map_(free_bit_map(poset_)) {
  if (poset_.size() > kCountingCap) {
    throw TooLarge("extension samplers are limited to " + std::to_string(kCountingCap) +
                   " elements");
  }
}

std::shared_ptr<const BoundSampler> ExtensionSampler::bind(const SubcubeCondition& condition) const {
  if (condition.dim() != dim()) {
    throw DimensionMismatch("condition has dimension " + std::to_string(condition.dim()) +
                            ", sampler has " + std::to_string(dim()));
  }
  const std::string key = condition.key();
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  std::shared_ptr<const BoundSampler> bound;
  try {
    bound = build(apply_condition(poset_, map_, condition));
  } catch (const ContradictionError&) {
    bound = std::make_shared<UniformSubcubeSampler>(condition);
  }
  std::lock_guard lock(cache_mutex_);
  if (cache_.size() >= kMaxCachedBindings) cache_.clear();
  cache_.emplace(key, bound);
  return bound;
}

// ---------------------------------------------------------------------------
// Uniform

UniformExtensionSampler::UniformExtensionSampler(Poset poset)
    : ExtensionSampler(std::move(poset)), count_(count_extensions(this->poset())) {}

double UniformExtensionSampler::mass(const BitString& x) const {
  if (x.size() != dim()) throw DimensionMismatch("point has the wrong dimension");
  try {
    apply_condition(poset(), free_map(), prefix_condition(x, x.size()));
  } catch (const ContradictionError&) {
    return 0.0;
  }
  return to_double(Rational(BigInt(1), count_));
}

std::shared_ptr<const BoundSampler> UniformExtensionSampler::build(const Poset& conditioned) const {
  return make_walk<BigInt>(conditioned, free_map(),
                           [](std::uint64_t, std::size_t) { return BigInt(1); });
}

// ---------------------------------------------------------------------------
// Biased

BiasedExtensionSampler::BiasedExtensionSampler(Poset poset, std::vector<double> weights)
    : ExtensionSampler(std::move(poset)),
      weights_(SamplerSpec::biased(std::move(weights)).weights_for(this->poset().size())) {}

double BiasedExtensionSampler::mass(const BitString& x) const {
  LinearExtension e;
  try {
    e = bits_to_extension(poset(), free_map(), x);
  } catch (const InvalidEncoding&) {
    return 0.0;
  }
  double m = 1.0;
  std::uint64_t placed = 0;
  for (std::size_t el : e.order) {
    double total = 0.0;
    std::uint64_t minimal = poset().minimal_outside(placed);
    while (minimal != 0) {
      total += weights_[static_cast<std::size_t>(std::countr_zero(minimal))];
      minimal &= minimal - 1;
    }
    m *= weights_[el] / total;
    placed |= std::uint64_t{1} << el;
  }
  return m;
}

std::shared_ptr<const BoundSampler> BiasedExtensionSampler::build(const Poset& conditioned) const {
  // Step ratios come from the unconditioned poset: the walk is the greedy
  // sampler restricted to extensions of `conditioned`.
  const Poset& original = poset();
  const std::vector<double>& w = weights_;
  return make_walk<double>(conditioned, free_map(), [&original, &w](std::uint64_t placed, std::size_t e) {
    double total = 0.0;
    std::uint64_t minimal = original.minimal_outside(placed);
    while (minimal != 0) {
      total += w[static_cast<std::size_t>(std::countr_zero(minimal))];
      minimal &= minimal - 1;
    }
    return w[e] / total;
  });
}

std::unique_ptr<ExtensionSampler> make_sampler(const SamplerSpec& spec, const Poset& poset) {
  if (spec.kind == SamplerSpec::Kind::Uniform) {
    return std::make_unique<UniformExtensionSampler>(poset);
  }
  return std::make_unique<BiasedExtensionSampler>(poset, spec.weights_for(poset.size()));
}

}  // namespace cubeprobe
