#include "cubeprobe/oracle.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "cubeprobe/errors.hpp"
#include "cubeprobe/extensions.hpp"

namespace cubeprobe {

Rational ExactDistribution::mass(const BitString& x) const {
  auto it = support.find(x);
  return it == support.end() ? Rational(0) : it->second;
}

ExactDistribution exact_distribution(const SamplerSpec& spec, const Poset& p, std::size_t cap) {
  const auto extensions = enumerate_extensions(p, cap);
  const FreeBitMap map = free_bit_map(p);
  ExactDistribution dist;
  dist.n = map.size();

  if (spec.kind == SamplerSpec::Kind::Uniform) {
    const Rational each(BigInt(1), BigInt(extensions.size()));
    for (const auto& e : extensions) dist.support[extension_to_bits(e, map)] += each;
    return dist;
  }

  std::vector<Rational> weights;
  for (double w : spec.weights_for(p.size())) weights.push_back(exact_rational(w));
  for (const auto& e : extensions) {
    Rational m = 1;
    std::uint64_t placed = 0;
    for (std::size_t el : e.order) {
      Rational total = 0;
      std::uint64_t minimal = p.minimal_outside(placed);
      while (minimal != 0) {
        total += weights[static_cast<std::size_t>(std::countr_zero(minimal))];
        minimal &= minimal - 1;
      }
      m *= weights[el] / total;
      placed |= std::uint64_t{1} << el;
    }
    dist.support[extension_to_bits(e, map)] += m;
  }
  return dist;
}

Rational exact_tv(const ExactDistribution& p, const ExactDistribution& q) {
  if (p.n != q.n) {
    throw DimensionMismatch("distributions have dimensions " + std::to_string(p.n) + " and " +
                            std::to_string(q.n));
  }
  Rational tv = 0;
  for (const auto& [x, px] : p.support) {
    const Rational diff = px - q.mass(x);
    if (diff > 0) tv += diff;
  }
  return tv;
}

Rational exact_marginal(const ExactDistribution& dist, const SubcubeCondition& prefix,
                        std::size_t coord) {
  if (coord >= dist.n) throw IndexOutOfRange("coordinate " + std::to_string(coord) + " out of range");
  if (prefix.dim() != dist.n) throw DimensionMismatch("condition has the wrong dimension");
  Rational inside = 0;
  Rational ones = 0;
  for (const auto& [x, m] : dist.support) {
    if (!prefix.contains(x)) continue;
    inside += m;
    if (x[coord]) ones += m;
  }
  if (inside == 0) throw ZeroMassPrefix("condition {" + prefix.key() + "} has zero mass");
  return ones / inside;
}

std::vector<double> skewed_weights_for_tv(const Poset& p, const Rational& target) {
  const ExactDistribution uniform = exact_distribution(SamplerSpec::uniform(), p);
  for (int e = 1; e <= 40; ++e) {
    const double s = std::ldexp(1.0, e);
    std::vector<double> weights(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      weights[i] = std::pow(s, static_cast<double>(p.size() - 1 - i));
    }
    const auto biased = exact_distribution(SamplerSpec::biased(weights), p);
    if (exact_tv(biased, uniform) >= target) return weights;
  }
  throw InvalidParameter("no skewed weighting reaches the requested distance");
}

}  // namespace cubeprobe
