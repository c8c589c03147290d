#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cubeprobe/bitstring.hpp"
#include "cubeprobe/numeric.hpp"
#include "cubeprobe/poset.hpp"
#include "cubeprobe/poset_sampler.hpp"

namespace cubeprobe {

// Brute-force ground truth for small posets. All arithmetic is exact.

struct ExactDistribution {
  std::size_t n = 0;
  std::map<BitString, Rational> support;  // zero-mass points are omitted

  Rational mass(const BitString& x) const;
};

// Output distribution of a preset sampler over the free-bit cube of `p`,
// by enumerating L(P). Biased weights enter as the exact values of their
// doubles. TooLarge beyond the enumeration cap.
ExactDistribution exact_distribution(const SamplerSpec& spec, const Poset& p,
                                     std::size_t cap = kEnumerationCap);

// Sum over x of max(0, P(x) - Q(x)). DimensionMismatch on unequal n.
Rational exact_tv(const ExactDistribution& p, const ExactDistribution& q);

// Pr[x_coord = 1 | x agrees with prefix]. ZeroMassPrefix if the prefix has
// no mass; IndexOutOfRange if coord is out of range.
Rational exact_marginal(const ExactDistribution& dist, const SubcubeCondition& prefix,
                        std::size_t coord);

// Weights (s^(k-1), ..., s, 1) on elements in label order, doubling s from
// 2 until the biased sampler's exact distance from uniform reaches `target`.
// InvalidParameter if no s up to 2^40 gets there.
std::vector<double> skewed_weights_for_tv(const Poset& p, const Rational& target);

}  // namespace cubeprobe
