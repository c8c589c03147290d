#pragma once

#include <cstddef>
#include <vector>

#include "cubeprobe/bitstring.hpp"
#include "cubeprobe/numeric.hpp"
#include "cubeprobe/poset.hpp"

namespace cubeprobe {

// A total order of the elements, first to last.
struct LinearExtension {
  std::vector<std::size_t> order;

  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
  friend auto operator<=>(const LinearExtension&, const LinearExtension&) = default;
};

inline constexpr std::size_t kEnumerationCap = 10;
inline constexpr std::size_t kCountingCap = 20;

bool respects(const Poset& p, const LinearExtension& e);

// All linear extensions in lexicographic order of labels. TooLarge beyond cap.
std::vector<LinearExtension> enumerate_extensions(const Poset& p, std::size_t cap = kEnumerationCap);

// |L(P)| by dynamic programming over downsets. TooLarge beyond cap.
BigInt count_extensions(const Poset& p, std::size_t cap = kCountingCap);

// Bit for pair (a,b) is 1 iff a comes before b.
BitString extension_to_bits(const LinearExtension& e, const FreeBitMap& map);

// Inverse of extension_to_bits; InvalidEncoding when the bits close a cycle.
LinearExtension bits_to_extension(const Poset& p, const FreeBitMap& map, const BitString& bits);

}  // namespace cubeprobe
