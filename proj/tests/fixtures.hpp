#pragma once

// Shared instances and brute-force helpers for the test suites. Nothing here
// calls the library's counting or enumeration code.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "cubeprobe/poset.hpp"

namespace fixtures {

// Elements 1..4 with 1<2, 1<3, 2<4 (closure adds 1<4).
inline cubeprobe::Poset kite() {
  return cubeprobe::Poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}});
}

inline cubeprobe::Poset chain(std::size_t k) {
  std::vector<cubeprobe::ElementPair> rel;
  for (std::size_t i = 0; i + 1 < k; ++i) rel.emplace_back(i, i + 1);
  return cubeprobe::Poset::from_relations(k, rel);
}

inline cubeprobe::Poset antichain(std::size_t k) { return cubeprobe::Poset(k); }

// A few more shapes for exhaustive cross-checks (k <= 8).
inline std::vector<cubeprobe::Poset> zoo() {
  using cubeprobe::Poset;
  return {
      kite(),
      chain(1),
      chain(5),
      antichain(3),
      antichain(5),
      Poset::from_relations(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}),          // bowtie
      Poset::from_relations(6, {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}}),  // zigzag
      Poset::from_relations(6, {{0, 1}, {2, 3}, {4, 5}}),                  // three chains
      Poset::from_relations(7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 5}}),
      Poset::from_relations(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}, {0, 5}}),
  };
}

// Every permutation of 0..k-1 that respects the order, via next_permutation.
inline std::vector<std::vector<std::size_t>> brute_force_extensions(const cubeprobe::Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j) {
        if (p.precedes(perm[j], perm[i])) ok = false;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace fixtures
