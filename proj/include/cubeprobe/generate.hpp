#pragma once

#include <cstddef>
#include <string>

#include "cubeprobe/poset.hpp"

namespace cubeprobe {

enum class InstanceFamily { AvgDeg, Bipartite };

struct InstanceId {
  InstanceFamily family = InstanceFamily::AvgDeg;
  double param = 3.0;     // average indegree, or the orientation probability p
  std::size_t size = 8;   // element count
  std::size_t index = 0;  // replicate number

  // "avgdeg_3_008_2", "bipartite_0.2_010_0".
  std::string name() const;
  // Inverse of name(); ParseError on anything else.
  static InstanceId parse(const std::string& name);
};

// Deterministic in the instance name.
//
// avgdeg_d: a random DAG on a hidden random topological order, each forward
// pair an edge with probability min(1, 2d/(size-1)), so the expected mean
// indegree is d.
// bipartite_p: elements split at random into A (floor(size/2)) and B; each
// pair (a,b) in A x B gets a before b with probability p.
Poset generate_instance(const InstanceId& id);

}  // namespace cubeprobe
