#include "cubeprobe/generate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <vector>

#include "cubeprobe/errors.hpp"
#include "cubeprobe/rng.hpp"

namespace cubeprobe {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_param(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::vector<std::size_t> shuffled(std::size_t n, RngStream& rng) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
  return v;
}

}  // namespace

std::string InstanceId::name() const {
  char size_buf[16];
  std::snprintf(size_buf, sizeof size_buf, "%03zu", size);
  return std::string(family == InstanceFamily::AvgDeg ? "avgdeg" : "bipartite") + "_" +
         format_param(param) + "_" + size_buf + "_" + std::to_string(index);
}

InstanceId InstanceId::parse(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream in(name);
  for (std::string item; std::getline(in, item, '_');) parts.push_back(item);
  if (parts.size() != 4) throw ParseError("instance names look like avgdeg_3_008_2: " + name);
  InstanceId id;
  if (parts[0] == "avgdeg") {
    id.family = InstanceFamily::AvgDeg;
  } else if (parts[0] == "bipartite") {
    id.family = InstanceFamily::Bipartite;
  } else {
    throw ParseError("unknown instance family '" + parts[0] + "'");
  }
  try {
    id.param = std::stod(parts[1]);
    id.size = std::stoul(parts[2]);
    id.index = std::stoul(parts[3]);
  } catch (const std::exception&) {
    throw ParseError("malformed instance name " + name);
  }
  return id;
}

Poset generate_instance(const InstanceId& id) {
  if (id.size > Poset::kMaxElements) throw TooLarge("instance size exceeds the element limit");
  if (id.family == InstanceFamily::Bipartite && !(id.param >= 0.0 && id.param <= 1.0)) {
    throw InvalidParameter("bipartite orientation probability must lie in [0,1]");
  }
  if (id.family == InstanceFamily::AvgDeg && !(id.param >= 0.0)) {
    throw InvalidParameter("average indegree must be non-negative");
  }
  RngStream rng(fnv1a(id.name()), 0);
  const std::vector<std::size_t> perm = shuffled(id.size, rng);
  std::vector<ElementPair> relations;

  if (id.family == InstanceFamily::AvgDeg) {
    const double p = id.size < 2 ? 0.0 : std::min(1.0, 2.0 * id.param / static_cast<double>(id.size - 1));
    for (std::size_t i = 0; i < id.size; ++i) {
      for (std::size_t j = i + 1; j < id.size; ++j) {
        if (rng.bernoulli(p)) relations.emplace_back(perm[i], perm[j]);
      }
    }
  } else {
    const std::size_t half = id.size / 2;
    for (std::size_t i = 0; i < half; ++i) {
      for (std::size_t j = half; j < id.size; ++j) {
        if (rng.bernoulli(id.param)) relations.emplace_back(perm[i], perm[j]);
      }
    }
  }
  return Poset::from_relations(id.size, relations);
}

}  // namespace cubeprobe
