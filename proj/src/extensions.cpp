#include "cubeprobe/extensions.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "cubeprobe/errors.hpp"

namespace cubeprobe {

bool respects(const Poset& p, const LinearExtension& e) {
  if (e.order.size() != p.size()) return false;
  std::vector<std::size_t> position(p.size(), p.size());
  for (std::size_t i = 0; i < e.order.size(); ++i) {
    if (e.order[i] >= p.size() || position[e.order[i]] != p.size()) return false;
    position[e.order[i]] = i;
  }
  for (const auto& [a, b] : p.relations()) {
    if (position[a] > position[b]) return false;
  }
  return true;
}

namespace {

void enumerate_from(const Poset& p, std::uint64_t placed, std::vector<std::size_t>& prefix,
                    std::vector<LinearExtension>& out) {
  if (placed == p.all_elements()) {
    out.push_back({prefix});
    return;
  }
  std::uint64_t candidates = p.minimal_outside(placed);
  while (candidates != 0) {
    const auto e = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    prefix.push_back(e);
    enumerate_from(p, placed | (std::uint64_t{1} << e), prefix, out);
    prefix.pop_back();
  }
}

BigInt count_from(const Poset& p, std::uint64_t placed, std::unordered_map<std::uint64_t, BigInt>& memo) {
  if (placed == p.all_elements()) return 1;
  if (auto it = memo.find(placed); it != memo.end()) return it->second;
  BigInt total = 0;
  std::uint64_t candidates = p.minimal_outside(placed);
  while (candidates != 0) {
    const auto e = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    total += count_from(p, placed | (std::uint64_t{1} << e), memo);
  }
  memo.emplace(placed, total);
  return total;
}

}  // namespace

std::vector<LinearExtension> enumerate_extensions(const Poset& p, std::size_t cap) {
  if (p.size() > cap) {
    throw TooLarge("enumeration is limited to " + std::to_string(cap) + " elements");
  }
  std::vector<LinearExtension> out;
  std::vector<std::size_t> prefix;
  prefix.reserve(p.size());
  enumerate_from(p, 0, prefix, out);
  return out;
}

BigInt count_extensions(const Poset& p, std::size_t cap) {
  if (p.size() > cap) {
    throw TooLarge("counting is limited to " + std::to_string(cap) + " elements");
  }
  std::unordered_map<std::uint64_t, BigInt> memo;
  return count_from(p, 0, memo);
}

BitString extension_to_bits(const LinearExtension& e, const FreeBitMap& map) {
  std::vector<std::size_t> position(e.order.size());
  for (std::size_t i = 0; i < e.order.size(); ++i) position[e.order[i]] = i;
  BitString bits(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto& [a, b] = map.positions[i];
    bits.set(i, position[a] < position[b]);
  }
  return bits;
}

LinearExtension bits_to_extension(const Poset& p, const FreeBitMap& map, const BitString& bits) {
  if (bits.size() != map.size()) {
    throw DimensionMismatch("expected " + std::to_string(map.size()) + " free bits, got " +
                            std::to_string(bits.size()));
  }
  Poset total = p;
  try {
    for (std::size_t i = 0; i < bits.size(); ++i) total = subcond(total, map, i, bits[i]);
  } catch (const ContradictionError&) {
    throw InvalidEncoding("bits " + bits.to_string() + " encode no linear extension");
  }
  // Every pair is now decided; an element's rank is its predecessor count.
  LinearExtension e;
  e.order.assign(p.size(), p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto& slot = e.order[static_cast<std::size_t>(std::popcount(total.predecessors(x)))];
    if (slot != p.size()) throw InvalidEncoding("free-bit map leaves some pairs undecided");
    slot = x;
  }
  return e;
}

}  // namespace cubeprobe
