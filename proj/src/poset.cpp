#include "cubeprobe/poset.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cubeprobe/errors.hpp"

namespace cubeprobe {

namespace {

constexpr std::uint64_t bit_of(std::size_t i) noexcept { return std::uint64_t{1} << i; }

template <class F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask != 0) {
    f(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

}  // namespace

Poset::Poset(std::size_t k) : succ_(k, 0), pred_(k, 0) {
  if (k > kMaxElements) {
    throw TooLarge("posets are limited to " + std::to_string(kMaxElements) + " elements");
  }
}

Poset Poset::from_relations(std::size_t k, const std::vector<ElementPair>& relations) {
  Poset p(k);
  for (const auto& [a, b] : relations) {
    if (a >= k || b >= k) {
      throw InvalidParameter("relation (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                             ") names an element outside 1.." + std::to_string(k));
    }
    if (a == b) continue;
    if (p.precedes(b, a)) {
      throw CycleError("relations are cyclic: " + std::to_string(a + 1) + " and " +
                       std::to_string(b + 1) + " precede each other");
    }
    p.add_closed(a, b);
  }
  return p;
}

Relation Poset::relation(std::size_t a, std::size_t b) const noexcept {
  if (a == b) return Relation::Same;
  if (precedes(a, b)) return Relation::Precedes;
  if (precedes(b, a)) return Relation::Follows;
  return Relation::Incomparable;
}

std::uint64_t Poset::all_elements() const noexcept {
  return size() == 64 ? ~std::uint64_t{0} : bit_of(size()) - 1;
}

std::uint64_t Poset::minimal_outside(std::uint64_t placed) const noexcept {
  std::uint64_t out = 0;
  for_each_bit(all_elements() & ~placed, [&](std::size_t e) {
    if ((pred_[e] & ~placed) == 0) out |= bit_of(e);
  });
  return out;
}

Poset Poset::with_relation(std::size_t a, std::size_t b) const {
  if (a == b || precedes(b, a)) {
    throw ContradictionError("adding " + std::to_string(a + 1) + " before " +
                             std::to_string(b + 1) + " closes a cycle");
  }
  Poset out = *this;
  out.add_closed(a, b);
  return out;
}

void Poset::add_closed(std::size_t a, std::size_t b) {
  // Everything at or below a now precedes everything at or above b.
  const std::uint64_t below = pred_[a] | bit_of(a);
  const std::uint64_t above = succ_[b] | bit_of(b);
  for_each_bit(below, [&](std::size_t x) { succ_[x] |= above; });
  for_each_bit(above, [&](std::size_t y) { pred_[y] |= below; });
}

std::vector<ElementPair> Poset::relations() const {
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for_each_bit(succ_[a], [&](std::size_t b) { out.emplace_back(a, b); });
  }
  return out;
}

std::vector<ElementPair> cover_relations(const Poset& p) {
  std::vector<ElementPair> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const std::uint64_t succ = p.successors(a);
    for_each_bit(succ, [&](std::size_t b) {
      // b covers a unless some successor of a lies strictly below b.
      if ((succ & p.predecessors(b)) == 0) out.emplace_back(a, b);
    });
  }
  return out;
}

FreeBitMap free_bit_map(const Poset& p) {
  FreeBitMap map;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (!p.comparable(a, b)) map.positions.emplace_back(a, b);
    }
  }
  return map;
}

MatrixEncoding encode_matrix(const Poset& p) {
  MatrixEncoding enc;
  enc.rows.assign(p.size(), std::string(p.size(), '1'));
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      switch (p.relation(a, b)) {
        case Relation::Follows: enc.rows[a][b] = '0'; break;
        case Relation::Incomparable: enc.rows[a][b] = '*'; break;
        default: break;
      }
    }
  }
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) enc.unrolled += enc.rows[a][b];
  }
  enc.free = free_bit_map(p);
  return enc;
}

Poset subcond(const Poset& p, const FreeBitMap& map, std::size_t free_index, std::uint8_t bit) {
  if (free_index >= map.size()) {
    throw IndexOutOfRange("free index " + std::to_string(free_index) + " out of range for n=" +
                          std::to_string(map.size()));
  }
  auto [a, b] = map.positions[free_index];
  if (bit == 0) std::swap(a, b);
  if (p.precedes(a, b)) return p;
  return p.with_relation(a, b);
}

Poset apply_condition(const Poset& p, const FreeBitMap& map, const SubcubeCondition& condition) {
  if (condition.dim() != map.size()) {
    throw DimensionMismatch("condition has dimension " + std::to_string(condition.dim()) +
                            ", poset has " + std::to_string(map.size()) + " free bits");
  }
  Poset out = p;
  for (const auto& [index, bit] : condition.fixed()) out = subcond(out, map, index, bit);
  return out;
}

Poset parse_poset(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_number_integer()) {
    throw ParseError("instance document needs an integer field \"elements\"");
  }
  const auto k = doc["elements"].get<long long>();
  if (k < 0) throw ParseError("\"elements\" must be non-negative");
  if (static_cast<unsigned long long>(k) > Poset::kMaxElements) {
    throw TooLarge("posets are limited to " + std::to_string(Poset::kMaxElements) + " elements");
  }
  std::vector<ElementPair> rel;
  if (doc.contains("relations")) {
    const auto& list = doc["relations"];
    if (!list.is_array()) throw ParseError("\"relations\" must be a list of [a,b] pairs");
    for (const auto& item : list) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer()) {
        throw ParseError("each relation must be a pair of integer labels");
      }
      const auto a = item[0].get<long long>();
      const auto b = item[1].get<long long>();
      if (a < 1 || b < 1 || a > k || b > k) {
        throw ParseError("relation [" + std::to_string(a) + "," + std::to_string(b) +
                         "] names an element outside 1.." + std::to_string(k));
      }
      rel.emplace_back(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
    }
  }
  return Poset::from_relations(static_cast<std::size_t>(k), rel);
}

Poset load_poset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

std::string poset_to_json(const Poset& p, bool cover_only) {
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& [a, b] : cover_only ? cover_relations(p) : p.relations()) {
    rel.push_back({a + 1, b + 1});
  }
  nlohmann::json doc;
  doc["elements"] = p.size();
  doc["relations"] = std::move(rel);
  return doc.dump();
}

}  // namespace cubeprobe
