#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubeprobe/bitstring.hpp"

namespace cubeprobe {

// Entry (a,b) of the poset matrix for a < b in label order:
// Precedes is the matrix's 1 (a before b), Follows its 0, Incomparable its *.
enum class Relation : std::uint8_t { Precedes, Follows, Incomparable, Same };

using ElementPair = std::pair<std::size_t, std::size_t>;

// A partial order on elements 0..k-1, kept transitively closed. Element i
// carries the external label i+1; label order is the base linear order.
class Poset {
 public:
  static constexpr std::size_t kMaxElements = 64;

  Poset() = default;
  // The antichain on k elements.
  explicit Poset(std::size_t k);

  // Closes the given pairs (a,b), meaning a precedes b. Pairs (a,a) are
  // ignored. Throws CycleError if the pairs are cyclic.
  static Poset from_relations(std::size_t k, const std::vector<ElementPair>& relations);

  std::size_t size() const noexcept { return succ_.size(); }

  // Strict order.
  bool precedes(std::size_t a, std::size_t b) const noexcept { return (succ_[a] >> b) & 1U; }
  bool comparable(std::size_t a, std::size_t b) const noexcept {
    return a == b || precedes(a, b) || precedes(b, a);
  }
  Relation relation(std::size_t a, std::size_t b) const noexcept;

  std::uint64_t successors(std::size_t a) const noexcept { return succ_[a]; }
  std::uint64_t predecessors(std::size_t a) const noexcept { return pred_[a]; }
  std::uint64_t all_elements() const noexcept;

  // Elements outside `placed` whose predecessors all lie in `placed`.
  std::uint64_t minimal_outside(std::uint64_t placed) const noexcept;

  // Adds a-before-b and re-closes. Throws ContradictionError when b already
  // precedes a.
  Poset with_relation(std::size_t a, std::size_t b) const;

  // Every strict pair of the closed order, row-major.
  std::vector<ElementPair> relations() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  void add_closed(std::size_t a, std::size_t b);

  std::vector<std::uint64_t> succ_;
  std::vector<std::uint64_t> pred_;
};

// Hypercube coordinates of a poset: its incomparable upper-triangle pairs in
// row-major order.
struct FreeBitMap {
  std::vector<ElementPair> positions;

  std::size_t size() const noexcept { return positions.size(); }
};

FreeBitMap free_bit_map(const Poset& p);

struct MatrixEncoding {
  std::vector<std::string> rows;  // k rows over {'1','0','*'}; the diagonal is '1'
  std::string unrolled;           // upper triangle, row-major
  FreeBitMap free;
};

MatrixEncoding encode_matrix(const Poset& p);

// Fixes free coordinate `free_index` of `map` (1: first element of the pair
// precedes the second, 0: the reverse) and re-closes. `map` is the free-bit
// map of the original instance, so indices stay stable as pairs get decided;
// fixing an already decided pair to its current orientation is a no-op.
// Throws ContradictionError when the bit disagrees with the order.
Poset subcond(const Poset& p, const FreeBitMap& map, std::size_t free_index, std::uint8_t bit);

// Applies every fixed coordinate of `condition` in index order.
Poset apply_condition(const Poset& p, const FreeBitMap& map, const SubcubeCondition& condition);

// Instance documents: {"elements": k, "relations": [[a,b], ...]} with
// 1-based labels and [a,b] meaning a precedes b.
Poset parse_poset(std::string_view text);
Poset load_poset(const std::filesystem::path& path);
// Emits the cover relation only when `cover_only`, else every closed pair.
std::string poset_to_json(const Poset& p, bool cover_only = true);

// Pairs (a,b) with a directly below b.
std::vector<ElementPair> cover_relations(const Poset& p);

}  // namespace cubeprobe
