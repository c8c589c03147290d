#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cubeprobe {

// A point of {0,1}^n.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n) : bits_(n, 0) {}
  BitString(std::initializer_list<int> bits);

  // Parses a string of '0'/'1' characters; throws ParseError otherwise.
  static BitString from_string(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
  void set(std::size_t i, bool value) noexcept { bits_[i] = value ? 1 : 0; }

  std::string to_string() const;

  friend auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// A subcube of {0,1}^n: some coordinates fixed, the rest free. The empty
// condition is the full cube.
class SubcubeCondition {
 public:
  using Entry = std::pair<std::size_t, std::uint8_t>;

  SubcubeCondition() = default;
  explicit SubcubeCondition(std::size_t n) : dim_(n) {}

  std::size_t dim() const noexcept { return dim_; }
  // Fixed coordinates, sorted by index.
  const std::vector<Entry>& fixed() const noexcept { return fixed_; }
  std::size_t fixed_count() const noexcept { return fixed_.size(); }

  bool is_fixed(std::size_t index) const noexcept;
  // Bit at a fixed coordinate; IndexOutOfRange if the coordinate is free.
  std::uint8_t value(std::size_t index) const;

  // True iff x has this dimension and agrees with every fixed coordinate.
  bool contains(const BitString& x) const noexcept;

  // Canonical text such as "0=1,3=0"; used as a cache key.
  std::string key() const;

  friend bool operator==(const SubcubeCondition&, const SubcubeCondition&) = default;

 private:
  friend SubcubeCondition make_condition(std::size_t, const std::vector<Entry>&);

  std::size_t dim_ = 0;
  std::vector<Entry> fixed_;
};

// Builds a condition over {0,1}^n. Repeating an index with the same bit is
// harmless; conflicting bits raise DuplicateCoordinate.
SubcubeCondition make_condition(std::size_t n, const std::vector<SubcubeCondition::Entry>& pairs);

// Coordinates 0..i-1 fixed to the bits of x.
SubcubeCondition prefix_condition(const BitString& x, std::size_t i);

}  // namespace cubeprobe
