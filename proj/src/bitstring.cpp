#include "cubeprobe/bitstring.hpp"

#include <algorithm>

#include "cubeprobe/errors.hpp"

namespace cubeprobe {

BitString::BitString(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw ParseError("bit values must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitString BitString::from_string(std::string_view text) {
  BitString out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.bits_[i] = 1;
    } else if (text[i] != '0') {
      throw ParseError("bit string may contain only '0' and '1': " + std::string(text));
    }
  }
  return out;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

bool SubcubeCondition::is_fixed(std::size_t index) const noexcept {
  auto it = std::lower_bound(fixed_.begin(), fixed_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  return it != fixed_.end() && it->first == index;
}

std::uint8_t SubcubeCondition::value(std::size_t index) const {
  auto it = std::lower_bound(fixed_.begin(), fixed_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  if (it == fixed_.end() || it->first != index) {
    throw IndexOutOfRange("coordinate " + std::to_string(index) + " is not fixed");
  }
  return it->second;
}

bool SubcubeCondition::contains(const BitString& x) const noexcept {
  if (x.size() != dim_) return false;
  return std::all_of(fixed_.begin(), fixed_.end(),
                     [&](const Entry& e) { return x[e.first] == e.second; });
}

std::string SubcubeCondition::key() const {
  std::string out;
  for (const auto& [index, bit] : fixed_) {
    if (!out.empty()) out += ',';
    out += std::to_string(index);
    out += '=';
    out += bit ? '1' : '0';
  }
  return out;
}

SubcubeCondition make_condition(std::size_t n, const std::vector<SubcubeCondition::Entry>& pairs) {
  SubcubeCondition cond(n);
  for (const auto& [index, bit] : pairs) {
    if (index >= n) {
      throw IndexOutOfRange("coordinate " + std::to_string(index) + " out of range for n=" +
                            std::to_string(n));
    }
    if (bit > 1) throw InvalidParameter("condition bits must be 0 or 1");
    cond.fixed_.emplace_back(index, bit);
  }
  std::sort(cond.fixed_.begin(), cond.fixed_.end());
  for (std::size_t i = 1; i < cond.fixed_.size(); ++i) {
    if (cond.fixed_[i].first == cond.fixed_[i - 1].first &&
        cond.fixed_[i].second != cond.fixed_[i - 1].second) {
      throw DuplicateCoordinate("coordinate " + std::to_string(cond.fixed_[i].first) +
                                " fixed to both 0 and 1");
    }
  }
  cond.fixed_.erase(std::unique(cond.fixed_.begin(), cond.fixed_.end()), cond.fixed_.end());
  return cond;
}

SubcubeCondition prefix_condition(const BitString& x, std::size_t i) {
  if (i > x.size()) {
    throw IndexOutOfRange("prefix length " + std::to_string(i) + " exceeds n=" +
                          std::to_string(x.size()));
  }
  std::vector<SubcubeCondition::Entry> pairs;
  pairs.reserve(i);
  for (std::size_t j = 0; j < i; ++j) pairs.emplace_back(j, x[j]);
  return make_condition(x.size(), pairs);
}

}  // namespace cubeprobe
