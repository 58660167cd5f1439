#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace nilgraph {

/// Subset of an enumerated group, as a bit-vector over element indices.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), bits_((universe + 63) / 64) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  template <typename Range>
  static ElementSet of(std::size_t universe, const Range &indices) {
    ElementSet s(universe);
    for (auto i : indices) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
  void insert(std::size_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : bits_) {
      if (w) return false;
    }
    return true;
  }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> out;
    for (std::size_t b = 0; b < bits_.size(); ++b) {
      for (std::uint64_t w = bits_[b]; w; w &= w - 1) {
        out.push_back(static_cast<std::uint32_t>(b * 64 + std::countr_zero(w)));
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn &&fn) const {
    for (std::size_t b = 0; b < bits_.size(); ++b) {
      for (std::uint64_t w = bits_[b]; w; w &= w - 1) {
        fn(static_cast<std::uint32_t>(b * 64 + std::countr_zero(w)));
      }
    }
  }

  bool subset_of(const ElementSet &o) const {
    for (std::size_t b = 0; b < bits_.size(); ++b) {
      if (bits_[b] & ~o.bits_[b]) return false;
    }
    return true;
  }

  ElementSet &operator&=(const ElementSet &o) {
    for (std::size_t b = 0; b < bits_.size(); ++b) bits_[b] &= o.bits_[b];
    return *this;
  }
  ElementSet &operator|=(const ElementSet &o) {
    for (std::size_t b = 0; b < bits_.size(); ++b) bits_[b] |= o.bits_[b];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet &b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet &b) { return a |= b; }

  friend bool operator==(const ElementSet &, const ElementSet &) = default;
  friend auto operator<=>(const ElementSet &a, const ElementSet &b) {
    return a.bits_ <=> b.bits_;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ universe_;
    for (auto w : bits_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const { return s.hash(); }
};

}  // namespace nilgraph
