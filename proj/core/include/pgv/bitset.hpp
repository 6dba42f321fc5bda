#pragma once

#include <cstdint>
#include <vector>

namespace pgv {

/// Fixed-universe dynamic bitset used for element sets of one group.
/// All binary operations require both operands to share the universe size.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(int universe, bool filled = false)
      : n_(universe), words_(static_cast<size_t>((universe + 63) / 64), 0) {
    if (filled) {
      for (auto& w : words_) w = ~uint64_t{0};
      trim();
    }
  }

  static ElementSet singleton(int universe, int i) {
    ElementSet s(universe);
    s.set(i);
    return s;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) { words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  ElementSet& operator|=(const ElementSet& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  bool operator==(const ElementSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }

  bool contains(const ElementSet& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (o.words_[k] & ~words_[k]) return false;
    return true;
  }

  bool intersects(const ElementSet& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  /// First set bit at or after `from`, or -1.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    size_t k = static_cast<size_t>(from) >> 6;
    uint64_t w = words_[k] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(k * 64 + static_cast<size_t>(__builtin_ctzll(w)));
      if (++k == words_.size()) return -1;
      w = words_[k];
    }
  }

  /// Deterministic set order: at the first differing element index, the set
  /// that contains it sorts first.
  bool lex_less(const ElementSet& o) const {
    for (size_t k = 0; k < words_.size(); ++k) {
      uint64_t d = words_[k] ^ o.words_[k];
      if (d) {
        uint64_t low = d & (~d + 1);
        return words_[k] & low;
      }
    }
    return false;
  }

  size_t hash() const {
    size_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
    return out;
  }

  struct Iterator {
    const ElementSet* s;
    int i;
    int operator*() const { return i; }
    Iterator& operator++() {
      i = s->next(i + 1);
      return *this;
    }
    bool operator!=(const Iterator& o) const { return i != o.i; }
  };
  Iterator begin() const { return {this, next(0)}; }
  Iterator end() const { return {this, -1}; }

private:
  void trim() {
    int rem = n_ & 63;
    if (rem && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace pgv
