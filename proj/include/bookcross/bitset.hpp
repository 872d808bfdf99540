#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace bookcross {

// Fixed-universe bitset used for vertex and edge sets.  Graph algorithms in
// this project run on small graphs, but graph6 input allows up to 62 vertices
// (~1900 edges), so the universe size is dynamic.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int universe) : size_(universe), words_((universe + 63) / 64, 0) {}
  Bitset(int universe, std::initializer_list<int> elems) : Bitset(universe) {
    for (int e : elems) set(e);
  }

  static Bitset of(int universe, std::initializer_list<int> bits) {
    Bitset b(universe);
    for (int i : bits) b.set(i);
    return b;
  }

  int universe() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_) if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); i++)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); i++)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); i++) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); i++) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator-=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); i++) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < size_; i++)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  size_t hash() const {
    size_t h = std::hash<int>()(size_);
    for (uint64_t w : words_) h ^= std::hash<uint64_t>()(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

using VertexSet = Bitset;
using EdgeSet = Bitset;

}  // namespace bookcross
