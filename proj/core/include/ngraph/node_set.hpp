#pragma once

#include <cstdint>
#include <vector>

namespace ngraph {

// Dense bitset over node indices 0..size-1. Empire and switching code lives
// on set union/intersection over the same node universe, so a flat word
// vector beats std::set<int> by a wide margin and keeps equality and hashing
// trivial.
class NodeSet {
public:
  NodeSet() = default;
  explicit NodeSet(int universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return size_; }

  bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void insert(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void erase(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int n = 0;
    for (uint64_t w : words_) n += __builtin_popcountll(w);
    return n;
  }
  bool empty() const {
    for (uint64_t w : words_) if (w) return false;
    return true;
  }

  bool operator==(const NodeSet& o) const { return words_ == o.words_; }
  bool operator!=(const NodeSet& o) const { return words_ != o.words_; }

  // Strict and non-strict inclusion.
  bool subset_of(const NodeSet& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool proper_subset_of(const NodeSet& o) const {
    return subset_of(o) && words_ != o.words_;
  }

  bool intersects(const NodeSet& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  NodeSet operator&(const NodeSet& o) const {
    NodeSet r(size_);
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
    return r;
  }
  NodeSet operator|(const NodeSet& o) const {
    NodeSet r(size_);
    for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | o.words_[k];
    return r;
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < size_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  static NodeSet full(int universe) {
    NodeSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  const std::vector<uint64_t>& words() const { return words_; }

private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

} // namespace ngraph
