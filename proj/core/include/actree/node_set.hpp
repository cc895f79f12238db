#ifndef ACTREE_NODE_SET_HPP_
#define ACTREE_NODE_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "actree/types.hpp"

namespace actree {

// Dense bitset over node ids [0, universe).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe);
  NodeSet(std::size_t universe, std::initializer_list<NodeId> members);

  static NodeSet Full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  bool contains(NodeId v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(NodeId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(NodeId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  bool IsSubsetOf(const NodeSet& other) const;
  bool Intersects(const NodeSet& other) const;
  // Intersecting and neither contains the other.
  bool Overlaps(const NodeSet& other) const;

  NodeSet& operator|=(const NodeSet& other);
  NodeSet& operator&=(const NodeSet& other);
  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }

  std::vector<NodeId> members() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<NodeId>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;
  // Lexicographic on the word representation; only used for canonical sorting.
  friend bool operator<(const NodeSet& a, const NodeSet& b) {
    return a.words_ < b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace actree

#endif  // ACTREE_NODE_SET_HPP_
