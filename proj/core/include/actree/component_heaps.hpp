#ifndef ACTREE_COMPONENT_HEAPS_HPP_
#define ACTREE_COMPONENT_HEAPS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "actree/types.hpp"

namespace actree {

// One indexed binary min-heap per component, all packed into a single slab
// of node slots. Keys live outside the heap (normally the distance array);
// ties are broken by node id. Every operation on component c costs
// O(log capacity(c)).
class ComponentHeaps {
 public:
  ComponentHeaps(std::span<const std::size_t> capacities, std::span<const Weight> keys);

  bool empty(std::uint32_t c) const { return size_[c] == 0; }
  std::size_t size(std::uint32_t c) const { return size_[c]; }
  bool contains(NodeId v) const { return pos_[v] != kAbsent; }

  // v must not be queued. Keys of v are read at call time.
  void Push(std::uint32_t c, NodeId v);
  // Call after lowering keys[v]; v must be queued.
  void DecreaseKey(NodeId v);
  NodeId PopMin(std::uint32_t c);
  NodeId Top(std::uint32_t c) const { return slots_[begin_[c]]; }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  bool Less(NodeId a, NodeId b) const {
    return keys_[a] < keys_[b] || (keys_[a] == keys_[b] && a < b);
  }
  void Place(std::size_t slot, NodeId v) {
    slots_[slot] = v;
    pos_[v] = slot;
  }
  void SiftUp(std::uint32_t c, std::size_t slot);
  void SiftDown(std::uint32_t c, std::size_t slot);

  std::span<const Weight> keys_;
  std::vector<std::size_t> begin_;
  std::vector<std::size_t> capacity_;
  std::vector<std::size_t> size_;
  std::vector<NodeId> slots_;
  std::vector<std::size_t> pos_;
  std::vector<std::uint32_t> heap_of_;
};

}  // namespace actree

#endif  // ACTREE_COMPONENT_HEAPS_HPP_
