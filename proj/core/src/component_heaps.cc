#include "actree/component_heaps.hpp"

#include "actree/error.hpp"

namespace actree {

ComponentHeaps::ComponentHeaps(std::span<const std::size_t> capacities,
                               std::span<const Weight> keys)
    : keys_(keys),
      begin_(capacities.size() + 1, 0),
      capacity_(capacities.begin(), capacities.end()),
      size_(capacities.size(), 0),
      pos_(keys.size(), kAbsent),
      heap_of_(keys.size(), 0) {
  for (std::size_t c = 0; c < capacities.size(); ++c) begin_[c + 1] = begin_[c] + capacities[c];
  slots_.resize(begin_.back());
}

void ComponentHeaps::Push(std::uint32_t c, NodeId v) {
  if (size_[c] == capacity_[c]) {
    throw Error(ErrorCode::kInconsistentInput, "component queue over capacity");
  }
  const std::size_t slot = begin_[c] + size_[c]++;
  Place(slot, v);
  heap_of_[v] = c;
  SiftUp(c, slot);
}

void ComponentHeaps::DecreaseKey(NodeId v) { SiftUp(heap_of_[v], pos_[v]); }

NodeId ComponentHeaps::PopMin(std::uint32_t c) {
  const std::size_t base = begin_[c];
  const NodeId top = slots_[base];
  pos_[top] = kAbsent;
  if (--size_[c] > 0) {
    Place(base, slots_[base + size_[c]]);
    SiftDown(c, base);
  }
  return top;
}

void ComponentHeaps::SiftUp(std::uint32_t c, std::size_t slot) {
  const std::size_t base = begin_[c];
  const NodeId v = slots_[slot];
  std::size_t i = slot - base;
  while (i > 0) {
    const std::size_t parent = (i - 1) / 2;
    const NodeId u = slots_[base + parent];
    if (!Less(v, u)) break;
    Place(base + i, u);
    i = parent;
  }
  Place(base + i, v);
}

void ComponentHeaps::SiftDown(std::uint32_t c, std::size_t slot) {
  const std::size_t base = begin_[c];
  const std::size_t n = size_[c];
  const NodeId v = slots_[slot];
  std::size_t i = slot - base;
  for (;;) {
    std::size_t child = 2 * i + 1;
    if (child >= n) break;
    if (child + 1 < n && Less(slots_[base + child + 1], slots_[base + child])) ++child;
    if (!Less(slots_[base + child], v)) break;
    Place(base + i, slots_[base + child]);
    i = child;
  }
  Place(base + i, v);
}

}  // namespace actree
