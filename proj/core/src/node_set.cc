#include "actree/node_set.hpp"

#include <bit>

namespace actree {

NodeSet::NodeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

NodeSet::NodeSet(std::size_t universe, std::initializer_list<NodeId> members)
    : NodeSet(universe) {
  for (NodeId v : members) insert(v);
}

NodeSet NodeSet::Full(std::size_t universe) {
  NodeSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

std::size_t NodeSet::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool NodeSet::IsSubsetOf(const NodeSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool NodeSet::Intersects(const NodeSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool NodeSet::Overlaps(const NodeSet& other) const {
  return Intersects(other) && !IsSubsetOf(other) && !other.IsSubsetOf(*this);
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

std::vector<NodeId> NodeSet::members() const {
  std::vector<NodeId> out;
  ForEach([&](NodeId v) { out.push_back(v); });
  return out;
}

}  // namespace actree
