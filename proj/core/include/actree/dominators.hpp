#ifndef ACTREE_DOMINATORS_HPP_
#define ACTREE_DOMINATORS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "actree/graph.hpp"

namespace actree {

// Dominator tree of a graph rooted at its source.
//
// Children are listed in ascending node id. `dfs_in(v)` is the preorder
// index of v in the tree (children visited in list order) and `dfs_out(v)`
// the largest preorder index in v's subtree, so the descendants of v occupy
// preorder()[dfs_in(v) .. dfs_out(v)].
class DominatorTree {
 public:
  DominatorTree() = default;

  // Builds the tree from an immediate-dominator array; idom[root] == root.
  // Throws Error(kInconsistentInput) if the array does not describe a tree
  // rooted at `root`.
  static DominatorTree FromIdoms(NodeId root, std::vector<NodeId> idom);

  std::size_t node_count() const { return idom_.size(); }
  NodeId root() const { return root_; }
  NodeId idom(NodeId v) const { return idom_[v]; }
  const std::vector<NodeId>& idoms() const { return idom_; }

  std::span<const NodeId> children(NodeId v) const {
    return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
  }

  std::size_t dfs_in(NodeId v) const { return dfs_in_[v]; }
  std::size_t dfs_out(NodeId v) const { return dfs_out_[v]; }
  std::span<const NodeId> preorder() const { return preorder_; }

  // D(v): v and everything it dominates.
  std::span<const NodeId> descendants(NodeId v) const {
    return {preorder_.data() + dfs_in_[v], preorder_.data() + dfs_out_[v] + 1};
  }

  bool Dominates(NodeId a, NodeId b) const {
    return dfs_in_[a] <= dfs_in_[b] && dfs_out_[b] <= dfs_out_[a];
  }
  bool StrictlyDominates(NodeId a, NodeId b) const { return a != b && Dominates(a, b); }

 private:
  NodeId root_ = 0;
  std::vector<NodeId> idom_;
  std::vector<std::size_t> child_begin_;
  std::vector<NodeId> child_list_;
  std::vector<std::size_t> dfs_in_;
  std::vector<std::size_t> dfs_out_;
  std::vector<NodeId> preorder_;
};

// Lengauer-Tarjan with simple path compression, O(e log n). The DFS follows
// out-arcs in adjacency order. Throws Error(kUnreachableNode) if some node is
// not reachable from the source.
DominatorTree ComputeDominatorTree(const Graph& g);

// Definitional check: a == b, or b cannot be reached from the source once a
// is deleted. O(n + e) per query.
bool BruteForceDominates(const Graph& g, NodeId a, NodeId b);

}  // namespace actree

#endif  // ACTREE_DOMINATORS_HPP_
