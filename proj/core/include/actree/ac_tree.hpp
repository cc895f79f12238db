#ifndef ACTREE_AC_TREE_HPP_
#define ACTREE_AC_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "actree/dominators.hpp"
#include "actree/graph.hpp"
#include "actree/nesting.hpp"

namespace actree {

// G_a: the dominator-tree children of `owner`, with an arc u -> v whenever
// some arc of G leaves the subtree of u and enters v inside the subtree of
// `owner`.
struct DominanceGraph {
  NodeId owner = kNoNode;
  std::vector<NodeId> nodes;                        // ascending
  std::vector<std::pair<NodeId, NodeId>> arcs;      // sorted, no duplicates

  friend bool operator==(const DominanceGraph&, const DominanceGraph&) = default;
};

struct DominanceGraphs {
  std::vector<DominanceGraph> graphs;  // indexed by owner
  std::size_t arcs_examined = 0;
};

// Single DFS over the dominator tree. Each arc (v, w) of G is examined once;
// it contributes (current child of idom(w), w) to G_idom(w) unless the head
// is the source or the current child is w itself. Throws
// Error(kInconsistentInput) when `tree` has the wrong size or root, or when
// some arc tail lies outside the subtree of its head's claimed idom. A tree
// that is merely too shallow is not detected.
DominanceGraphs BuildDominanceGraphs(const Graph& g, const DominatorTree& tree);

// SCCs of a dominance graph in topological order (reverse Tarjan emission,
// roots tried in ascending node id). Each component is sorted ascending.
std::vector<std::vector<NodeId>> SccTopological(const DominanceGraph& dg);

using ComponentId = std::uint32_t;

struct ComponentLocation {
  NodeId parent = kNoNode;  // kNoNode for the source
  std::size_t index = 0;    // position in the parent's sequence

  friend bool operator==(const ComponentLocation&, const ComponentLocation&) = default;
};

// The acyclic-connected tree: for each node a, the SCCs S^a_1 .. S^a_k of
// G_a in topological order. Components of all nodes share one id space;
// those of node a are the contiguous ids ComponentsOf(a).
class AcTree {
 public:
  std::size_t node_count() const { return node_first_.empty() ? 0 : node_first_.size() - 1; }
  NodeId source() const { return source_; }
  std::size_t width() const { return width_; }
  std::size_t component_count() const { return owner_.size(); }

  std::pair<ComponentId, ComponentId> ComponentsOf(NodeId a) const {
    return {node_first_[a], node_first_[a + 1]};
  }
  std::size_t ComponentCountOf(NodeId a) const { return node_first_[a + 1] - node_first_[a]; }

  std::span<const NodeId> members(ComponentId c) const {
    return {members_.data() + member_begin_[c], members_.data() + member_begin_[c + 1]};
  }
  NodeId owner(ComponentId c) const { return owner_[c]; }

  // Component holding v; meaningless for the source.
  ComponentId component_of(NodeId v) const { return component_of_[v]; }
  ComponentLocation Locate(NodeId v) const;

  // Sequence for node a as explicit vectors.
  std::vector<std::vector<NodeId>> Sequence(NodeId a) const;

  std::size_t max_component_size() const { return max_component_size_; }

 private:
  friend AcTree BuildAcTree(const Graph& g, const DominatorTree& tree);

  NodeId source_ = 0;
  std::size_t width_ = 1;
  std::size_t max_component_size_ = 0;
  std::vector<ComponentId> node_first_;
  std::vector<NodeId> owner_;
  std::vector<std::size_t> member_begin_;
  std::vector<NodeId> members_;
  std::vector<ComponentId> component_of_;
};

// width = 1 + the largest component size, 1 for a single node.
AcTree BuildAcTree(const Graph& g, const DominatorTree& tree);
AcTree BuildAcTree(const Graph& g);

// {a} ∪ D(S^a_1) ∪ ... ∪ D(S^a_j) for every node a and prefix j, plus every
// singleton and the whole node set.
NestingFamily AcToNestingFamily(const AcTree& ac, const DominatorTree& tree);

}  // namespace actree

#endif  // ACTREE_AC_TREE_HPP_
