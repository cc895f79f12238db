#ifndef ACTREE_GRAPH_HPP_
#define ACTREE_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "actree/types.hpp"

namespace actree {

struct Arc {
  NodeId head;
  Weight weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// An arc with its tail, as it appears in an input file.
struct ArcRecord {
  NodeId tail;
  NodeId head;
  Weight weight = kDefaultWeight;

  friend bool operator==(const ArcRecord&, const ArcRecord&) = default;
};

// Immutable weighted digraph with a distinguished source node.
//
// Out-arcs are stored in CSR form; the arcs of each node keep the order in
// which they were supplied. Parallel arcs and self-loops are kept.
class Graph {
 public:
  // The empty graph (no nodes). Only meaningful as a placeholder.
  Graph() = default;

  // Throws Error(kIdOutOfRange) if the source or any endpoint is not in
  // [0, node_count), Error(kNegativeWeight) for negative or non-finite
  // weights, and Error(kInvalidArgument) when node_count is zero.
  Graph(std::size_t node_count, NodeId source, std::span<const ArcRecord> arcs);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t arc_count() const { return arcs_.size(); }
  NodeId source() const { return source_; }
  bool empty() const { return node_count() == 0; }

  std::span<const Arc> OutArcs(NodeId v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }
  std::size_t OutDegree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  // All arcs, grouped by tail in ascending node order.
  std::vector<ArcRecord> ArcList() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  NodeId source_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
};

// Tails of in-arcs per node, CSR layout. One entry per arc.
struct Predecessors {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> tails;

  std::span<const NodeId> Of(NodeId v) const {
    return {tails.data() + offsets[v], tails.data() + offsets[v + 1]};
  }
};

Predecessors BuildPredecessors(const Graph& g);

struct PruneResult {
  Graph graph;
  // old id -> new id, kNoNode for dropped nodes.
  std::vector<NodeId> remap;
  // Dropped old ids, ascending.
  std::vector<NodeId> dropped;

  bool is_identity() const { return dropped.empty(); }
};

// Keeps the nodes reachable from the source. Retained nodes keep their
// relative order, so a fully reachable graph comes back unchanged.
PruneResult PruneUnreachable(const Graph& g);

// Nodes reachable from the source, as a membership vector.
std::vector<bool> ReachableFromSource(const Graph& g);

// Kahn order over all nodes, ignoring self-loops. Empty optional if the
// graph has a directed cycle of length >= 2.
std::optional<std::vector<NodeId>> TopologicalOrder(const Graph& g);

// SCCs of the whole graph in topological order of the condensation.
std::vector<std::vector<NodeId>> StronglyConnectedComponents(const Graph& g);

}  // namespace actree

#endif  // ACTREE_GRAPH_HPP_
