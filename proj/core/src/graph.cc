#include "actree/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "actree/error.hpp"
#include "tarjan.hpp"

namespace actree {

Graph::Graph(std::size_t node_count, NodeId source, std::span<const ArcRecord> arcs)
    : source_(source) {
  if (node_count == 0) throw Error(ErrorCode::kInvalidArgument, "graph needs at least one node");
  if (node_count >= kNoNode) throw Error(ErrorCode::kInvalidArgument, "too many nodes");
  if (source >= node_count) {
    throw Error(ErrorCode::kIdOutOfRange, "source " + std::to_string(source) + " >= " +
                                              std::to_string(node_count));
  }
  offsets_.assign(node_count + 1, 0);
  for (const ArcRecord& a : arcs) {
    if (a.tail >= node_count || a.head >= node_count) {
      throw Error(ErrorCode::kIdOutOfRange, "arc " + std::to_string(a.tail) + "->" +
                                                std::to_string(a.head) + " with " +
                                                std::to_string(node_count) + " nodes");
    }
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      throw Error(ErrorCode::kNegativeWeight, "arc " + std::to_string(a.tail) + "->" +
                                                  std::to_string(a.head) + " has weight " +
                                                  std::to_string(a.weight));
    }
    ++offsets_[a.tail + 1];
  }
  for (std::size_t v = 0; v < node_count; ++v) offsets_[v + 1] += offsets_[v];
  arcs_.resize(arcs.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const ArcRecord& a : arcs) arcs_[fill[a.tail]++] = Arc{a.head, a.weight};
}

std::vector<ArcRecord> Graph::ArcList() const {
  std::vector<ArcRecord> out;
  out.reserve(arcs_.size());
  for (NodeId v = 0; v < node_count(); ++v) {
    for (const Arc& a : OutArcs(v)) out.push_back({v, a.head, a.weight});
  }
  return out;
}

Predecessors BuildPredecessors(const Graph& g) {
  const std::size_t n = g.node_count();
  Predecessors p;
  p.offsets.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (const Arc& a : g.OutArcs(v)) ++p.offsets[a.head + 1];
  }
  for (std::size_t v = 0; v < n; ++v) p.offsets[v + 1] += p.offsets[v];
  p.tails.resize(g.arc_count());
  std::vector<std::size_t> fill(p.offsets.begin(), p.offsets.end() - 1);
  for (NodeId v = 0; v < n; ++v) {
    for (const Arc& a : g.OutArcs(v)) p.tails[fill[a.head]++] = v;
  }
  return p;
}

std::vector<bool> ReachableFromSource(const Graph& g) {
  std::vector<bool> seen(g.node_count(), false);
  if (g.empty()) return seen;
  std::vector<NodeId> stack{g.source()};
  seen[g.source()] = true;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (const Arc& a : g.OutArcs(v)) {
      if (!seen[a.head]) {
        seen[a.head] = true;
        stack.push_back(a.head);
      }
    }
  }
  return seen;
}

PruneResult PruneUnreachable(const Graph& g) {
  const std::vector<bool> keep = ReachableFromSource(g);
  PruneResult r;
  r.remap.assign(g.node_count(), kNoNode);
  NodeId next = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (keep[v]) {
      r.remap[v] = next++;
    } else {
      r.dropped.push_back(v);
    }
  }
  if (r.dropped.empty()) {
    r.graph = g;
    return r;
  }
  std::vector<ArcRecord> arcs;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!keep[v]) continue;
    // Arcs out of a reachable node always land on a reachable node.
    for (const Arc& a : g.OutArcs(v)) arcs.push_back({r.remap[v], r.remap[a.head], a.weight});
  }
  r.graph = Graph(next, r.remap[g.source()], arcs);
  return r;
}

std::optional<std::vector<NodeId>> TopologicalOrder(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> indegree(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (const Arc& a : g.OutArcs(v)) {
      if (a.head != v) ++indegree[a.head];
    }
  }
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    if (indegree[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeId v = order[i];
    for (const Arc& a : g.OutArcs(v)) {
      if (a.head != v && --indegree[a.head] == 0) order.push_back(a.head);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::vector<std::vector<NodeId>> StronglyConnectedComponents(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<NodeId> heads;
  heads.reserve(g.arc_count());
  for (NodeId v = 0; v < n; ++v) {
    for (const Arc& a : g.OutArcs(v)) heads.push_back(a.head);
    offsets[v + 1] = heads.size();
  }
  auto comps = internal::TarjanScc(n, offsets, heads);
  std::reverse(comps.begin(), comps.end());
  for (auto& c : comps) std::sort(c.begin(), c.end());
  return comps;
}

namespace internal {

std::vector<std::vector<NodeId>> TarjanScc(std::size_t n, std::span<const std::size_t> offsets,
                                           std::span<const NodeId> heads) {
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  std::vector<std::vector<NodeId>> out;

  struct Frame {
    NodeId v;
    std::size_t next_arc;
  };
  std::vector<Frame> calls;
  std::size_t counter = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    index[root] = lowlink[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    calls.push_back({root, offsets[root]});
    while (!calls.empty()) {
      Frame& f = calls.back();
      const NodeId v = f.v;
      if (f.next_arc < offsets[v + 1]) {
        const NodeId w = heads[f.next_arc++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.push_back({w, offsets[w]});
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        std::vector<NodeId> comp;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        out.push_back(std::move(comp));
      }
      calls.pop_back();
      if (!calls.empty()) {
        const NodeId parent = calls.back().v;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
    }
  }
  return out;
}

}  // namespace internal
}  // namespace actree
