#include "actree/sssp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "actree/component_heaps.hpp"
#include "actree/error.hpp"

namespace actree {
namespace {

ShortestPathResult Initialized(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::kInvalidArgument, "empty graph");
  ShortestPathResult r;
  r.dist.assign(g.node_count(), kInfinity);
  r.parent.assign(g.node_count(), kNoNode);
  r.dist[g.source()] = 0.0;
  return r;
}

void RequireAllSettled(const ShortestPathResult& r) {
  for (NodeId v = 0; v < r.dist.size(); ++v) {
    if (r.dist[v] == kInfinity) {
      throw Error(ErrorCode::kUnreachableNode,
                  "node " + std::to_string(v) + " is not reachable from the source");
    }
  }
}

// Relaxes the out-arcs of the freshly settled v. `heap_of(w)` names the
// queue responsible for w.
template <typename HeapOf>
void RelaxOutArcs(const Graph& g, NodeId v, const std::vector<bool>& settled,
                  ShortestPathResult& r, ComponentHeaps& heaps, HeapOf&& heap_of) {
  const Weight dv = r.dist[v];
  for (const Arc& a : g.OutArcs(v)) {
    const NodeId w = a.head;
    if (settled[w]) continue;
    const Weight candidate = dv + a.weight;
    if (!(candidate < r.dist[w])) continue;
    r.dist[w] = candidate;
    r.parent[w] = v;
    ++r.stats.key_decreases;
    if (heaps.contains(w)) {
      heaps.DecreaseKey(w);
    } else {
      const std::uint32_t c = heap_of(w);
      heaps.Push(c, w);
      r.stats.max_queue_len = std::max(r.stats.max_queue_len, heaps.size(c));
    }
  }
}

}  // namespace

ShortestPathResult Dijkstra(const Graph& g) {
  ShortestPathResult r = Initialized(g);
  const std::size_t n = g.node_count();
  r.stats.component_count = 1;
  r.stats.max_component_size = n;

  const std::size_t capacity[] = {n};
  ComponentHeaps heaps(capacity, r.dist);
  std::vector<bool> settled(n, false);
  auto single_heap = [](NodeId) { return std::uint32_t{0}; };

  NodeId v = g.source();
  for (;;) {
    settled[v] = true;
    ++r.stats.pops;
    RelaxOutArcs(g, v, settled, r, heaps, single_heap);
    if (heaps.empty(0)) break;
    v = heaps.PopMin(0);
  }
  RequireAllSettled(r);
  return r;
}

ShortestPathResult DagShortestPaths(const Graph& g) {
  ShortestPathResult r = Initialized(g);
  const auto order = TopologicalOrder(g);
  if (!order) throw Error(ErrorCode::kCycleDetected, "graph has a directed cycle");
  r.stats.component_count = g.node_count() - 1;
  r.stats.max_component_size = g.node_count() > 1 ? 1 : 0;
  for (NodeId v : *order) {
    if (r.dist[v] == kInfinity) continue;
    ++r.stats.pops;
    const Weight dv = r.dist[v];
    for (const Arc& a : g.OutArcs(v)) {
      if (a.head == v) continue;
      const Weight candidate = dv + a.weight;
      if (candidate < r.dist[a.head]) {
        r.dist[a.head] = candidate;
        r.parent[a.head] = v;
        ++r.stats.key_decreases;
      }
    }
  }
  RequireAllSettled(r);
  return r;
}

ShortestPathResult RecursiveDijkstra(const Graph& g, const AcTree& ac) {
  ShortestPathResult r = Initialized(g);
  const std::size_t n = g.node_count();
  if (ac.node_count() != n || ac.source() != g.source()) {
    throw Error(ErrorCode::kInconsistentInput, "A-C tree does not belong to this graph");
  }
  r.stats.component_count = ac.component_count();
  r.stats.max_component_size = ac.max_component_size();

  std::vector<std::size_t> capacities(ac.component_count());
  for (ComponentId c = 0; c < capacities.size(); ++c) capacities[c] = ac.members(c).size();
  ComponentHeaps heaps(capacities, r.dist);
  std::vector<bool> settled(n, false);
  std::vector<bool> finished(ac.component_count(), false);
  // With the right tree every arc into w leaves D(idom(w)), so the owner of
  // w's component is already settled and the component not yet exhausted.
  auto owning_heap = [&](NodeId w) {
    const ComponentId c = ac.component_of(w);
    if (c >= finished.size() || finished[c] || !settled[ac.owner(c)]) {
      throw Error(ErrorCode::kInconsistentInput,
                  "arc into node " + std::to_string(w) + " contradicts the A-C tree");
    }
    return c;
  };

  // Explicit recursion: one frame per node whose components are being
  // searched, innermost last.
  struct Frame {
    ComponentId next;
    ComponentId end;
    ComponentId active;
    bool has_active;
  };
  std::vector<Frame> frames;
  auto settle = [&](NodeId v) {
    settled[v] = true;
    ++r.stats.pops;
    RelaxOutArcs(g, v, settled, r, heaps, owning_heap);
    const auto [first, last] = ac.ComponentsOf(v);
    if (first < last) frames.push_back({first, last, 0, false});
  };

  settle(g.source());
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.has_active && !heaps.empty(f.active)) {
      settle(heaps.PopMin(f.active));
      continue;
    }
    if (f.has_active) finished[f.active] = true;
    if (f.next < f.end) {
      f.active = f.next++;
      f.has_active = true;
      continue;
    }
    frames.pop_back();
  }
  RequireAllSettled(r);
  return r;
}

SptReport VerifySpt(const Graph& g, const ShortestPathResult& r) {
  SptReport report;
  auto fail = [&](std::string message) {
    report.ok = false;
    report.violations.push_back(std::move(message));
  };
  const std::size_t n = g.node_count();
  if (r.dist.size() != n || r.parent.size() != n) {
    fail("result has " + std::to_string(r.dist.size()) + " distances and " +
         std::to_string(r.parent.size()) + " parents for " + std::to_string(n) + " nodes");
    return report;
  }
  const NodeId s = g.source();
  if (r.dist[s] != 0.0) fail("dist[source] = " + std::to_string(r.dist[s]));
  if (r.parent[s] != kNoNode) fail("source has a parent");

  std::vector<bool> tight(n, false);
  for (NodeId v = 0; v < n; ++v) {
    if (!std::isfinite(r.dist[v]) || r.dist[v] < 0.0) {
      fail("dist[" + std::to_string(v) + "] = " + std::to_string(r.dist[v]));
    }
    if (v != s && (r.parent[v] == kNoNode || r.parent[v] >= n)) {
      fail("node " + std::to_string(v) + " has no valid parent");
    }
  }
  if (!report.ok) return report;

  for (NodeId v = 0; v < n; ++v) {
    for (const Arc& a : g.OutArcs(v)) {
      const Weight through = r.dist[v] + a.weight;
      if (through < r.dist[a.head]) {
        fail("arc " + std::to_string(v) + "->" + std::to_string(a.head) + " improves dist[" +
             std::to_string(a.head) + "] from " + std::to_string(r.dist[a.head]) + " to " +
             std::to_string(through));
      }
      if (r.parent[a.head] == v && through == r.dist[a.head]) tight[a.head] = true;
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (v != s && !tight[v]) {
      fail("parent arc " + std::to_string(r.parent[v]) + "->" + std::to_string(v) +
           " is missing or not tight");
    }
  }

  // Parent links must reach the source: 0 unknown, 1 on current walk, 2 ok.
  std::vector<unsigned char> state(n, 0);
  state[s] = 2;
  std::vector<NodeId> walk;
  for (NodeId v = 0; v < n; ++v) {
    walk.clear();
    NodeId x = v;
    while (state[x] == 0) {
      state[x] = 1;
      walk.push_back(x);
      x = r.parent[x];
    }
    const bool reaches = state[x] == 2;
    if (!reaches) fail("parent links from node " + std::to_string(v) + " form a cycle");
    for (NodeId y : walk) state[y] = 2;
    if (!reaches) break;
  }
  return report;
}

}  // namespace actree
