#include "actree/ac_tree.hpp"

#include <algorithm>
#include <string>

#include "actree/error.hpp"
#include "tarjan.hpp"

namespace actree {
namespace {

// SCCs of `dg` in topological order. `local(v)` gives v's index in dg.nodes.
template <typename LocalIndex>
std::vector<std::vector<NodeId>> OrderedComponents(const DominanceGraph& dg, LocalIndex&& local) {
  const std::size_t k = dg.nodes.size();
  std::vector<std::size_t> offsets(k + 1, 0);
  for (const auto& [u, v] : dg.arcs) ++offsets[local(u) + 1];
  for (std::size_t i = 0; i < k; ++i) offsets[i + 1] += offsets[i];
  std::vector<NodeId> heads(dg.arcs.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : dg.arcs) heads[fill[local(u)]++] = static_cast<NodeId>(local(v));

  auto comps = internal::TarjanScc(k, offsets, heads);
  std::reverse(comps.begin(), comps.end());
  for (auto& comp : comps) {
    for (NodeId& x : comp) x = dg.nodes[x];
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

}  // namespace

DominanceGraphs BuildDominanceGraphs(const Graph& g, const DominatorTree& tree) {
  const std::size_t n = g.node_count();
  if (tree.node_count() != n || tree.root() != g.source()) {
    throw Error(ErrorCode::kInconsistentInput, "dominator tree does not belong to this graph");
  }
  DominanceGraphs out;
  out.graphs.resize(n);
  for (NodeId a = 0; a < n; ++a) {
    out.graphs[a].owner = a;
    const auto kids = tree.children(a);
    out.graphs[a].nodes.assign(kids.begin(), kids.end());
  }

  // current[p]: the child of p whose subtree holds the node being visited.
  // Preorder visits a child right before its subtree, which is exactly when
  // the recursive formulation would set it.
  std::vector<NodeId> current(n, kNoNode);
  for (NodeId v : tree.preorder()) {
    if (v != tree.root()) current[tree.idom(v)] = v;
    for (const Arc& arc : g.OutArcs(v)) {
      ++out.arcs_examined;
      const NodeId w = arc.head;
      if (w == g.source()) continue;
      const NodeId p = tree.idom(w);
      if (p == v) continue;  // tail is the owner itself, not inside a child
      if (!tree.Dominates(p, v)) {
        throw Error(ErrorCode::kInconsistentInput,
                    "arc " + std::to_string(v) + "->" + std::to_string(w) +
                        " leaves the subtree of idom(" + std::to_string(w) + ")");
      }
      const NodeId c = current[p];
      if (c != w) out.graphs[p].arcs.emplace_back(c, w);
    }
  }
  for (DominanceGraph& dg : out.graphs) {
    std::sort(dg.arcs.begin(), dg.arcs.end());
    dg.arcs.erase(std::unique(dg.arcs.begin(), dg.arcs.end()), dg.arcs.end());
  }
  return out;
}

std::vector<std::vector<NodeId>> SccTopological(const DominanceGraph& dg) {
  auto local = [&](NodeId v) -> std::size_t {
    const auto it = std::lower_bound(dg.nodes.begin(), dg.nodes.end(), v);
    if (it == dg.nodes.end() || *it != v) {
      throw Error(ErrorCode::kInconsistentInput,
                  "arc endpoint " + std::to_string(v) + " is not a node of the dominance graph");
    }
    return static_cast<std::size_t>(it - dg.nodes.begin());
  };
  return OrderedComponents(dg, local);
}

ComponentLocation AcTree::Locate(NodeId v) const {
  if (v == source_) return {};
  const ComponentId c = component_of_[v];
  return {owner_[c], c - node_first_[owner_[c]]};
}

std::vector<std::vector<NodeId>> AcTree::Sequence(NodeId a) const {
  std::vector<std::vector<NodeId>> out;
  const auto [first, last] = ComponentsOf(a);
  for (ComponentId c = first; c < last; ++c) {
    const auto m = members(c);
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

AcTree BuildAcTree(const Graph& g, const DominatorTree& tree) {
  const std::size_t n = g.node_count();
  DominanceGraphs dgs = BuildDominanceGraphs(g, tree);

  // Position of each node among its dominator-tree siblings.
  std::vector<std::size_t> sibling_index(n, 0);
  for (NodeId a = 0; a < n; ++a) {
    const auto kids = tree.children(a);
    for (std::size_t i = 0; i < kids.size(); ++i) sibling_index[kids[i]] = i;
  }
  auto local = [&](NodeId v) { return sibling_index[v]; };

  AcTree ac;
  ac.source_ = g.source();
  ac.node_first_.assign(n + 1, 0);
  ac.component_of_.assign(n, 0);
  ac.member_begin_.push_back(0);
  ac.members_.reserve(n == 0 ? 0 : n - 1);
  for (NodeId a = 0; a < n; ++a) {
    ac.node_first_[a] = static_cast<ComponentId>(ac.owner_.size());
    if (dgs.graphs[a].nodes.empty()) continue;
    for (const auto& comp : OrderedComponents(dgs.graphs[a], local)) {
      const auto id = static_cast<ComponentId>(ac.owner_.size());
      ac.owner_.push_back(a);
      for (NodeId v : comp) {
        ac.component_of_[v] = id;
        ac.members_.push_back(v);
      }
      ac.member_begin_.push_back(ac.members_.size());
      ac.max_component_size_ = std::max(ac.max_component_size_, comp.size());
    }
  }
  ac.node_first_[n] = static_cast<ComponentId>(ac.owner_.size());
  ac.width_ = 1 + ac.max_component_size_;
  return ac;
}

AcTree BuildAcTree(const Graph& g) { return BuildAcTree(g, ComputeDominatorTree(g)); }

NestingFamily AcToNestingFamily(const AcTree& ac, const DominatorTree& tree) {
  const std::size_t n = ac.node_count();
  if (tree.node_count() != n || tree.root() != ac.source()) {
    throw Error(ErrorCode::kInconsistentInput, "A-C tree and dominator tree disagree");
  }
  NestingFamily family;
  family.width = ac.width();
  for (NodeId v = 0; v < n; ++v) family.sets.push_back(NodeSet(n, {v}));
  for (NodeId a = 0; a < n; ++a) {
    const auto [first, last] = ac.ComponentsOf(a);
    NodeSet prefix(n, {a});
    for (ComponentId c = first; c < last; ++c) {
      for (NodeId u : ac.members(c)) {
        for (NodeId d : tree.descendants(u)) prefix.insert(d);
      }
      family.sets.push_back(prefix);
    }
  }
  return family;
}

}  // namespace actree
