#include "actree/dominators.hpp"

#include <string>

#include "actree/error.hpp"

namespace actree {

DominatorTree DominatorTree::FromIdoms(NodeId root, std::vector<NodeId> idom) {
  const std::size_t n = idom.size();
  if (root >= n || idom[root] != root) {
    throw Error(ErrorCode::kInconsistentInput, "root must be its own immediate dominator");
  }
  DominatorTree t;
  t.root_ = root;
  t.child_begin_.assign(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (v == root) continue;
    if (idom[v] >= n || idom[v] == v) {
      throw Error(ErrorCode::kInconsistentInput, "bad immediate dominator for node " +
                                                     std::to_string(v));
    }
    ++t.child_begin_[idom[v] + 1];
  }
  for (std::size_t v = 0; v < n; ++v) t.child_begin_[v + 1] += t.child_begin_[v];
  t.child_list_.resize(n == 0 ? 0 : n - 1);
  std::vector<std::size_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
  for (NodeId v = 0; v < n; ++v) {
    if (v != root) t.child_list_[fill[idom[v]]++] = v;
  }
  t.idom_ = std::move(idom);

  // Preorder with children in list order; dfs_out is filled on the way back.
  t.dfs_in_.assign(n, static_cast<std::size_t>(-1));
  t.dfs_out_.assign(n, 0);
  t.preorder_.reserve(n);
  struct Frame {
    NodeId v;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{root, 0}};
  t.dfs_in_[root] = 0;
  t.preorder_.push_back(root);
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto kids = t.children(f.v);
    if (f.next_child < kids.size()) {
      const NodeId c = kids[f.next_child++];
      t.dfs_in_[c] = t.preorder_.size();
      t.preorder_.push_back(c);
      stack.push_back({c, 0});
    } else {
      t.dfs_out_[f.v] = t.preorder_.size() - 1;
      stack.pop_back();
    }
  }
  if (t.preorder_.size() != n) {
    throw Error(ErrorCode::kInconsistentInput, "immediate dominators contain a cycle");
  }
  return t;
}

DominatorTree ComputeDominatorTree(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty graph");

  // Everything below is indexed by DFS number; vertex[i] maps back to nodes.
  std::vector<std::size_t> dfnum(n, kNoNode);
  std::vector<NodeId> vertex;
  std::vector<NodeId> dfs_parent(n, kNoNode);
  vertex.reserve(n);
  {
    struct Frame {
      NodeId v;
      std::size_t next_arc;
    };
    std::vector<Frame> stack{{g.source(), 0}};
    dfnum[g.source()] = 0;
    vertex.push_back(g.source());
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto arcs = g.OutArcs(f.v);
      if (f.next_arc == arcs.size()) {
        stack.pop_back();
        continue;
      }
      const NodeId w = arcs[f.next_arc++].head;
      if (dfnum[w] != kNoNode) continue;
      dfnum[w] = vertex.size();
      dfs_parent[vertex.size()] = static_cast<NodeId>(dfnum[f.v]);
      vertex.push_back(w);
      stack.push_back({w, 0});
    }
  }
  if (vertex.size() != n) {
    for (NodeId v = 0; v < n; ++v) {
      if (dfnum[v] == kNoNode) {
        throw Error(ErrorCode::kUnreachableNode,
                    "node " + std::to_string(v) + " is not reachable from the source");
      }
    }
  }

  const Predecessors preds = BuildPredecessors(g);
  std::vector<NodeId> semi(n);
  std::vector<NodeId> idom(n, kNoNode);
  std::vector<NodeId> ancestor(n, kNoNode);
  std::vector<NodeId> label(n);
  for (NodeId i = 0; i < n; ++i) semi[i] = label[i] = i;

  // bucket[i]: DFS numbers whose semidominator is i, as intrusive lists.
  std::vector<NodeId> bucket_head(n, kNoNode);
  std::vector<NodeId> bucket_next(n, kNoNode);

  std::vector<NodeId> path;
  auto eval = [&](NodeId v) -> NodeId {
    if (ancestor[v] == kNoNode) return v;
    path.clear();
    NodeId x = v;
    while (ancestor[ancestor[x]] != kNoNode) {
      path.push_back(x);
      x = ancestor[x];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const NodeId y = *it;
      const NodeId a = ancestor[y];
      if (semi[label[a]] < semi[label[y]]) label[y] = label[a];
      ancestor[y] = ancestor[a];
    }
    return label[v];
  };

  for (NodeId w = static_cast<NodeId>(n - 1); w >= 1; --w) {
    for (NodeId pred : preds.Of(vertex[w])) {
      const NodeId u = eval(static_cast<NodeId>(dfnum[pred]));
      if (semi[u] < semi[w]) semi[w] = semi[u];
    }
    bucket_next[w] = bucket_head[semi[w]];
    bucket_head[semi[w]] = w;

    const NodeId p = dfs_parent[w];
    ancestor[w] = p;
    for (NodeId v = bucket_head[p]; v != kNoNode; v = bucket_next[v]) {
      const NodeId u = eval(v);
      idom[v] = semi[u] < semi[v] ? u : p;
    }
    bucket_head[p] = kNoNode;
  }
  for (NodeId w = 1; w < n; ++w) {
    if (idom[w] != semi[w]) idom[w] = idom[idom[w]];
  }

  std::vector<NodeId> idom_by_node(n);
  idom_by_node[g.source()] = g.source();
  for (NodeId w = 1; w < n; ++w) idom_by_node[vertex[w]] = vertex[idom[w]];
  return DominatorTree::FromIdoms(g.source(), std::move(idom_by_node));
}

bool BruteForceDominates(const Graph& g, NodeId a, NodeId b) {
  if (a == b) return true;
  if (a == g.source()) return true;
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{g.source()};
  seen[g.source()] = true;
  seen[a] = true;  // deleted
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (v == b) return false;
    for (const Arc& arc : g.OutArcs(v)) {
      if (!seen[arc.head]) {
        seen[arc.head] = true;
        stack.push_back(arc.head);
      }
    }
  }
  return true;
}

}  // namespace actree
