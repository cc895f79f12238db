#include "actree/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "actree/error.hpp"

namespace actree {
namespace {

class WeightSampler {
 public:
  explicit WeightSampler(WeightRange range) : range_(range) {
    if (!(range.lo >= 0.0) || range.hi < range.lo) {
      throw Error(ErrorCode::kInvalidArgument, "weight range must satisfy 0 <= lo <= hi");
    }
  }
  Weight operator()(std::mt19937_64& rng) {
    if (range_.lo == range_.hi) return range_.lo;
    return std::uniform_real_distribution<Weight>(range_.lo, range_.hi)(rng);
  }

 private:
  WeightRange range_;
};

std::size_t UniformIndex(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

// order[0] = 0, the rest a random permutation of 1..n-1. Arc order[i]'s parent
// is some earlier entry, so the arcs form an arborescence rooted at 0.
void AppendArborescence(std::size_t n, std::mt19937_64& rng, WeightSampler& weight,
                        std::vector<NodeId>& order, std::vector<ArcRecord>& arcs) {
  order.resize(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::shuffle(order.begin() + 1, order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    const NodeId parent = order[UniformIndex(rng, i)];
    arcs.push_back({parent, order[i], weight(rng)});
  }
}

}  // namespace

Graph GenLayered(std::size_t layers, std::uint64_t seed) {
  if (layers < 1) throw Error(ErrorCode::kInvalidArgument, "layered graph needs N >= 1");
  std::mt19937_64 rng(seed);
  WeightSampler weight({0.0, 1.0});
  auto a = [](std::size_t i) { return static_cast<NodeId>(2 * i - 1); };
  auto b = [](std::size_t i) { return static_cast<NodeId>(2 * i); };
  std::vector<ArcRecord> arcs;
  arcs.reserve(4 * layers);
  arcs.push_back({0, a(1), weight(rng)});
  arcs.push_back({0, b(1), weight(rng)});
  for (std::size_t i = 1; i < layers; ++i) {
    for (NodeId from : {a(i), b(i)}) {
      arcs.push_back({from, a(i + 1), weight(rng)});
      arcs.push_back({from, b(i + 1), weight(rng)});
    }
  }
  return Graph(2 * layers + 1, 0, arcs);
}

Graph GenRandomDigraph(std::size_t n, std::size_t e, std::uint64_t seed, WeightRange weights) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "random digraph needs n >= 1");
  std::mt19937_64 rng(seed);
  WeightSampler weight(weights);
  std::vector<NodeId> order;
  std::vector<ArcRecord> arcs;
  arcs.reserve(std::max(e, n - 1));
  AppendArborescence(n, rng, weight, order, arcs);
  while (arcs.size() < e) {
    const auto u = static_cast<NodeId>(UniformIndex(rng, n));
    const auto v = static_cast<NodeId>(UniformIndex(rng, n));
    arcs.push_back({u, v, weight(rng)});
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return Graph(n, 0, arcs);
}

Graph GenRandomDag(std::size_t n, std::size_t e, std::uint64_t seed, WeightRange weights) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "random DAG needs n >= 1");
  std::mt19937_64 rng(seed);
  WeightSampler weight(weights);
  std::vector<NodeId> order;
  std::vector<ArcRecord> arcs;
  arcs.reserve(std::max(e, n - 1));
  AppendArborescence(n, rng, weight, order, arcs);
  if (n >= 2) {
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;
    while (arcs.size() < e) {
      auto u = static_cast<NodeId>(UniformIndex(rng, n));
      auto v = static_cast<NodeId>(UniformIndex(rng, n));
      if (u == v) continue;
      if (rank[u] > rank[v]) std::swap(u, v);
      arcs.push_back({u, v, weight(rng)});
    }
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return Graph(n, 0, arcs);
}

Graph GenCompleteDigraph(std::size_t n, std::uint64_t seed, WeightRange weights) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "complete digraph needs n >= 1");
  std::mt19937_64 rng(seed);
  WeightSampler weight(weights);
  std::vector<ArcRecord> arcs;
  arcs.reserve(n * (n - 1));
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v, weight(rng)});
    }
  }
  return Graph(n, 0, arcs);
}

namespace {

Graph Compose(const NestingSpec& spec, std::mt19937_64& rng) {
  const Graph& outer = spec.graph;
  if (outer.empty()) throw Error(ErrorCode::kInvalidArgument, "empty graph in nesting spec");
  const std::size_t n = outer.node_count();

  std::vector<const NestingSpec*> inner_spec(n, nullptr);
  for (const auto& [node, sub] : spec.nested) {
    if (node >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "nesting target " + std::to_string(node) + " outside outer graph");
    }
    if (inner_spec[node] != nullptr) {
      throw Error(ErrorCode::kInvalidArgument,
                  "node " + std::to_string(node) + " designated twice");
    }
    inner_spec[node] = &sub;
  }

  std::vector<Graph> inner(n);
  std::vector<NodeId> base(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (inner_spec[v] != nullptr) inner[v] = Compose(*inner_spec[v], rng);
    base[v + 1] = base[v] + static_cast<NodeId>(inner[v].empty() ? 1 : inner[v].node_count());
  }
  auto entry = [&](NodeId v) { return inner[v].empty() ? base[v] : base[v] + inner[v].source(); };

  std::vector<ArcRecord> arcs;
  for (NodeId v = 0; v < n; ++v) {
    if (!inner[v].empty()) {
      for (const ArcRecord& a : inner[v].ArcList()) {
        arcs.push_back({base[v] + a.tail, base[v] + a.head, a.weight});
      }
    }
    for (const Arc& a : outer.OutArcs(v)) {
      NodeId tail = base[v];
      if (!inner[v].empty()) tail += static_cast<NodeId>(UniformIndex(rng, inner[v].node_count()));
      arcs.push_back({tail, entry(a.head), a.weight});
    }
  }
  return Graph(base[n], entry(outer.source()), arcs);
}

}  // namespace

Graph GenNested(const NestingSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return Compose(spec, rng);
}

}  // namespace actree
