#ifndef ACTREE_GENERATORS_HPP_
#define ACTREE_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "actree/graph.hpp"

namespace actree {

// Half-open [lo, hi); lo == hi gives the constant lo.
struct WeightRange {
  Weight lo = 0.0;
  Weight hi = 1.0;
};

inline constexpr WeightRange kUnitWeights{1.0, 1.0};

// Source s = 0, a_i = 2i - 1, b_i = 2i for i in 1..layers. Arcs s->a_1,
// s->b_1 and a_i, b_i -> a_{i+1}, b_{i+1}; weights uniform in [0, 1).
Graph GenLayered(std::size_t layers, std::uint64_t seed);

// A random arborescence rooted at node 0 (n - 1 arcs) followed by
// max(0, e - (n - 1)) uniformly random arcs; self-loops and parallel arcs
// may occur. Every node is reachable from the source.
Graph GenRandomDigraph(std::size_t n, std::size_t e, std::uint64_t seed,
                       WeightRange weights = {});

// Like GenRandomDigraph, but every arc goes from a lower to a higher rank of a
// hidden random topological order (node 0 has rank 0). Extra arcs never form
// self-loops.
Graph GenRandomDag(std::size_t n, std::size_t e, std::uint64_t seed,
                   WeightRange weights = {});

// All n(n - 1) ordered pairs, source 0.
Graph GenCompleteDigraph(std::size_t n, std::uint64_t seed,
                         WeightRange weights = kUnitWeights);

// Recursive module substitution. Each entry of `nested` names a node of
// `graph` that is replaced by the composition of the inner spec: arcs into
// the node are redirected to the inner source, and each arc out of the node
// leaves from an inner node chosen by the seeded generator.
struct NestingSpec {
  Graph graph;
  std::vector<std::pair<NodeId, NestingSpec>> nested;
};

// Node numbering: the block of a replaced node x is spliced in at position x,
// in the inner graph's own order. Replacing the only node of a one-node graph
// therefore returns the inner graph unchanged.
// Throws Error(kInvalidArgument) for an empty graph anywhere in the spec, an
// out-of-range designated node, or the same node designated twice.
Graph GenNested(const NestingSpec& spec, std::uint64_t seed);

}  // namespace actree

#endif  // ACTREE_GENERATORS_HPP_
