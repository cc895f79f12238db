#ifndef ACTREE_NESTING_HPP_
#define ACTREE_NESTING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "actree/graph.hpp"
#include "actree/node_set.hpp"

namespace actree {

// A laminar family of modules containing the whole node set and all
// singletons.
struct NestingFamily {
  std::vector<NodeSet> sets;
  std::size_t width = 0;
};

// The source of S if S is a module, i.e. every arc entering S from outside
// hits one node. A set holding the graph source is a module only with the
// graph source as its source. Throws Error(kInvalidArgument) for empty S.
std::optional<NodeId> ModuleSource(const Graph& g, const NodeSet& s);
inline bool IsModule(const Graph& g, const NodeSet& s) { return ModuleSource(g, s).has_value(); }

// For overlapping modules M and H, whether M ∪ H and M ∩ H are modules.
// Throws Error(kOverlapRequired) if M and H do not overlap and
// Error(kInvalidArgument) if either is not a module.
bool ModuleClosureHolds(const Graph& g, const NodeSet& m, const NodeSet& h);

// Checks laminarity, trivial modules and the module property. Throws
// Error(kFamilyInvariant) naming the first offending set or pair.
void ValidateFamily(const Graph& g, const NestingFamily& family);

// Largest maximal module partition over all members (1 for a one-node
// graph). Validates first.
std::size_t FamilyWidth(const Graph& g, const NestingFamily& family);

inline constexpr std::size_t kMaxExactNodes = 12;

// Every module of g as a bitmask over node ids, ascending. Size-guarded like
// BruteForceNestingWidth.
std::vector<std::uint32_t> ModuleMasks(const Graph& g);

// Exact minimum width over all nesting decompositions by exhaustive search
// over module partitions. Throws Error(kSizeGuardExceeded) above
// kMaxExactNodes nodes.
std::size_t BruteForceNestingWidth(const Graph& g);

}  // namespace actree

#endif  // ACTREE_NESTING_HPP_
