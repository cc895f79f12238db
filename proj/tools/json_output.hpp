#ifndef ACTREE_TOOLS_JSON_OUTPUT_HPP_
#define ACTREE_TOOLS_JSON_OUTPUT_HPP_

#include <span>

#include "actree/ac_tree.hpp"
#include "actree/dominators.hpp"
#include "actree/sssp.hpp"
#include "json.hpp"

namespace actree::tools {

using Json = nlohmann::ordered_json;

// `original` maps ids of the (pruned) graph back to ids of the input file;
// `input_nodes` is the node count of the input. Dropped nodes render as null.

// {"components": {"<node>": [[ids...], ...]}, "width": k}; owners ascending.
Json AcTreeToJson(const AcTree& ac, std::span<const NodeId> original);

// {"idom": [...]}; the source maps to itself.
Json DominatorTreeToJson(const DominatorTree& tree, std::span<const NodeId> original,
                         std::size_t input_nodes);

// {"dist": [...], "parent": [...], "stats": {...}}.
Json ShortestPathToJson(const ShortestPathResult& r, std::span<const NodeId> original,
                        std::size_t input_nodes);

}  // namespace actree::tools

#endif  // ACTREE_TOOLS_JSON_OUTPUT_HPP_
