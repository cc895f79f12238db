#include "json_output.hpp"

#include <string>

namespace actree::tools {

Json AcTreeToJson(const AcTree& ac, std::span<const NodeId> original) {
  Json components = Json::object();
  // Owners emitted in ascending input id; pruning keeps relative order.
  for (NodeId a = 0; a < ac.node_count(); ++a) {
    const auto [first, last] = ac.ComponentsOf(a);
    if (first == last) continue;
    Json seq = Json::array();
    for (ComponentId c = first; c < last; ++c) {
      Json members = Json::array();
      for (NodeId v : ac.members(c)) members.push_back(original[v]);
      seq.push_back(std::move(members));
    }
    components[std::to_string(original[a])] = std::move(seq);
  }
  Json out;
  out["components"] = std::move(components);
  out["width"] = ac.width();
  return out;
}

Json DominatorTreeToJson(const DominatorTree& tree, std::span<const NodeId> original,
                         std::size_t input_nodes) {
  Json idom(input_nodes, nullptr);
  for (NodeId v = 0; v < tree.node_count(); ++v) idom[original[v]] = original[tree.idom(v)];
  Json out;
  out["idom"] = std::move(idom);
  return out;
}

Json ShortestPathToJson(const ShortestPathResult& r, std::span<const NodeId> original,
                        std::size_t input_nodes) {
  Json dist(input_nodes, nullptr);
  Json parent(input_nodes, nullptr);
  for (NodeId v = 0; v < r.dist.size(); ++v) {
    dist[original[v]] = r.dist[v];
    if (r.parent[v] != kNoNode) parent[original[v]] = original[r.parent[v]];
  }
  Json stats;
  stats["pops"] = r.stats.pops;
  stats["key_decreases"] = r.stats.key_decreases;
  stats["max_queue_len"] = r.stats.max_queue_len;
  stats["component_count"] = r.stats.component_count;
  stats["max_component_size"] = r.stats.max_component_size;
  Json out;
  out["dist"] = std::move(dist);
  out["parent"] = std::move(parent);
  out["stats"] = std::move(stats);
  return out;
}

}  // namespace actree::tools
