#ifndef ACTREE_SRC_TARJAN_HPP_
#define ACTREE_SRC_TARJAN_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "actree/types.hpp"

namespace actree::internal {

// Tarjan's SCC algorithm over a CSR adjacency on nodes [0, n), iterative.
// Roots are tried in ascending id and arcs in adjacency order. Components come
// out in emission order, which is reverse topological; members of a component
// are in pop order.
std::vector<std::vector<NodeId>> TarjanScc(std::size_t n, std::span<const std::size_t> offsets,
                                           std::span<const NodeId> heads);

}  // namespace actree::internal

#endif  // ACTREE_SRC_TARJAN_HPP_
