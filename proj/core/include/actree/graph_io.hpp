#ifndef ACTREE_GRAPH_IO_HPP_
#define ACTREE_GRAPH_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>

#include "actree/graph.hpp"

namespace actree {

// Edge-list format:
//
//   # comment
//   n m s
//   u v [w]
//
// 0-based ids, `m` arc lines follow the header, a missing weight means 1.0.
// Errors carry the 1-based line number.
Graph ParseEdgeList(std::string_view text);
Graph ParseEdgeList(std::istream& in);

// DIMACS shortest-path format (`c`, `p sp n m`, `a u v w`, 1-based ids).
// The source is not part of the format; `source` is the 1-based DIMACS id.
Graph ParseDimacs(std::string_view text, std::size_t source = 1);
Graph ParseDimacs(std::istream& in, std::size_t source = 1);

// Serializers emit LF line endings and the shortest fixed-notation decimal
// that reads back to the same double, so output is bit-stable.
void WriteEdgeList(const Graph& g, std::ostream& out);
void WriteDimacs(const Graph& g, std::ostream& out);
std::string ToEdgeList(const Graph& g);
std::string ToDimacs(const Graph& g);

std::string FormatWeight(Weight w);

enum class GraphFormat { kEdgeList, kDimacs };

// `.gr`, `.dimacs` and `.sp` select DIMACS; everything else is an edge list.
GraphFormat DetectFormat(std::string_view path);

}  // namespace actree

#endif  // ACTREE_GRAPH_IO_HPP_
