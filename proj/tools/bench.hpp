#ifndef ACTREE_TOOLS_BENCH_HPP_
#define ACTREE_TOOLS_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "actree/graph.hpp"

namespace actree::tools {

inline constexpr std::string_view kBenchCsvHeader =
    "family,n,e,seed,algo,ns,pops,decreases,max_queue,width";

// Families understood by GenerateFamily and the bench command.
const std::vector<std::string>& FamilyNames();

// `size` is the target node count; `degree` the arcs per node for the random
// families. Throws Error(kInvalidArgument) for an unknown family.
Graph GenerateFamily(std::string_view family, std::size_t size, std::uint64_t seed,
                     std::size_t degree = 4);

struct BenchRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t e = 0;
  std::uint64_t seed = 0;
  std::string algo;
  std::uint64_t ns = 0;
  std::size_t pops = 0;
  std::size_t decreases = 0;
  std::size_t max_queue = 0;
  std::size_t width = 0;
};

std::string ToCsvRow(const BenchRecord& r);

// Comma-separated list of sizes; each item is an integer, `2^k`, or an
// inclusive power range `2^a..2^b`. Throws Error(kInvalidArgument) on an
// empty or malformed list.
std::vector<std::size_t> ParseSizes(std::string_view text);
std::vector<std::uint64_t> ParseSeeds(std::string_view text);

struct BenchOptions {
  std::string family;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::size_t degree = 4;
  std::size_t repeat = 1;
};

// Runs every (size, seed) cell: A-C construction ("actree"), plain Dijkstra,
// Recursive Dijkstra, and topological relaxation when the graph is acyclic.
// Rows are streamed to `csv` (header first) and also returned. Wall time is
// the minimum over `repeat` runs.
std::vector<BenchRecord> RunBench(const BenchOptions& options, std::ostream& csv);

}  // namespace actree::tools

#endif  // ACTREE_TOOLS_BENCH_HPP_
