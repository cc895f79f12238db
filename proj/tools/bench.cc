#include "bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <limits>
#include <ostream>
#include <random>

#include "actree/ac_tree.hpp"
#include "actree/error.hpp"
#include "actree/generators.hpp"
#include "actree/sssp.hpp"

namespace actree::tools {
namespace {

constexpr std::size_t kNestedBlock = 8;

NestingSpec NestedSpec(std::size_t size, std::mt19937_64& rng) {
  const std::size_t block = std::min(size, kNestedBlock);
  NestingSpec spec;
  spec.graph = GenRandomDigraph(block, 2 * block, rng(), {0.0, 1.0});
  if (block == size || block == 1) return spec;
  const std::size_t extra = size - block;
  const std::size_t slots = block - 1;
  for (std::size_t i = 0; i < slots; ++i) {
    const std::size_t share = extra / slots + (i < extra % slots ? 1 : 0);
    if (share == 0) continue;
    spec.nested.emplace_back(static_cast<NodeId>(i + 1), NestedSpec(share + 1, rng));
  }
  return spec;
}

std::uint64_t ParseUnsigned(std::string_view token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bad number '" + std::string(token) + "'");
  }
  return value;
}

std::uint64_t ParsePower(std::string_view token) {
  if (token.starts_with("2^")) {
    const std::uint64_t k = ParseUnsigned(token.substr(2));
    if (k >= 40) throw Error(ErrorCode::kInvalidArgument, "size exponent too large");
    return std::uint64_t{1} << k;
  }
  return ParseUnsigned(token);
}

std::vector<std::string_view> SplitCommas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

template <typename Fn>
std::uint64_t MinTimeNs(std::size_t repeat, Fn&& fn) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < std::max<std::size_t>(repeat, 1); ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min<std::uint64_t>(
        best, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
  }
  return best;
}

}  // namespace

const std::vector<std::string>& FamilyNames() {
  static const std::vector<std::string> names = {"random", "dag", "layered", "complete",
                                                 "nested"};
  return names;
}

Graph GenerateFamily(std::string_view family, std::size_t size, std::uint64_t seed,
                     std::size_t degree) {
  if (size == 0) throw Error(ErrorCode::kInvalidArgument, "size must be positive");
  if (family == "random") return GenRandomDigraph(size, degree * size, seed, {0.0, 1.0});
  if (family == "dag") return GenRandomDag(size, degree * size, seed, {0.0, 1.0});
  if (family == "layered") return GenLayered(std::max<std::size_t>(1, (size - 1) / 2), seed);
  if (family == "complete") return GenCompleteDigraph(size, seed, {0.0, 1.0});
  if (family == "nested") {
    std::mt19937_64 rng(seed);
    const NestingSpec spec = NestedSpec(size, rng);
    return GenNested(spec, rng());
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + std::string(family) + "'");
}

std::string ToCsvRow(const BenchRecord& r) {
  return r.family + ',' + std::to_string(r.n) + ',' + std::to_string(r.e) + ',' +
         std::to_string(r.seed) + ',' + r.algo + ',' + std::to_string(r.ns) + ',' +
         std::to_string(r.pops) + ',' + std::to_string(r.decreases) + ',' +
         std::to_string(r.max_queue) + ',' + std::to_string(r.width);
}

std::vector<std::size_t> ParseSizes(std::string_view text) {
  std::vector<std::size_t> sizes;
  for (std::string_view item : SplitCommas(text)) {
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      sizes.push_back(ParsePower(item));
      continue;
    }
    const std::string_view lo = item.substr(0, dots);
    const std::string_view hi = item.substr(dots + 2);
    if (!lo.starts_with("2^") || !hi.starts_with("2^")) {
      throw Error(ErrorCode::kInvalidArgument, "ranges must look like 2^a..2^b");
    }
    const std::uint64_t a = ParseUnsigned(lo.substr(2));
    const std::uint64_t b = ParseUnsigned(hi.substr(2));
    if (a > b || b >= 40) throw Error(ErrorCode::kInvalidArgument, "bad size range");
    for (std::uint64_t k = a; k <= b; ++k) sizes.push_back(std::size_t{1} << k);
  }
  if (sizes.empty()) throw Error(ErrorCode::kInvalidArgument, "size list is empty");
  for (std::size_t s : sizes) {
    if (s == 0) throw Error(ErrorCode::kInvalidArgument, "sizes must be positive");
  }
  return sizes;
}

std::vector<std::uint64_t> ParseSeeds(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  for (std::string_view item : SplitCommas(text)) seeds.push_back(ParseUnsigned(item));
  if (seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "seed list is empty");
  return seeds;
}

std::vector<BenchRecord> RunBench(const BenchOptions& options, std::ostream& csv) {
  if (options.sizes.empty()) throw Error(ErrorCode::kInvalidArgument, "size list is empty");
  if (options.seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "seed list is empty");
  std::vector<BenchRecord> records;
  csv << kBenchCsvHeader << '\n';
  auto emit = [&](BenchRecord r) {
    csv << ToCsvRow(r) << '\n' << std::flush;
    records.push_back(std::move(r));
  };

  for (std::size_t size : options.sizes) {
    for (std::uint64_t seed : options.seeds) {
      const Graph g = GenerateFamily(options.family, size, seed, options.degree);
      BenchRecord base;
      base.family = options.family;
      base.n = g.node_count();
      base.e = g.arc_count();
      base.seed = seed;

      AcTree ac;
      base.ns = MinTimeNs(options.repeat, [&] { ac = BuildAcTree(g); });
      base.width = ac.width();
      base.algo = "actree";
      emit(base);

      auto search_row = [&](std::string algo, auto&& search) {
        ShortestPathResult result;
        BenchRecord row = base;
        row.algo = std::move(algo);
        row.ns = MinTimeNs(options.repeat, [&] { result = search(); });
        row.pops = result.stats.pops;
        row.decreases = result.stats.key_decreases;
        row.max_queue = result.stats.max_queue_len;
        emit(std::move(row));
      };
      search_row("dijkstra", [&] { return Dijkstra(g); });
      search_row("recursive", [&] { return RecursiveDijkstra(g, ac); });
      if (TopologicalOrder(g)) search_row("dag", [&] { return DagShortestPaths(g); });
    }
  }
  return records;
}

}  // namespace actree::tools
