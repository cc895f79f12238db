#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "actree/ac_tree.hpp"
#include "actree/error.hpp"
#include "actree/graph_io.hpp"
#include "actree/nesting.hpp"
#include "actree/sssp.hpp"
#include "bench.hpp"
#include "json_output.hpp"

namespace actree::tools {
namespace {

// Raised for internal self-check failures (exit 4).
struct InternalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for unreadable files and bad flag values (exit 2).
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine:
    case ErrorCode::kIdOutOfRange:
    case ErrorCode::kArcCountMismatch:
    case ErrorCode::kMissingProblemLine:
    case ErrorCode::kWrongProblemTag:
    case ErrorCode::kArcBeforeHeader:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kNegativeWeight:
    case ErrorCode::kCycleDetected:
    case ErrorCode::kUnreachableNode:
    case ErrorCode::kInconsistentInput:
    case ErrorCode::kOverlapRequired:
    case ErrorCode::kSizeGuardExceeded:
      return kExitContract;
    case ErrorCode::kFamilyInvariant:
      return kExitInternal;
  }
  return kExitInternal;
}

std::uint64_t DefaultSeed() {
  if (const char* env = std::getenv("ACTREE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageFailure(std::string("ACTREE_SEED is not an integer: ") + env);
    }
  }
  return 1;
}

struct InputOptions {
  std::string path;
  std::string format;  // empty: detect from extension
  std::size_t dimacs_source = 1;

  void Register(CLI::App* cmd) {
    cmd->add_option("input", path, "Graph file (edge list or DIMACS)")->required();
    cmd->add_option("--format", format, "Input format; detected from extension by default")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    cmd->add_option("--source", dimacs_source, "1-based source node for DIMACS input")
        ->capture_default_str();
  }
};

// The pruned graph plus the map back to input ids.
struct LoadedGraph {
  Graph graph;
  std::vector<NodeId> original;
  std::size_t input_nodes = 0;
};

LoadedGraph Load(const InputOptions& in, std::ostream& err) {
  std::ifstream file(in.path, std::ios::binary);
  if (!file) throw UsageFailure("cannot open '" + in.path + "'");
  const GraphFormat format = in.format.empty() ? DetectFormat(in.path)
                             : in.format == "dimacs" ? GraphFormat::kDimacs
                                                     : GraphFormat::kEdgeList;
  const Graph raw = format == GraphFormat::kDimacs ? ParseDimacs(file, in.dimacs_source)
                                                   : ParseEdgeList(file);
  PruneResult pruned = PruneUnreachable(raw);
  if (!pruned.is_identity()) {
    err << "warning: pruned " << pruned.dropped.size() << " unreachable node(s):";
    for (NodeId v : pruned.dropped) err << ' ' << v;
    err << '\n';
  }
  LoadedGraph out;
  out.input_nodes = raw.node_count();
  out.original.assign(pruned.graph.node_count(), kNoNode);
  for (NodeId v = 0; v < raw.node_count(); ++v) {
    if (pruned.remap[v] != kNoNode) out.original[pruned.remap[v]] = v;
  }
  out.graph = std::move(pruned.graph);
  return out;
}

void PrintAcTreeText(const AcTree& ac, std::span<const NodeId> original, std::ostream& out) {
  out << "width " << ac.width() << '\n';
  for (NodeId a = 0; a < ac.node_count(); ++a) {
    const auto [first, last] = ac.ComponentsOf(a);
    if (first == last) continue;
    out << original[a] << ':';
    for (ComponentId c = first; c < last; ++c) {
      out << " [";
      bool lead = true;
      for (NodeId v : ac.members(c)) {
        out << (lead ? "" : " ") << original[v];
        lead = false;
      }
      out << ']';
    }
    out << '\n';
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"A-C tree decomposition and shortest paths", "actree"};
  app.require_subcommand(1);

  InputOptions decompose_in;
  bool decompose_json = false;
  auto* decompose = app.add_subcommand("decompose", "Print the A-C tree and its width");
  decompose_in.Register(decompose);
  decompose->add_flag("--json", decompose_json, "Emit JSON instead of text");

  InputOptions dominators_in;
  auto* dominators = app.add_subcommand("dominators", "Print immediate dominators as JSON");
  dominators_in.Register(dominators);

  InputOptions sssp_in;
  std::string algo = "recursive";
  bool verify = false;
  auto* sssp = app.add_subcommand("sssp", "Shortest paths from the source as JSON");
  sssp_in.Register(sssp);
  sssp->add_option("--algo", algo, "Search engine")
      ->check(CLI::IsMember({"dijkstra", "recursive", "dag"}))
      ->capture_default_str();
  sssp->add_flag("--verify", verify, "Check the shortest-path tree (and agreement with Dijkstra)");

  InputOptions width_in;
  bool exact = false;
  auto* width = app.add_subcommand("width", "Print the nesting width");
  width_in.Register(width);
  width->add_flag("--exact", exact, "Also run the exhaustive search (at most 12 nodes)");

  std::string bench_family;
  std::string bench_sizes;
  std::string bench_seeds;
  std::string bench_out = "-";
  std::size_t bench_degree = 4;
  std::size_t bench_repeat = 1;
  auto* bench = app.add_subcommand("bench", "Time every engine over a family grid, CSV output");
  bench->add_option("--family", bench_family, "Graph family")
      ->required()
      ->check(CLI::IsMember(FamilyNames()));
  bench->add_option("--sizes", bench_sizes, "e.g. 1024,4096 or 2^10..2^16")->required();
  bench->add_option("--seeds", bench_seeds, "Comma-separated seeds (default $ACTREE_SEED or 1)");
  bench->add_option("--out", bench_out, "CSV path, '-' for stdout")->capture_default_str();
  bench->add_option("--degree", bench_degree, "Arcs per node for random families")
      ->capture_default_str();
  bench->add_option("--repeat", bench_repeat, "Runs per cell; the minimum time is kept")
      ->capture_default_str();

  std::string gen_family;
  std::size_t gen_size = 0;
  std::optional<std::uint64_t> gen_seed;
  std::size_t gen_degree = 4;
  std::string gen_format = "edgelist";
  auto* generate = app.add_subcommand("generate", "Write a generated graph to stdout");
  generate->add_option("--family", gen_family, "Graph family")
      ->required()
      ->check(CLI::IsMember(FamilyNames()));
  generate->add_option("--n", gen_size, "Target node count")->required();
  generate->add_option("--seed", gen_seed, "Seed (default $ACTREE_SEED or 1)");
  generate->add_option("--degree", gen_degree, "Arcs per node for random families")
      ->capture_default_str();
  generate->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember({"edgelist", "dimacs"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decompose->parsed()) {
      const LoadedGraph in = Load(decompose_in, err);
      const AcTree ac = BuildAcTree(in.graph);
      if (decompose_json) {
        out << AcTreeToJson(ac, in.original).dump() << '\n';
      } else {
        PrintAcTreeText(ac, in.original, out);
      }
    } else if (dominators->parsed()) {
      const LoadedGraph in = Load(dominators_in, err);
      const DominatorTree tree = ComputeDominatorTree(in.graph);
      out << DominatorTreeToJson(tree, in.original, in.input_nodes).dump() << '\n';
    } else if (sssp->parsed()) {
      const LoadedGraph in = Load(sssp_in, err);
      ShortestPathResult result;
      if (algo == "dijkstra") {
        result = Dijkstra(in.graph);
      } else if (algo == "dag") {
        result = DagShortestPaths(in.graph);
      } else {
        result = RecursiveDijkstra(in.graph, BuildAcTree(in.graph));
      }
      if (verify) {
        const SptReport report = VerifySpt(in.graph, result);
        if (!report) {
          std::ostringstream msg;
          msg << "shortest-path tree check failed:";
          for (const auto& v : report.violations) msg << "\n  " << v;
          throw InternalFailure(msg.str());
        }
        if (algo != "dijkstra") {
          const ShortestPathResult oracle = Dijkstra(in.graph);
          for (NodeId v = 0; v < oracle.dist.size(); ++v) {
            if (oracle.dist[v] != result.dist[v]) {
              std::ostringstream msg;
              msg.precision(17);
              msg << algo << " disagrees with dijkstra at node " << in.original[v] << ": "
                  << result.dist[v] << " vs " << oracle.dist[v];
              throw InternalFailure(msg.str());
            }
          }
        }
      }
      out << ShortestPathToJson(result, in.original, in.input_nodes).dump() << '\n';
    } else if (width->parsed()) {
      const LoadedGraph in = Load(width_in, err);
      const std::size_t ac_width = BuildAcTree(in.graph).width();
      if (exact) {
        const std::size_t exact_width = BruteForceNestingWidth(in.graph);
        if (exact_width != ac_width) {
          throw InternalFailure("exhaustive width " + std::to_string(exact_width) +
                                " differs from A-C width " + std::to_string(ac_width));
        }
      }
      out << ac_width << '\n';
    } else if (bench->parsed()) {
      BenchOptions options;
      options.family = bench_family;
      options.sizes = ParseSizes(bench_sizes);
      options.seeds = bench_seeds.empty() ? std::vector<std::uint64_t>{DefaultSeed()}
                                          : ParseSeeds(bench_seeds);
      options.degree = bench_degree;
      options.repeat = bench_repeat;
      if (bench_out == "-") {
        RunBench(options, out);
      } else {
        std::ofstream csv(bench_out, std::ios::binary);
        if (!csv) throw UsageFailure("cannot write '" + bench_out + "'");
        RunBench(options, csv);
      }
    } else if (generate->parsed()) {
      const Graph g = GenerateFamily(gen_family, gen_size, gen_seed.value_or(DefaultSeed()),
                                     gen_degree);
      if (gen_format == "dimacs") {
        WriteDimacs(g, out);
      } else {
        WriteEdgeList(g, out);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalFailure& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace actree::tools
