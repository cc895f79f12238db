#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "actree/error.hpp"
#include "actree/generators.hpp"
#include "actree/graph.hpp"
#include "actree/graph_io.hpp"
#include "bench.hpp"
#include "cli.hpp"
#include "gtest/gtest.h"
#include "json.hpp"

namespace actree::tools {
namespace {

namespace fs = std::filesystem;

const fs::path kData = ACTREE_TEST_DATA_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const char* name) { return (kData / name).string(); }

class TempFile {
 public:
  explicit TempFile(const std::string& name, const std::string& contents = "")
      : path_(fs::temp_directory_path() / ("actree_cli_test_" + name)) {
    std::ofstream(path_, std::ios::binary) << contents;
  }
  ~TempFile() { fs::remove(path_); }
  std::string str() const { return path_.string(); }

 private:
  fs::path path_;
};

TEST(CliDecomposeTest, SingleNodeJson) {
  const CliRun r = Cli({"decompose", Data("single.txt"), "--json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"components\":{},\"width\":1}\n");
}

TEST(CliDecomposeTest, LayeredWidthTwo) {
  const CliRun r = Cli({"decompose", Data("layered2.txt"), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["width"], 2);
  EXPECT_EQ(j["components"]["0"].size(), 4u);

  const CliRun text = Cli({"decompose", Data("layered2.txt")});
  EXPECT_EQ(text.out.substr(0, 8), "width 2\n");
}

TEST(CliDecomposeTest, Deterministic) {
  const TempFile file("random.txt", ToEdgeList(GenRandomDigraph(200, 900, 4)));
  EXPECT_EQ(Cli({"decompose", file.str(), "--json"}).out, Cli({"decompose", file.str(), "--json"}).out);
}

TEST(CliErrorsTest, MalformedInputReportsLine) {
  const CliRun r = Cli({"decompose", Data("malformed.txt")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(CliErrorsTest, ExitCodes) {
  EXPECT_EQ(Cli({"sssp", Data("negative.txt")}).code, kExitContract);
  EXPECT_EQ(Cli({"sssp", Data("cycle.txt"), "--algo", "dag"}).code, kExitContract);
  EXPECT_EQ(Cli({"decompose", Data("no_such_file.txt")}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"sssp", Data("diamond.txt"), "--algo", "bogus"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CliSsspTest, DiamondAllEngines) {
  for (const char* algo : {"dijkstra", "recursive", "dag"}) {
    const CliRun r = Cli({"sssp", Data("diamond.txt"), "--algo", algo, "--verify"});
    ASSERT_EQ(r.code, kExitOk) << algo << ": " << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["dist"], nlohmann::json::parse("[0,1,4,3]")) << algo;
    EXPECT_EQ(j["parent"][0], nullptr);
    EXPECT_EQ(j["stats"]["pops"], 4);
  }
}

TEST(CliSsspTest, DimacsDetectedByExtension) {
  const CliRun r = Cli({"sssp", Data("diamond.gr")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["dist"], nlohmann::json::parse("[0,1,4,3]"));
  const CliRun forced = Cli({"sssp", Data("diamond.gr"), "--format", "edgelist"});
  EXPECT_EQ(forced.code, kExitUsage);
}

TEST(CliSsspTest, EnginesAgreeOnRandomFile) {
  const TempFile file("agree.txt", ToEdgeList(GenRandomDigraph(300, 1500, 9, {0.0, 5.0})));
  const auto a = nlohmann::json::parse(Cli({"sssp", file.str(), "--algo", "dijkstra"}).out);
  const auto b = nlohmann::json::parse(Cli({"sssp", file.str(), "--algo", "recursive", "--verify"}).out);
  EXPECT_EQ(a["dist"], b["dist"]);
}

TEST(CliSsspTest, PrunesWithWarning) {
  const CliRun r = Cli({"sssp", Data("unreachable.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("2 3"), std::string::npos) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["dist"].size(), 4u);
  EXPECT_EQ(j["dist"][2], nullptr);
  EXPECT_EQ(j["dist"][1], 1.0);
}

TEST(CliDominatorsTest, Cycle) {
  const CliRun r = Cli({"dominators", Data("cycle.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["idom"][1], 0);
  EXPECT_EQ(j["idom"][2], 1);
}

TEST(CliWidthTest, Values) {
  EXPECT_EQ(Cli({"width", Data("layered2.txt"), "--exact"}).out, "2\n");
  EXPECT_EQ(Cli({"width", Data("single.txt")}).out, "1\n");
  const TempFile k3("k3.txt", ToEdgeList(GenCompleteDigraph(3, 0)));
  EXPECT_EQ(Cli({"width", k3.str(), "--exact"}).out, "3\n");
  const TempFile big("big.txt", ToEdgeList(GenRandomDigraph(13, 30, 0)));
  EXPECT_EQ(Cli({"width", big.str()}).code, kExitOk);
  EXPECT_EQ(Cli({"width", big.str(), "--exact"}).code, kExitContract);
}

TEST(CliBenchTest, DagFamilyCsv) {
  const CliRun r = Cli({"bench", "--family", "dag", "--sizes", "2^6..2^8", "--seeds", "1,2", "--out", "-"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, kBenchCsvHeader);
  std::size_t rows = 0;
  std::size_t recursive = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
    ASSERT_EQ(cells.size(), 10u) << line;
    if (cells[4] == "recursive") {
      ++recursive;
      EXPECT_LE(std::stoul(cells[8]), 1u) << line;
      EXPECT_EQ(cells[9], "2");
    }
  }
  // 3 sizes x 2 seeds x {actree, dijkstra, recursive, dag}.
  EXPECT_EQ(rows, 24u);
  EXPECT_EQ(recursive, 6u);
}

TEST(CliBenchTest, WritesFile) {
  const TempFile out("bench.csv");
  ASSERT_EQ(Cli({"bench", "--family", "layered", "--sizes", "65", "--out", out.str()}).code, kExitOk);
  std::ifstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, kBenchCsvHeader);
}

TEST(CliBenchTest, BadArguments) {
  EXPECT_EQ(Cli({"bench", "--family", "dag", "--sizes", ""}).code, kExitUsage);
  EXPECT_EQ(Cli({"bench", "--family", "dag", "--sizes", "2^x"}).code, kExitUsage);
  EXPECT_EQ(Cli({"bench", "--family", "nope", "--sizes", "10"}).code, kExitUsage);
}

TEST(BenchParseTest, Sizes) {
  EXPECT_EQ(ParseSizes("10,2^3"), (std::vector<std::size_t>{10, 8}));
  EXPECT_EQ(ParseSizes("2^2..2^4"), (std::vector<std::size_t>{4, 8, 16}));
  EXPECT_THROW(ParseSizes(""), Error);
  EXPECT_THROW(ParseSizes("2^4..2^2"), Error);
  EXPECT_EQ(ParseSeeds("3,5"), (std::vector<std::uint64_t>{3, 5}));
}

TEST(CliGenerateTest, RoundTripsAndHonoursSeedEnv) {
  const CliRun a = Cli({"generate", "--family", "random", "--n", "50", "--seed", "17"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const Graph g = ParseEdgeList(a.out);
  EXPECT_EQ(g.node_count(), 50u);
  ::setenv("ACTREE_SEED", "17", 1);
  const CliRun b = Cli({"generate", "--family", "random", "--n", "50"});
  ::unsetenv("ACTREE_SEED");
  EXPECT_EQ(a.out, b.out);

  const CliRun dimacs = Cli({"generate", "--family", "layered", "--n", "9", "--format", "dimacs"});
  ASSERT_EQ(dimacs.code, kExitOk);
  EXPECT_EQ(ParseDimacs(dimacs.out), GenerateFamily("layered", 9, 1));
}

TEST(GenerateFamilyTest, AllFamiliesArePruned) {
  for (const std::string& family : FamilyNames()) {
    for (std::size_t size : {1u, 2u, 17u, 100u}) {
      const Graph g = GenerateFamily(family, size, 3);
      EXPECT_TRUE(PruneUnreachable(g).is_identity()) << family << " " << size;
    }
  }
  EXPECT_THROW(GenerateFamily("nope", 10, 0), Error);
}

}  // namespace
}  // namespace actree::tools
