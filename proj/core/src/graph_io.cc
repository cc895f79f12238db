#include "actree/graph_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <vector>

#include "actree/error.hpp"

namespace actree {
namespace {

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

// Calls fn(line_number, tokens) for every non-blank line.
template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    auto tokens = SplitWhitespace(line);
    if (!tokens.empty()) fn(line_no, tokens);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
}

std::int64_t ParseInteger(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kMalformedLine, "expected integer, got '" + std::string(token) + "'",
                line);
  }
  return value;
}

Weight ParseWeight(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::kMalformedLine, "expected weight, got '" + std::string(token) + "'",
                line);
  }
  if (value < 0.0) {
    throw Error(ErrorCode::kNegativeWeight, "weight " + std::string(token), line);
  }
  return value;
}

NodeId ParseNode(std::string_view token, std::int64_t offset, std::int64_t n, std::size_t line) {
  const std::int64_t raw = ParseInteger(token, line);
  const std::int64_t id = raw - offset;
  if (id < 0 || id >= n) {
    throw Error(ErrorCode::kIdOutOfRange,
                "node " + std::string(token) + " outside " + std::to_string(n) + " nodes", line);
  }
  return static_cast<NodeId>(id);
}

std::int64_t ParseNodeCount(std::string_view token, std::size_t line) {
  const std::int64_t n = ParseInteger(token, line);
  if (n < 1 || n >= static_cast<std::int64_t>(kNoNode)) {
    throw Error(ErrorCode::kMalformedLine, "node count must be positive", line);
  }
  return n;
}

std::int64_t ParseArcCount(std::string_view token, std::size_t line) {
  const std::int64_t m = ParseInteger(token, line);
  if (m < 0) throw Error(ErrorCode::kMalformedLine, "negative arc count", line);
  return m;
}

std::string ReadAll(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  bool have_header = false;
  std::size_t header_line = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  NodeId source = 0;
  std::vector<ArcRecord> arcs;

  ForEachLine(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (tok[0].front() == '#') return;
    if (!have_header) {
      if (tok.size() != 3) throw Error(ErrorCode::kMalformedLine, "header must be 'n m s'", line);
      n = ParseNodeCount(tok[0], line);
      m = ParseArcCount(tok[1], line);
      source = ParseNode(tok[2], 0, n, line);
      have_header = true;
      header_line = line;
      return;
    }
    if (tok.size() != 2 && tok.size() != 3) {
      throw Error(ErrorCode::kMalformedLine, "arc line must be 'u v [w]'", line);
    }
    if (static_cast<std::int64_t>(arcs.size()) == m) {
      throw Error(ErrorCode::kArcCountMismatch,
                  "more arc lines than the " + std::to_string(m) + " declared", line);
    }
    ArcRecord a;
    a.tail = ParseNode(tok[0], 0, n, line);
    a.head = ParseNode(tok[1], 0, n, line);
    a.weight = tok.size() == 3 ? ParseWeight(tok[2], line) : kDefaultWeight;
    arcs.push_back(a);
  });

  if (!have_header) throw Error(ErrorCode::kMalformedLine, "missing 'n m s' header", 1);
  if (static_cast<std::int64_t>(arcs.size()) != m) {
    throw Error(ErrorCode::kArcCountMismatch,
                "header declares " + std::to_string(m) + " arcs, found " +
                    std::to_string(arcs.size()),
                header_line);
  }
  return Graph(static_cast<std::size_t>(n), source, arcs);
}

Graph ParseEdgeList(std::istream& in) { return ParseEdgeList(ReadAll(in)); }

Graph ParseDimacs(std::string_view text, std::size_t source) {
  bool have_problem = false;
  std::size_t problem_line = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<ArcRecord> arcs;

  ForEachLine(text, [&](std::size_t line, const std::vector<std::string_view>& tok) {
    if (tok[0].front() == 'c') return;
    if (tok[0] == "p") {
      if (have_problem) throw Error(ErrorCode::kMalformedLine, "duplicate problem line", line);
      if (tok.size() < 2) throw Error(ErrorCode::kMalformedLine, "empty problem line", line);
      if (tok[1] != "sp") {
        throw Error(ErrorCode::kWrongProblemTag, "expected 'sp', got '" + std::string(tok[1]) + "'",
                    line);
      }
      if (tok.size() != 4) throw Error(ErrorCode::kMalformedLine, "expected 'p sp n m'", line);
      n = ParseNodeCount(tok[2], line);
      m = ParseArcCount(tok[3], line);
      have_problem = true;
      problem_line = line;
      return;
    }
    if (tok[0] == "a") {
      if (!have_problem) throw Error(ErrorCode::kArcBeforeHeader, "arc before 'p sp' line", line);
      if (tok.size() != 3 && tok.size() != 4) {
        throw Error(ErrorCode::kMalformedLine, "expected 'a u v w'", line);
      }
      if (static_cast<std::int64_t>(arcs.size()) == m) {
        throw Error(ErrorCode::kArcCountMismatch,
                    "more arcs than the " + std::to_string(m) + " declared", line);
      }
      ArcRecord a;
      a.tail = ParseNode(tok[1], 1, n, line);
      a.head = ParseNode(tok[2], 1, n, line);
      a.weight = tok.size() == 4 ? ParseWeight(tok[3], line) : kDefaultWeight;
      arcs.push_back(a);
      return;
    }
    throw Error(ErrorCode::kMalformedLine, "unknown line type '" + std::string(tok[0]) + "'",
                line);
  });

  if (!have_problem) throw Error(ErrorCode::kMissingProblemLine, "no 'p sp n m' line");
  if (static_cast<std::int64_t>(arcs.size()) != m) {
    throw Error(ErrorCode::kArcCountMismatch,
                "problem line declares " + std::to_string(m) + " arcs, found " +
                    std::to_string(arcs.size()),
                problem_line);
  }
  if (source < 1 || static_cast<std::int64_t>(source) > n) {
    throw Error(ErrorCode::kIdOutOfRange,
                "source " + std::to_string(source) + " outside 1.." + std::to_string(n));
  }
  return Graph(static_cast<std::size_t>(n), static_cast<NodeId>(source - 1), arcs);
}

Graph ParseDimacs(std::istream& in, std::size_t source) { return ParseDimacs(ReadAll(in), source); }

std::string FormatWeight(Weight w) {
  // Fixed notation of the smallest subnormal needs ~330 characters.
  std::array<char, 1100> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), w, std::chars_format::fixed);
  if (ec != std::errc{}) throw Error(ErrorCode::kInvalidArgument, "unformattable weight");
  return std::string(buf.data(), ptr);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  out << g.node_count() << ' ' << g.arc_count() << ' ' << g.source() << '\n';
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (const Arc& a : g.OutArcs(v)) {
      out << v << ' ' << a.head << ' ' << FormatWeight(a.weight) << '\n';
    }
  }
}

void WriteDimacs(const Graph& g, std::ostream& out) {
  out << "p sp " << g.node_count() << ' ' << g.arc_count() << '\n';
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (const Arc& a : g.OutArcs(v)) {
      out << "a " << v + 1 << ' ' << a.head + 1 << ' ' << FormatWeight(a.weight) << '\n';
    }
  }
}

std::string ToEdgeList(const Graph& g) {
  std::ostringstream out;
  WriteEdgeList(g, out);
  return out.str();
}

std::string ToDimacs(const Graph& g) {
  std::ostringstream out;
  WriteDimacs(g, out);
  return out.str();
}

GraphFormat DetectFormat(std::string_view path) {
  for (std::string_view ext : {".gr", ".dimacs", ".sp"}) {
    if (path.size() >= ext.size() && path.substr(path.size() - ext.size()) == ext) {
      return GraphFormat::kDimacs;
    }
  }
  return GraphFormat::kEdgeList;
}

}  // namespace actree
