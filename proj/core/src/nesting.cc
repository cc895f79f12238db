#include "actree/nesting.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "actree/error.hpp"

namespace actree {
namespace {

std::string Render(const NodeSet& s) {
  std::string out = "{";
  bool first = true;
  s.ForEach([&](NodeId v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

void GuardSize(const Graph& g) {
  if (g.node_count() > kMaxExactNodes) {
    throw Error(ErrorCode::kSizeGuardExceeded,
                std::to_string(g.node_count()) + " nodes exceeds the exact-search limit of " +
                    std::to_string(kMaxExactNodes));
  }
}

}  // namespace

std::optional<NodeId> ModuleSource(const Graph& g, const NodeSet& s) {
  if (s.universe() != g.node_count()) {
    throw Error(ErrorCode::kInvalidArgument, "node set universe does not match the graph");
  }
  if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "module candidate is empty");

  NodeId head = kNoNode;
  bool several = false;
  for (NodeId u = 0; u < g.node_count() && !several; ++u) {
    if (s.contains(u)) continue;
    for (const Arc& a : g.OutArcs(u)) {
      if (!s.contains(a.head)) continue;
      if (head == kNoNode) {
        head = a.head;
      } else if (head != a.head) {
        several = true;
        break;
      }
    }
  }
  if (s.contains(g.source())) {
    if (several || (head != kNoNode && head != g.source())) return std::nullopt;
    return g.source();
  }
  if (several || head == kNoNode) return std::nullopt;
  return head;
}

bool ModuleClosureHolds(const Graph& g, const NodeSet& m, const NodeSet& h) {
  if (!m.Overlaps(h)) {
    throw Error(ErrorCode::kOverlapRequired, Render(m) + " and " + Render(h) + " do not overlap");
  }
  if (!IsModule(g, m) || !IsModule(g, h)) {
    throw Error(ErrorCode::kInvalidArgument, "closure check needs two modules");
  }
  return IsModule(g, m | h) && IsModule(g, m & h);
}

void ValidateFamily(const Graph& g, const NestingFamily& family) {
  const std::size_t n = g.node_count();
  std::vector<bool> singleton(n, false);
  bool whole = false;
  for (const NodeSet& s : family.sets) {
    if (s.universe() != n) {
      throw Error(ErrorCode::kFamilyInvariant, "member over the wrong universe");
    }
    if (s.empty()) throw Error(ErrorCode::kFamilyInvariant, "empty member");
    const std::size_t size = s.count();
    if (size == 1) singleton[s.members().front()] = true;
    if (size == n) whole = true;
    if (!IsModule(g, s)) {
      throw Error(ErrorCode::kFamilyInvariant, Render(s) + " is not a module");
    }
  }
  if (!whole) throw Error(ErrorCode::kFamilyInvariant, "whole node set missing");
  for (NodeId v = 0; v < n; ++v) {
    if (!singleton[v]) {
      throw Error(ErrorCode::kFamilyInvariant, "singleton {" + std::to_string(v) + "} missing");
    }
  }
  for (std::size_t i = 0; i < family.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < family.sets.size(); ++j) {
      if (family.sets[i].Overlaps(family.sets[j])) {
        throw Error(ErrorCode::kFamilyInvariant,
                    Render(family.sets[i]) + " overlaps " + Render(family.sets[j]));
      }
    }
  }
}

std::size_t FamilyWidth(const Graph& g, const NestingFamily& family) {
  ValidateFamily(g, family);
  if (g.node_count() == 1) return 1;

  std::vector<std::pair<std::size_t, NodeSet>> sets;
  for (const NodeSet& s : family.sets) sets.emplace_back(s.count(), s);
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  // Laminar: the supersets of a member form a chain, so the nearest larger
  // one found scanning backwards is its parent.
  std::vector<std::size_t> child_count(sets.size(), 0);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    for (std::size_t j = i; j-- > 0;) {
      if (sets[j].first > sets[i].first && sets[i].second.IsSubsetOf(sets[j].second)) {
        ++child_count[j];
        break;
      }
    }
  }
  return *std::max_element(child_count.begin(), child_count.end());
}

std::vector<std::uint32_t> ModuleMasks(const Graph& g) {
  GuardSize(g);
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> pred(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (const Arc& a : g.OutArcs(u)) pred[a.head] |= std::uint32_t{1} << u;
  }
  const std::uint32_t source_bit = std::uint32_t{1} << g.source();
  std::vector<std::uint32_t> modules;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::uint32_t heads = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((pred[v] & ~mask) != 0) heads |= std::uint32_t{1} << v;
    }
    const bool module = (mask & source_bit) != 0 ? (heads & ~source_bit) == 0
                                                 : std::popcount(heads) == 1;
    if (module) modules.push_back(mask);
  }
  return modules;
}

std::size_t BruteForceNestingWidth(const Graph& g) {
  GuardSize(g);
  const std::size_t n = g.node_count();
  if (n == 1) return 1;

  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> modules = ModuleMasks(g);
  std::stable_sort(modules.begin(), modules.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });

  constexpr int kNotModule = -1;
  // best[M]: minimum width of a decomposition of module M (0 for singletons).
  std::vector<int> best(std::size_t{1} << n, kNotModule);
  std::vector<int> cover(std::size_t{1} << n, 0);

  for (std::uint32_t m : modules) {
    const int size = std::popcount(m);
    if (size == 1) {
      best[m] = 0;
      continue;
    }
    // Smallest t such that M splits into at most t proper submodules whose
    // own decompositions have width <= t. t = |M| always works (singletons).
    for (int t = 2;; ++t) {
      cover[0] = 0;
      // Submasks of m in increasing numeric order, so r ^ p is done before r.
      std::uint32_t r = 0;
      do {
        r = (r - m) & m;
        const std::uint32_t low = r & (~r + 1);
        int min_parts = size + 1;
        // Parts containing the lowest node of r.
        for (std::uint32_t p = r; p != 0; p = (p - 1) & r) {
          if ((p & low) == 0 || p == m) continue;
          const int f = best[p];
          if (f == kNotModule || f > t) continue;
          min_parts = std::min(min_parts, 1 + cover[r ^ p]);
        }
        cover[r] = min_parts;
      } while (r != m);
      if (cover[m] <= t) {
        best[m] = t;
        break;
      }
    }
  }
  return static_cast<std::size_t>(std::max(best[full], 1));
}

}  // namespace actree
