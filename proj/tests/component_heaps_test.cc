#include "actree/component_heaps.hpp"

#include <algorithm>
#include <random>

#include "actree/error.hpp"
#include "gtest/gtest.h"

namespace actree {
namespace {

TEST(ComponentHeapsTest, PopsInKeyOrderWithIdTieBreak) {
  std::vector<Weight> keys = {5, 1, 3, 1, 2};
  const std::vector<std::size_t> caps = {5};
  ComponentHeaps heaps(caps, keys);
  for (NodeId v : {0u, 1u, 2u, 3u, 4u}) heaps.Push(0, v);
  EXPECT_EQ(heaps.size(0), 5u);
  std::vector<NodeId> order;
  while (!heaps.empty(0)) order.push_back(heaps.PopMin(0));
  EXPECT_EQ(order, (std::vector<NodeId>{1, 3, 4, 2, 0}));
  EXPECT_FALSE(heaps.contains(1));
}

TEST(ComponentHeapsTest, DecreaseKeyReorders) {
  std::vector<Weight> keys = {5, 4, 3};
  const std::vector<std::size_t> caps = {3};
  ComponentHeaps heaps(caps, keys);
  for (NodeId v : {0u, 1u, 2u}) heaps.Push(0, v);
  EXPECT_EQ(heaps.Top(0), 2u);
  keys[0] = 1;
  heaps.DecreaseKey(0);
  EXPECT_EQ(heaps.PopMin(0), 0u);
  EXPECT_EQ(heaps.PopMin(0), 2u);
  EXPECT_EQ(heaps.PopMin(0), 1u);
}

TEST(ComponentHeapsTest, ComponentsAreIndependent) {
  std::vector<Weight> keys = {3, 2, 1, 0};
  const std::vector<std::size_t> caps = {2, 0, 2};
  ComponentHeaps heaps(caps, keys);
  heaps.Push(0, 0);
  heaps.Push(0, 1);
  heaps.Push(2, 2);
  heaps.Push(2, 3);
  EXPECT_TRUE(heaps.empty(1));
  EXPECT_EQ(heaps.PopMin(0), 1u);
  EXPECT_EQ(heaps.PopMin(2), 3u);
  EXPECT_EQ(heaps.size(0), 1u);
  EXPECT_EQ(heaps.size(2), 1u);
  EXPECT_THROW(heaps.Push(1, 1), Error);
}

TEST(ComponentHeapsTest, MatchesSortedOrderUnderRandomOperations) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 1 + rng() % 200;
    std::vector<Weight> keys(n);
    for (auto& k : keys) k = static_cast<Weight>(rng() % 50);
    const std::vector<std::size_t> caps = {n};
    ComponentHeaps heaps(caps, keys);
    for (NodeId v = 0; v < n; ++v) heaps.Push(0, v);
    for (std::size_t i = 0; i < n; ++i) {
      const NodeId v = static_cast<NodeId>(rng() % n);
      if (keys[v] > 0) {
        keys[v] -= 1 + static_cast<Weight>(rng() % static_cast<std::uint64_t>(keys[v]));
        heaps.DecreaseKey(v);
      }
    }
    std::vector<NodeId> expected(n);
    for (NodeId v = 0; v < n; ++v) expected[v] = v;
    std::sort(expected.begin(), expected.end(), [&](NodeId a, NodeId b) {
      return keys[a] < keys[b] || (keys[a] == keys[b] && a < b);
    });
    std::vector<NodeId> got;
    while (!heaps.empty(0)) got.push_back(heaps.PopMin(0));
    EXPECT_EQ(got, expected);
  }
}

}  // namespace
}  // namespace actree
