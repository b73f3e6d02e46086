#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dicograph/decomposition.hpp"
#include "dicograph/patterns.hpp"
#include "dicograph/recognizers.hpp"

using namespace dicograph;

namespace {

Expression random_expression(std::mt19937& rng, int leaves) {
  if (leaves == 1) return Expression::leaf();
  const int left = std::uniform_int_distribution<int>(1, leaves - 1)(rng);
  const OpKind op = static_cast<OpKind>(std::uniform_int_distribution<int>(1, 3)(rng));
  return Expression::make(op, {random_expression(rng, left), random_expression(rng, leaves - left)});
}

Digraph shuffled(const Digraph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST(MaximalSplit, Union) {
  const Split s = maximal_split(Digraph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(s.kind, SplitKind::Union);
  EXPECT_EQ(s.parts, (std::vector<VertexMask>{0b0011, 0b1100}));
}

TEST(MaximalSplit, Order) {
  const Split s = maximal_split(Digraph(3, {{2, 1}, {2, 0}, {1, 0}}));
  EXPECT_EQ(s.kind, SplitKind::Order);
  EXPECT_EQ(s.parts, (std::vector<VertexMask>{0b100, 0b010, 0b001}));
  const Split x = maximal_split(evaluate(parse_expression("order(union(v, v), v)")));
  EXPECT_EQ(x.kind, SplitKind::Order);
  EXPECT_EQ(x.parts, (std::vector<VertexMask>{0b011, 0b100}));
}

TEST(MaximalSplit, Series) {
  const Split s = maximal_split(evaluate(parse_expression("series(v, v, order(v, v))")));
  EXPECT_EQ(s.kind, SplitKind::Series);
  EXPECT_EQ(s.parts.size(), 3U);
}

TEST(MaximalSplit, Prime) {
  EXPECT_EQ(maximal_split(pattern("D5").graph).kind, SplitKind::Prime);
  EXPECT_EQ(maximal_split(pattern("D1").graph).kind, SplitKind::Prime);
  EXPECT_THROW(maximal_split(Digraph(1)), std::invalid_argument);
}

TEST(DiCoTree, Examples) {
  EXPECT_EQ(format(*di_co_tree(evaluate(parse_expression("series(v, v, v)")))), "series(v, v, v)");
  EXPECT_EQ(format(*di_co_tree(Digraph(1))), "v");
  const auto q5 = di_co_tree(pattern("Q5").graph);
  ASSERT_TRUE(q5);
  EXPECT_EQ(format(*q5), format(parse_expression("order(series(v, v), union(order(v, v), v))")));
  EXPECT_FALSE(di_co_tree(pattern("D5").graph));
  EXPECT_FALSE(di_co_tree(pattern("D8").graph));
}

TEST(DiCoTree, RecoversRandomExpressions) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Expression e = random_expression(rng, 1 + trial % 20);
    const Digraph g = shuffled(evaluate(e), rng);
    const auto tree = di_co_tree_labeled(g);
    ASSERT_TRUE(tree);
    EXPECT_EQ(format(tree->expression), format(e));
    EXPECT_EQ(relabel(g, tree->leaf_vertices), evaluate(tree->expression));
  }
}

TEST(CreationSequence, Examples) {
  auto edgeless = creation_sequence(Digraph(3), true);
  ASSERT_TRUE(edgeless);
  EXPECT_EQ(edgeless->digits, "100");
  const Digraph t4 = evaluate(parse_expression("order(v, v, v, v)"));
  auto tt = creation_sequence(t4, false);
  ASSERT_TRUE(tt);
  EXPECT_TRUE(isomorphic(replay(tt->digits), t4));
  EXPECT_FALSE(creation_sequence(Digraph(4, {{0, 1}, {1, 2}, {2, 3}}), true));
  EXPECT_FALSE(creation_sequence(pattern("D5").graph, true));
  EXPECT_FALSE(creation_sequence(pattern("K2bidir").graph, false));
  EXPECT_EQ(creation_sequence(pattern("K2bidir").graph, true)->digits, "13");
}

TEST(CreationSequence, OrderRebuildsInput) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> digit(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::string digits = "1";
    for (int i = 1; i < 2 + trial % 30; ++i) digits += static_cast<char>('0' + digit(rng));
    const Digraph g = shuffled(replay(digits), rng);
    auto seq = creation_sequence(g, true);
    ASSERT_TRUE(seq) << digits;
    EXPECT_EQ(relabel(g, seq->order), replay(seq->digits));
  }
}

TEST(CreationSequence, GreedyMatchesExhaustive) {
  std::mt19937 rng(3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + trial % 6;
    Digraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng)) g.add_arc(u, v);
    for (bool series : {true, false}) {
      EXPECT_EQ(creation_sequence(g, series).has_value(), creation_sequence_exists_exhaustive(g, series));
    }
  }
}

TEST(CreationSequence, ArcListInput) {
  const std::string digits = "1" + std::string(199, '0') + "2" + std::string(99, '1');
  const auto arcs = replay_arcs(digits);
  auto seq = creation_sequence(static_cast<int>(digits.size()), arcs, true);
  ASSERT_TRUE(seq);
  EXPECT_EQ(seq->order.size(), digits.size());
  const std::vector<Arc> dup = {{0, 1}, {0, 1}};
  EXPECT_THROW(creation_sequence(2, dup, true), std::invalid_argument);
  const std::vector<Arc> loop = {{1, 1}};
  EXPECT_THROW(creation_sequence(2, loop, true), std::invalid_argument);
}

TEST(CreationSequence, LargeShuffledMembers) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> digit(0, 3);
  for (int n : {500, 5000}) {
    std::string digits = "1";
    for (int i = 1; i < n; ++i) digits += static_cast<char>('0' + (rng() % 50 == 0 ? digit(rng) : 0));
    auto arcs = replay_arcs(digits);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [u, v] : arcs) {
      u = perm[u];
      v = perm[v];
    }
    std::shuffle(arcs.begin(), arcs.end(), rng);
    auto seq = creation_sequence(n, arcs, true);
    ASSERT_TRUE(seq);
    // Mapping the input through the peel order gives back the replayed arcs.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[seq->order[i]] = i;
    std::vector<Arc> mapped;
    for (auto [u, v] : arcs) mapped.emplace_back(pos[u], pos[v]);
    auto rebuilt = replay_arcs(seq->digits);
    std::sort(mapped.begin(), mapped.end());
    std::sort(rebuilt.begin(), rebuilt.end());
    EXPECT_EQ(mapped, rebuilt);
  }
}

// One arc toggled in a member: the peel must agree with the forbidden patterns.
TEST(CreationSequence, PerturbedMembersMatchPatterns) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> digit(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 9;
    std::string digits = "1";
    for (int i = 1; i < n; ++i) digits += static_cast<char>('0' + digit(rng));
    Digraph g = shuffled(replay(digits), rng);
    const int u = static_cast<int>(rng() % n);
    const int v = (u + 1 + static_cast<int>(rng() % (n - 1))) % n;
    if (g.has_arc(u, v)) {
      g.remove_arc(u, v);
    } else {
      g.add_arc(u, v);
    }
    EXPECT_EQ(creation_sequence(g, true).has_value(), member_by_patterns(g, ClassId::DT).member) << digits;
    EXPECT_EQ(creation_sequence(g, false).has_value(), member_by_patterns(g, ClassId::OT).member) << digits;
  }
}

TEST(Replay, Digits) {
  EXPECT_EQ(replay("12"), Digraph(2, {{0, 1}}));
  EXPECT_EQ(replay("11"), Digraph(2, {{1, 0}}));
  EXPECT_EQ(replay("13"), Digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_THROW(replay("01"), std::invalid_argument);
  EXPECT_THROW(replay("14"), std::invalid_argument);
}
