#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dicograph/digraph.hpp"

using namespace dicograph;

namespace {

Digraph cycle3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

Digraph transitive_tournament(int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_arc(u, v);
  return g;
}

Digraph random_digraph(int n, std::mt19937& rng, double p = 0.4) {
  std::bernoulli_distribution coin(p);
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng)) g.add_arc(u, v);
  return g;
}

}  // namespace

TEST(Digraph, ArcsAndMasks) {
  Digraph g(4, {{0, 1}, {1, 0}, {2, 3}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.arc_count(), 3);
  EXPECT_TRUE(g.has_arc(2, 3));
  EXPECT_FALSE(g.has_arc(3, 2));
  EXPECT_TRUE(g.adjacent(3, 2));
  EXPECT_EQ(g.out_mask(0), VertexMask{0b0010});
  EXPECT_EQ(g.in_mask(3), VertexMask{0b0100});
  EXPECT_EQ(g.all_vertices(), VertexMask{0b1111});
  g.remove_arc(1, 0);
  EXPECT_EQ(g.arcs(), (std::vector<Arc>{{0, 1}, {2, 3}}));
}

TEST(Digraph, RejectsLoopsAndBadVertices) {
  Digraph g(3);
  EXPECT_THROW(g.add_arc(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_arc(0, 3), std::invalid_argument);
  EXPECT_THROW(Digraph(0), std::invalid_argument);
  EXPECT_THROW(Digraph(65), std::invalid_argument);
}

TEST(Digraph, SixtyFourVertices) {
  Digraph g(64);
  g.add_arc(63, 0);
  EXPECT_EQ(g.all_vertices(), ~VertexMask{0});
  EXPECT_EQ(complement(g).arc_count(), 64 * 63 - 1);
}

TEST(Transforms, ComplementAndConverse) {
  const Digraph c3 = cycle3();
  const Digraph co = complement(c3);
  EXPECT_EQ(co, Digraph(3, {{1, 0}, {2, 1}, {0, 2}}));
  EXPECT_EQ(converse(c3), co);
  EXPECT_EQ(complement(complement(c3)), c3);
}

TEST(Transforms, UnderlyingAndParts) {
  Digraph g(3, {{0, 1}, {1, 0}, {1, 2}});
  const UndirectedGraph un = underlying(g);
  EXPECT_EQ(un.edge_count(), 2);
  EXPECT_TRUE(un.has_edge(2, 1));
  const SymAsymParts parts = sym_asym_parts(g);
  EXPECT_EQ(parts.symmetric, Digraph(3, {{0, 1}, {1, 0}}));
  EXPECT_EQ(parts.asymmetric, Digraph(3, {{1, 2}}));
}

TEST(Transforms, InducedAndDelete) {
  const Digraph t = transitive_tournament(5);
  const Digraph sub = induced(t, VertexMask{0b10101});
  EXPECT_EQ(sub, transitive_tournament(3));
  const std::vector<int> picked = {4, 0};
  EXPECT_EQ(induced(t, picked), Digraph(2, {{0, 1}}));  // relabelled in vertex order
  EXPECT_EQ(delete_vertex(cycle3(), 0), Digraph(2, {{0, 1}}));
  EXPECT_THROW(induced(t, VertexMask{0}), std::invalid_argument);
}

TEST(Transforms, Relabel) {
  const std::vector<int> order = {2, 0, 1};
  const Digraph r = relabel(Digraph(3, {{0, 1}}), order);
  EXPECT_EQ(r, Digraph(3, {{1, 2}}));
}

TEST(Predicates, TransitiveTournament) {
  const Predicates p = predicates(transitive_tournament(5));
  EXPECT_TRUE(p.is_tournament);
  EXPECT_TRUE(p.is_transitive);
  EXPECT_TRUE(p.is_acyclic);
  EXPECT_TRUE(p.is_oriented);
  EXPECT_FALSE(p.is_edgeless);
  EXPECT_FALSE(p.is_bidirectional_complete);
}

TEST(Predicates, DirectedTriangle) {
  const Predicates p = predicates(cycle3());
  EXPECT_TRUE(p.is_tournament);
  EXPECT_FALSE(p.is_transitive);
  EXPECT_FALSE(p.is_acyclic);
}

TEST(Predicates, EdgelessAndComplete) {
  EXPECT_TRUE(predicates(Digraph(3)).is_edgeless);
  EXPECT_TRUE(predicates(complement(Digraph(3))).is_bidirectional_complete);
  EXPECT_TRUE(is_symmetric(complement(Digraph(3))));
  EXPECT_FALSE(is_oriented(Digraph(2, {{0, 1}, {1, 0}})));
}

TEST(Isomorphism, FindsMapping) {
  const Digraph g(4, {{0, 1}, {1, 2}, {3, 2}});
  const std::vector<int> perm = {3, 1, 0, 2};
  const Digraph h = relabel(g, perm);
  auto iso = isomorphic(g, h);
  ASSERT_TRUE(iso);
  for (auto [u, v] : g.arcs()) EXPECT_TRUE(h.has_arc(iso->mapping[u], iso->mapping[v]));
  EXPECT_FALSE(isomorphic(cycle3(), transitive_tournament(3)));
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const Digraph g = random_digraph(n, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Digraph h = relabel(g, perm);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_EQ(canonical_digraph(g), canonical_digraph(h));
    EXPECT_TRUE(isomorphic(g, canonical_digraph(g)));
    EXPECT_EQ(digraph_from_code(canonical_code(g)), canonical_digraph(g));
  }
}

TEST(CanonicalForm, SeparatesNonIsomorphic) {
  EXPECT_NE(canonical_form(cycle3()), canonical_form(transitive_tournament(3)));
  EXPECT_NE(canonical_code(Digraph(3, {{0, 1}})), canonical_code(Digraph(3, {{0, 1}, {1, 0}})));
}

// Brute-force dedupe of labeled digraphs; the counts are the numbers of
// digraphs up to isomorphism on n vertices.
TEST(CanonicalForm, LabeledDedupeCounts) {
  const std::size_t expected[] = {0, 1, 3, 16, 218};
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * pairs)); ++code) {
      Digraph g(n);
      std::uint64_t c = code;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, c >>= 2) {
          if (c & 1U) g.add_arc(u, v);
          if (c & 2U) g.add_arc(v, u);
        }
      }
      seen.insert(canonical_form(g));
    }
    EXPECT_EQ(seen.size(), expected[n]) << "n = " << n;
  }
}

TEST(CanonicalForm, Text) {
  EXPECT_EQ(canonical_text(Digraph(1)), "1:");
  EXPECT_EQ(canonical_text(Digraph(2, {{1, 0}})), canonical_text(Digraph(2, {{0, 1}})));
  EXPECT_EQ(canonical_text(Digraph(2, {{1, 0}, {0, 1}})), "2:0>1,1>0");
}

TEST(CanonicalForm, LargeSymmetricInputs) {
  EXPECT_EQ(canonical_form(Digraph(40)), canonical_form(Digraph(40)));
  const Digraph k = complement(Digraph(30));
  EXPECT_EQ(canonical_digraph(k), k);
}

TEST(UndirectedGraph, Basics) {
  UndirectedGraph g(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_EQ(complement(g).edge_count(), 4);
  EXPECT_EQ(g.as_symmetric_digraph().arc_count(), 4);
  EXPECT_EQ(induced(g, VertexMask{0b0111}).edge_count(), 2);
}
