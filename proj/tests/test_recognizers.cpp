#include <gtest/gtest.h>

#include <algorithm>

#include "dicograph/miner.hpp"
#include "dicograph/recognizers.hpp"

using namespace dicograph;

namespace {

Digraph expr(const char* text) { return evaluate(parse_expression(text)); }

bool has(const std::vector<ClassId>& ids, ClassId id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); }

}  // namespace

TEST(Classes, Names) {
  for (ClassId id : kAllClasses) EXPECT_EQ(parse_class(to_string(id)), id);
  EXPECT_EQ(parse_class("SPO"), ClassId::OC);
  EXPECT_FALSE(parse_class("XYZ"));
}

TEST(Constructive, TransitiveTournament) {
  const auto r = member_constructive(expr("order(v, v, v, v, v)"), ClassId::OT);
  EXPECT_TRUE(r.member);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(format(*r.certificate), "order(v, v, v, v, v)");
}

TEST(Constructive, Examples) {
  EXPECT_FALSE(member_constructive(pattern("Q7").graph, ClassId::OWQT).member);
  EXPECT_TRUE(member_constructive(pattern("Q7").graph, ClassId::OC).member);
  EXPECT_TRUE(member_constructive(expr("union(series(v, v, v), series(v, v, v))"), ClassId::DCWQT).member);
  EXPECT_FALSE(member_constructive(pattern("D5").graph, ClassId::DC).member);
  EXPECT_TRUE(member_constructive(pattern("K2bidir").graph, ClassId::DT).member);
  EXPECT_FALSE(member_constructive(pattern("K2bidir").graph, ClassId::OT).member);
  EXPECT_THROW(member_constructive(Digraph(1), ClassId::TD), std::invalid_argument);
  EXPECT_THROW(member_constructive(Digraph(1), ClassId::FD), std::invalid_argument);
}

TEST(Constructive, RuleTable) {
  EXPECT_FALSE(class_spec(ClassId::TT));
  EXPECT_FALSE(class_spec(ClassId::TD));
  const ClassSpec dt = *class_spec(ClassId::DT);
  EXPECT_EQ(dt.series_rule.mode, Mode::One);
  EXPECT_EQ(dt.series_rule.rest, RestKind::Singleton);
  EXPECT_EQ(class_spec(ClassId::OC)->series_rule.mode, Mode::Forbidden);
  EXPECT_EQ(class_spec(ClassId::OCWQT)->union_rule.rest, RestKind::TransitiveTournament);
  EXPECT_TRUE(is_rest_kind(Digraph(1), RestKind::Edgeless));
  EXPECT_TRUE(is_rest_kind(expr("order(v, v, v)"), RestKind::TransitiveTournament));
  EXPECT_FALSE(is_rest_kind(expr("order(v, v, v)"), RestKind::Singleton));
}

TEST(Patterns, Examples) {
  EXPECT_FALSE(member_by_patterns(pattern("D5").graph, ClassId::TD).member);
  EXPECT_TRUE(member_by_patterns(expr("order(v, v, v, v)"), ClassId::FD).member);
  const auto fd = member_by_patterns(pattern("K2bidir").graph, ClassId::FD);
  EXPECT_FALSE(fd.member);
  ASSERT_TRUE(fd.witness);
  EXPECT_EQ(fd.witness->pattern, alternating_anticircuit().name);
  const auto oc = member_by_patterns(pattern("D8").graph, ClassId::OC);
  ASSERT_TRUE(oc.witness);
  EXPECT_EQ(oc.witness->pattern, "D8");
  EXPECT_FALSE(member_by_patterns(Digraph(4, {{0, 1}, {1, 2}, {2, 3}}), ClassId::DT).member);
}

TEST(Classify, SingleVertex) {
  const auto ids = classify(Digraph(1));
  EXPECT_EQ(ids.size(), std::size(kAllClasses));
}

TEST(Classify, TransitiveTriangle) {
  const auto ids = classify(expr("order(v, v, v)"));
  for (ClassId id : {ClassId::TT, ClassId::OT, ClassId::OCTP, ClassId::OTP, ClassId::OCWQT, ClassId::OCSC,
                     ClassId::OSC, ClassId::OWQT, ClassId::OC, ClassId::DT, ClassId::DTP, ClassId::DC}) {
    EXPECT_TRUE(has(ids, id)) << to_string(id);
  }
  EXPECT_FALSE(has(ids, ClassId::EdgelessD));
}

TEST(Classify, DirectedTriangle) {
  const auto ids = classify(pattern("D5").graph);
  for (ClassId id : ids) {
    EXPECT_TRUE(id == ClassId::FD || id == ClassId::EdgelessD) << to_string(id);
  }
  EXPECT_TRUE(ids.empty());
}

TEST(Decide, CertificatesAndWitnesses) {
  const Verdict yes = decide(expr("series(v, order(v, v))"), ClassId::DC);
  EXPECT_TRUE(yes.member);
  ASSERT_TRUE(yes.certificate);
  EXPECT_TRUE(isomorphic(evaluate(*yes.certificate), expr("series(v, order(v, v))")));
  const Verdict no = decide(pattern("D6").graph, ClassId::DC);
  EXPECT_FALSE(no.member);
  ASSERT_TRUE(no.witness);
  EXPECT_EQ(no.witness->pattern, "D6");
}

TEST(Decide, LargeInputsSkipPatternRoute) {
  std::vector<Expression> leaves(40, Expression::leaf());
  const Digraph big = evaluate(Expression::order_of(leaves));
  const Verdict v = decide(big, ClassId::OT);
  EXPECT_TRUE(v.member);
  EXPECT_FALSE(v.witness);
}

TEST(Oracle, SmallTables) {
  EXPECT_EQ(oracle_members(ClassId::DC, 1).size(), 1U);
  const auto& oc2 = oracle_members(ClassId::OC, 2);
  EXPECT_EQ(oc2, (std::set<std::uint64_t>{canonical_code(Digraph(2)), canonical_code(Digraph(2, {{0, 1}}))}));
  // All 16 three-vertex digraphs minus the five 3-vertex obstructions D1..D5.
  EXPECT_EQ(oracle_members(ClassId::DC, 3).size(), 11U);
  EXPECT_THROW(oracle_members(ClassId::TD, 3), std::invalid_argument);
  EXPECT_THROW(oracle_members(ClassId::DC, 7), std::invalid_argument);
}

// Constructive and obstruction routes on every digraph with at most 4
// vertices; the acceptance run covers 5 vertices and the literal oracles.
TEST(Routes, AgreeUpToFourVertices) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t code : enumerate_digraphs(n)) {
      const Digraph g = digraph_from_code(code);
      for (ClassId id : kAllClasses) {
        if (!has_constructive_definition(id)) continue;
        EXPECT_EQ(member_constructive(g, id).member, member_by_patterns(g, id).member)
            << to_string(id) << " " << canonical_text(g);
        EXPECT_EQ(member_constructive(g, id).member, oracle_members(id, n).count(code) > 0)
            << to_string(id) << " " << canonical_text(g);
      }
    }
  }
}

TEST(Routes, CertificatesRoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t code : enumerate_digraphs(n)) {
      const Digraph g = digraph_from_code(code);
      const auto r = member_constructive(g, ClassId::DTP);
      if (!r.member) continue;
      ASSERT_TRUE(r.certificate);
      EXPECT_TRUE(isomorphic(evaluate(parse_expression(format(*r.certificate))), g));
    }
  }
}
