#include "dicograph/undirected.hpp"

#include <algorithm>
#include <array>

#include "embedding.hpp"

namespace dicograph {

namespace {

struct UClassInfo {
  UClassId id;
  std::string_view name;
  std::vector<UPattern> forb;
};

const std::vector<UClassInfo>& uclass_table() {
  using P = UPattern;
  static const std::vector<UClassInfo> table = {
      {UClassId::C, "C", {P::P4}},
      {UClassId::TP, "TP", {P::P4, P::C4}},
      {UClassId::CTP, "CTP", {P::P4, P::TwoK2}},
      {UClassId::T, "T", {P::P4, P::C4, P::TwoK2}},
      {UClassId::SC, "SC", {P::P4, P::CoTwoP3, P::TwoK2}},
      {UClassId::CSC, "CSC", {P::P4, P::TwoP3, P::C4}},
      {UClassId::WQT, "WQT", {P::P4, P::CoTwoP3}},
      {UClassId::CWQT, "CWQT", {P::P4, P::TwoP3}},
      {UClassId::Edgeless, "Edgeless", {P::P2}},
      {UClassId::Complete, "Complete", {P::CoP2}},
      {UClassId::TwoCliques, "TwoCliques", {P::I3, P::P3}},
      {UClassId::CompleteBipartite, "CompleteBipartite", {P::K3, P::CoP3}},
      {UClassId::CliqueUnion, "CliqueUnion", {P::P3}},
      {UClassId::StableJoin, "StableJoin", {P::CoP3}},
  };
  return table;
}

const UClassInfo& info(UClassId id) {
  for (const auto& row : uclass_table()) {
    if (row.id == id) return row;
  }
  throw std::invalid_argument("unknown undirected class");
}

UndirectedGraph two_p3() { return UndirectedGraph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}); }

}  // namespace

std::string_view to_string(UClassId id) { return info(id).name; }

std::optional<UClassId> parse_uclass(std::string_view name) {
  for (const auto& row : uclass_table()) {
    if (row.name == name) return row.id;
  }
  return std::nullopt;
}

std::string_view to_string(UPattern p) {
  switch (p) {
    case UPattern::P2: return "P2";
    case UPattern::P3: return "P3";
    case UPattern::P4: return "P4";
    case UPattern::C4: return "C4";
    case UPattern::K3: return "K3";
    case UPattern::I3: return "I3";
    case UPattern::TwoK2: return "2K2";
    case UPattern::TwoP3: return "2P3";
    case UPattern::CoP2: return "coP2";
    case UPattern::CoP3: return "coP3";
    case UPattern::CoTwoP3: return "co2P3";
  }
  return "?";
}

UndirectedGraph make_upattern(UPattern p) {
  switch (p) {
    case UPattern::P2: return UndirectedGraph(2, {{0, 1}});
    case UPattern::P3: return UndirectedGraph(3, {{0, 1}, {1, 2}});
    case UPattern::P4: return UndirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}});
    case UPattern::C4: return UndirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case UPattern::K3: return UndirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}});
    case UPattern::I3: return UndirectedGraph(3);
    case UPattern::TwoK2: return UndirectedGraph(4, {{0, 1}, {2, 3}});
    case UPattern::TwoP3: return two_p3();
    case UPattern::CoP2: return UndirectedGraph(2);
    case UPattern::CoP3: return complement(UndirectedGraph(3, {{0, 1}, {1, 2}}));
    case UPattern::CoTwoP3: return complement(two_p3());
  }
  throw std::invalid_argument("unknown undirected pattern");
}

std::span<const UPattern> forb_u(UClassId id) { return info(id).forb; }

std::optional<std::vector<int>> find_induced_u(const UndirectedGraph& g, const UndirectedGraph& p) {
  const Digraph host = g.as_symmetric_digraph();
  const Digraph pat = p.as_symmetric_digraph();
  detail::EmbeddingSearch search(pat, host, /*exact=*/false);
  auto m = search.find();
  if (!m) return std::nullopt;
  std::sort(m->begin(), m->end());
  return m;
}

bool contains_induced_u(const UndirectedGraph& g, UPattern p) {
  return find_induced_u(g, make_upattern(p)).has_value();
}

bool member_u(const UndirectedGraph& g, UClassId id) {
  for (UPattern p : forb_u(id)) {
    if (contains_induced_u(g, p)) return false;
  }
  return true;
}

}  // namespace dicograph
