#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dicograph/digraph.hpp"

namespace dicograph {

/// Co-graph subclasses of undirected graphs, including the small classes at the
/// bottom of the overview table.
enum class UClassId {
  C,
  TP,
  CTP,
  T,
  SC,
  CSC,
  WQT,
  CWQT,
  Edgeless,
  Complete,
  TwoCliques,
  CompleteBipartite,
  CliqueUnion,
  StableJoin,
};

inline constexpr UClassId kAllUClasses[] = {
    UClassId::C,        UClassId::TP,         UClassId::CTP,
    UClassId::T,        UClassId::SC,         UClassId::CSC,
    UClassId::WQT,      UClassId::CWQT,       UClassId::Edgeless,
    UClassId::Complete, UClassId::TwoCliques, UClassId::CompleteBipartite,
    UClassId::CliqueUnion, UClassId::StableJoin,
};

std::string_view to_string(UClassId id);
std::optional<UClassId> parse_uclass(std::string_view name);

enum class UPattern { P2, P3, P4, C4, K3, I3, TwoK2, TwoP3, CoP2, CoP3, CoTwoP3 };

std::string_view to_string(UPattern p);
UndirectedGraph make_upattern(UPattern p);

/// Obstruction set of a class.
std::span<const UPattern> forb_u(UClassId id);

/// Vertices (in increasing order) of an induced copy of `p`, if any.
std::optional<std::vector<int>> find_induced_u(const UndirectedGraph& g, const UndirectedGraph& p);
bool contains_induced_u(const UndirectedGraph& g, UPattern p);
bool member_u(const UndirectedGraph& g, UClassId id);

}  // namespace dicograph
