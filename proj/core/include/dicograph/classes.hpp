#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace dicograph {

/// Directed co-graph subclasses. OC doubles as the series-parallel partial
/// order digraphs (SPO).
enum class ClassId {
  DC,
  OC,
  DTP,
  OTP,
  DCTP,
  OCTP,
  DT,
  OT,
  DWQT,
  OWQT,
  DCWQT,
  OCWQT,
  DSC,
  OSC,
  DCSC,
  OCSC,
  TT,
  TD,
  FD,
  EdgelessD,
  BidirComplete,
  TwoBidirCliques,
  BidirCompleteBipartite,
  SeriesOfStableSets,
  UnionOfBidirCliques,
};

inline constexpr ClassId kAllClasses[] = {
    ClassId::DC,        ClassId::OC,          ClassId::DTP,
    ClassId::OTP,       ClassId::DCTP,        ClassId::OCTP,
    ClassId::DT,        ClassId::OT,          ClassId::DWQT,
    ClassId::OWQT,      ClassId::DCWQT,       ClassId::OCWQT,
    ClassId::DSC,       ClassId::OSC,         ClassId::DCSC,
    ClassId::OCSC,      ClassId::TT,          ClassId::TD,
    ClassId::FD,        ClassId::EdgelessD,   ClassId::BidirComplete,
    ClassId::TwoBidirCliques, ClassId::BidirCompleteBipartite,
    ClassId::SeriesOfStableSets, ClassId::UnionOfBidirCliques,
};

std::string_view to_string(ClassId id);
/// Accepts the notation used in output plus the alias "SPO" for OC.
std::optional<ClassId> parse_class(std::string_view name);

/// Classes with a recursive definition (everything except TD and FD).
bool has_constructive_definition(ClassId id);

}  // namespace dicograph
