#include "dicograph/classes.hpp"

namespace dicograph {

std::string_view to_string(ClassId id) {
  switch (id) {
    case ClassId::DC: return "DC";
    case ClassId::OC: return "OC";
    case ClassId::DTP: return "DTP";
    case ClassId::OTP: return "OTP";
    case ClassId::DCTP: return "DCTP";
    case ClassId::OCTP: return "OCTP";
    case ClassId::DT: return "DT";
    case ClassId::OT: return "OT";
    case ClassId::DWQT: return "DWQT";
    case ClassId::OWQT: return "OWQT";
    case ClassId::DCWQT: return "DCWQT";
    case ClassId::OCWQT: return "OCWQT";
    case ClassId::DSC: return "DSC";
    case ClassId::OSC: return "OSC";
    case ClassId::DCSC: return "DCSC";
    case ClassId::OCSC: return "OCSC";
    case ClassId::TT: return "TT";
    case ClassId::TD: return "TD";
    case ClassId::FD: return "FD";
    case ClassId::EdgelessD: return "EdgelessD";
    case ClassId::BidirComplete: return "BidirComplete";
    case ClassId::TwoBidirCliques: return "TwoBidirCliques";
    case ClassId::BidirCompleteBipartite: return "BidirCompleteBipartite";
    case ClassId::SeriesOfStableSets: return "SeriesOfStableSets";
    case ClassId::UnionOfBidirCliques: return "UnionOfBidirCliques";
  }
  return "?";
}

std::optional<ClassId> parse_class(std::string_view name) {
  if (name == "SPO") return ClassId::OC;
  for (ClassId id : kAllClasses) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool has_constructive_definition(ClassId id) { return id != ClassId::TD && id != ClassId::FD; }

}  // namespace dicograph
