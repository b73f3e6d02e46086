#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicograph/classes.hpp"
#include "dicograph/digraph.hpp"
#include "dicograph/expression.hpp"
#include "dicograph/patterns.hpp"

namespace dicograph {

/// What the non-recursive parts of a maximal split may be.
enum class RestKind { Singleton, Edgeless, BidirComplete, TransitiveTournament };

/// Any: every part must be in the class. One: all parts but at most one are of
/// the rest kind, and that one part must be in the class. Forbidden: no split
/// of this kind is allowed.
enum class Mode { Any, One, Forbidden };

struct OpRule {
  Mode mode = Mode::Forbidden;
  RestKind rest = RestKind::Singleton;
};

struct ClassSpec {
  OpRule union_rule;
  OpRule order_rule;
  OpRule series_rule;
};

/// Split rules for the classes decided by recursion on maximal splits;
/// nullopt for TT, TD, FD and the small symmetric classes.
std::optional<ClassSpec> class_spec(ClassId id);

bool is_rest_kind(const Digraph& g, RestKind kind);

struct ConstructiveResult {
  bool member = false;
  /// Di-co-tree of the input when it is a member.
  std::optional<Expression> certificate;
};

/// Membership by the recursive definition. Throws std::invalid_argument for
/// TD and FD, which have none.
ConstructiveResult member_constructive(const Digraph& g, ClassId id);

struct PatternResult {
  bool member = false;
  /// First obstruction found. For the partial checks of TD and FD the name is
  /// the configuration and the mapping lists the role images.
  std::optional<Occurrence> witness;
};

PatternResult member_by_patterns(const Digraph& g, ClassId id);

/// Thrown when the two recognition routes disagree on an input.
class RouteDisagreement : public std::runtime_error {
 public:
  RouteDisagreement(ClassId id, const std::string& what) : std::runtime_error(what), id_(id) {}
  ClassId class_id() const { return id_; }

 private:
  ClassId id_;
};

/// Largest order for which classify runs the pattern route alongside the
/// constructive one. TD and FD always use patterns.
inline constexpr int kPatternRouteLimit = 12;

struct Verdict {
  ClassId id;
  bool member = false;
  std::optional<Expression> certificate;
  std::optional<Occurrence> witness;
};

/// Decides one class, cross-checking both routes where both run.
Verdict decide(const Digraph& g, ClassId id);
/// Classes containing g, in kAllClasses order.
std::vector<ClassId> classify(const Digraph& g);

/// Canonical codes of every n-vertex digraph produced by the literal
/// operations of the class definition. Requires 1 <= n <= 6; throws
/// std::invalid_argument for TD and FD. Results are memoized; concurrent
/// calls are safe.
const std::set<std::uint64_t>& oracle_members(ClassId id, int n);

}  // namespace dicograph
