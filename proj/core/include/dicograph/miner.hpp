#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicograph/classes.hpp"
#include "dicograph/digraph.hpp"

namespace dicograph {

/// Raised when a run exceeds its time budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  int jobs = 0;                // worker threads; 0 = hardware concurrency
  double budget_seconds = 0;   // 0 = unlimited
};

/// Canonical codes (see canonical_code) of all digraphs on n vertices up to
/// isomorphism, sorted. n <= 5 dedupes every labeled digraph; n = 6 extends
/// each 5-vertex representative by one vertex. Results are cached. Throws
/// std::invalid_argument outside 1..6 and BudgetExceeded when out of time.
const std::vector<std::uint64_t>& enumerate_digraphs(int n, const RunOptions& opts = {});

/// Undirected graphs on n vertices up to isomorphism, 1 <= n <= 7.
std::vector<UndirectedGraph> enumerate_undirected(int n);

/// Membership used for mining and verification: the recursive definition
/// where there is one, the obstruction check for TD and FD.
bool member(const Digraph& g, ClassId id);

enum class ObstructionVerdict { Confirmed, Missing, Extra };
std::string_view to_string(ObstructionVerdict v);

struct ObstructionEntry {
  ObstructionVerdict verdict;
  std::string name;  // catalog name, empty for an extra obstruction
  std::uint64_t code = 0;
};

struct ObstructionReport {
  ClassId id = ClassId::DC;
  int n_max = 0;
  std::vector<ObstructionEntry> entries;
  /// Catalog patterns larger than n_max, which the run cannot reach.
  std::vector<std::string> beyond_bound;
  bool budget_exceeded = false;

  int count(ObstructionVerdict v) const;
  bool all_confirmed() const;
};

/// Every digraph with at most n_max vertices that is outside the class while
/// all its one-vertex deletions are inside, compared with the catalog.
/// n_max = 6 only extends 5-vertex members of the class. Throws
/// std::invalid_argument for TD and FD or n_max outside 1..6.
ObstructionReport minimal_forbidden(ClassId id, int n_max, const RunOptions& opts = {});

struct Check {
  std::string name;
  bool passed = false;
  std::string canonical;  // counterexample or witness, "-" if none
  std::string details;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

/// Inclusions, strictness and incomparability along both class diagrams.
/// Undirected classes are checked up to n_max_undirected vertices.
VerificationReport verify_hierarchy(int n_max, int n_max_undirected = 6);
/// Every characterization theorem as a set of equivalent items.
VerificationReport verify_theorems(int n_max);
/// Complement and converse closure, with non-closure witnesses.
VerificationReport verify_closures(int n_max);
/// OCTP = OT and OCSC = OCWQT across every recognition route.
VerificationReport verify_identities(int n_max);
/// Undirected classes versus the existence of a good orientation.
VerificationReport verify_orientations(int n_max);
/// Underlying-graph and symmetric/asymmetric-part observations, plus the
/// di-co-tree round trip.
VerificationReport verify_projections(int n_max);
/// Recursive definition, obstruction set and literal-definition oracle agree.
VerificationReport verify_route_agreement(int n_max);
/// Each 6-vertex catalog pattern lies outside its classes while every
/// one-vertex deletion lies inside.
VerificationReport verify_six_vertex_patterns();

std::string to_text(const ObstructionReport& r);
std::string to_tsv(const ObstructionReport& r);
std::string to_text(const VerificationReport& r);
std::string to_tsv(const VerificationReport& r);

}  // namespace dicograph
