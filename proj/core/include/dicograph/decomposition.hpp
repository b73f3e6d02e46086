#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dicograph/digraph.hpp"
#include "dicograph/expression.hpp"

namespace dicograph {

enum class SplitKind { Union, Series, Order, Prime };

std::string_view to_string(SplitKind kind);

/// Top-level decomposition of a digraph into inclusion-maximal parts.
/// Order parts are listed so that every earlier part sends a single arc to
/// every later part. A Prime split has one part holding every vertex.
struct Split {
  SplitKind kind = SplitKind::Prime;
  std::vector<VertexMask> parts;
};

/// Requires order() >= 2; throws std::invalid_argument otherwise.
Split maximal_split(const Digraph& g);

/// An expression together with the vertex behind each leaf:
/// relabel(g, leaf_vertices) == evaluate(expression).
struct LabeledTree {
  Expression expression;
  std::vector<int> leaf_vertices;
};

/// Di-co-tree of g, or nullopt when some part of size >= 2 is prime.
std::optional<LabeledTree> di_co_tree_labeled(const Digraph& g);
std::optional<Expression> di_co_tree(const Digraph& g);

/// Digit i says how vertex order[i] relates to order[0..i-1]:
/// 0 isolated, 1 out-dominating source, 2 in-dominated sink, 3 bi-dominating.
/// digits[0] is always '1'.
struct CreationSequence {
  std::string digits;
  std::vector<int> order;
};

/// Greedy reverse peeling in expected O(n + m). allow_series = false forbids
/// digit 3.
std::optional<CreationSequence> creation_sequence(const Digraph& g, bool allow_series);
/// Same on an arc list, for inputs beyond 64 vertices. Throws
/// std::invalid_argument for loops, duplicate arcs or out-of-range endpoints.
std::optional<CreationSequence> creation_sequence(int n, std::span<const Arc> arcs,
                                                  bool allow_series);

/// Whether some peeling order succeeds, trying every peelable vertex at every
/// step. Exponential; meant as a check on the greedy routine for small n.
bool creation_sequence_exists_exhaustive(const Digraph& g, bool allow_series);

/// Rebuilds the digraph of a digit string: vertex i is the i-th insertion.
/// Throws std::invalid_argument for characters outside 0-3 or a first digit
/// other than 1.
std::vector<Arc> replay_arcs(std::string_view digits);
Digraph replay(std::string_view digits);

}  // namespace dicograph
