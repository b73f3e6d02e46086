#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dicograph/classes.hpp"
#include "dicograph/digraph.hpp"

namespace dicograph {

/// A named obstruction digraph. Names follow the usual notation with ASCII
/// spellings: D1..D15, coD9, Q1..Q7, coQ1..coQ7, D21..D23, K2bidir (the
/// bidirectional K2), 2P2 (two disjoint arcs), X1, X2, Y1..Y4, and the small
/// patterns I2, I3, P2 (a single arc), K3bidir, P3bidir, coP3bidir.
struct Pattern {
  std::string name;
  Digraph graph;
};

/// Every named pattern, in a fixed order.
const std::vector<Pattern>& all_patterns();
/// Throws std::out_of_range for an unknown name.
const Pattern& pattern(std::string_view name);
const Pattern* find_pattern(std::string_view name);

/// Roles are 0..k-1. Pairs in `distinct` must land on different vertices;
/// other roles may coincide. A forbidden arc between coincident roles is a
/// loop and therefore absent; a required one can never be met.
struct PartialPattern {
  std::string name;
  int roles = 0;
  std::vector<std::pair<int, int>> required;
  std::vector<std::pair<int, int>> forbidden;
  std::vector<std::pair<int, int>> distinct;
};

/// Roles (w, x, y, z), pairwise distinct: w->x and y->z present, w->z and
/// y->x absent.
const PartialPattern& two_switch();
/// Roles (x, y, z, w) with x != z and y != w: x->y and z->w present, x->w and
/// z->y absent.
const PartialPattern& alternating_anticircuit();

/// First assignment in lexicographic order of role images, if any.
std::optional<std::vector<int>> match_partial(const Digraph& g, const PartialPattern& pp);

/// Obstructions of a class. For TD and FD the exact list is completed by a
/// partial configuration that must also be absent.
struct Catalog {
  std::vector<const Pattern*> patterns;
  const PartialPattern* partial = nullptr;
};

Catalog catalog(ClassId id);

/// mapping[i] is the host vertex playing pattern vertex i.
struct Occurrence {
  std::string pattern;
  std::vector<int> mapping;
};

/// Induced copy of `p` in `g` as a mapping from pattern vertices, if any.
std::optional<std::vector<int>> contains_induced(const Digraph& g, const Digraph& p);
std::optional<Occurrence> contains_induced(const Digraph& g, const Pattern& p);

/// First occurrence of any listed pattern, in list order.
std::optional<Occurrence> first_occurrence(const Digraph& g, std::span<const Pattern* const> patterns);
bool is_free(const Digraph& g, std::span<const Pattern* const> patterns);

}  // namespace dicograph
