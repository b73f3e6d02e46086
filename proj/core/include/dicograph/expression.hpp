#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dicograph/digraph.hpp"

namespace dicograph {

enum class OpKind { Leaf, Union, Order, Series };

std::string_view to_string(OpKind op);

/// A di-co-tree over single vertices, disjoint union, order composition and
/// series composition.
///
/// Operator nodes are n-ary and always flattened: no child has the operator of
/// its parent. Union and series children are unordered; order children are
/// listed left to right, every earlier block sending an arc to every later one.
class Expression {
 public:
  static Expression leaf();
  /// Flattens nested nodes of the same operator. Throws std::invalid_argument
  /// for op == Leaf or fewer than two children.
  static Expression make(OpKind op, std::vector<Expression> children);
  static Expression union_of(std::vector<Expression> children) {
    return make(OpKind::Union, std::move(children));
  }
  static Expression order_of(std::vector<Expression> children) {
    return make(OpKind::Order, std::move(children));
  }
  static Expression series_of(std::vector<Expression> children) {
    return make(OpKind::Series, std::move(children));
  }

  OpKind kind() const { return kind_; }
  const std::vector<Expression>& children() const { return children_; }
  int leaf_count() const { return leaves_; }

  friend bool operator==(const Expression& a, const Expression& b) {
    return a.kind_ == b.kind_ && a.children_ == b.children_;
  }

 private:
  Expression() = default;

  OpKind kind_ = OpKind::Leaf;
  std::vector<Expression> children_;
  int leaves_ = 1;
};

/// Grammar: expr := "v" | op "(" expr ("," expr)+ ")", op := union|order|series.
/// Whitespace is insignificant. Throws ParseError with the offending offset.
Expression parse_expression(std::string_view text);

/// Canonical text. Union and series children are sorted by their own
/// canonical text, so two expressions of isomorphic digraphs format equally.
std::string format(const Expression& e);

/// Leaves are numbered depth-first, left to right.
Digraph evaluate(const Expression& e);

/// Arc list of the evaluation without the 64-vertex limit of Digraph.
std::vector<Arc> evaluate_arcs(const Expression& e);

enum class FamilyKind {
  TransitiveTournament,
  Edgeless,
  BidirectionalComplete,
  OrientedPath,
  OrientedCycle,
  BidirCompleteBipartite,
  OrientedCompleteBipartite,
};

struct Family {
  FamilyKind kind;
  int n = 1;
  int m = 0;  // second side for the bipartite families
};

/// CLI names: tt, edgeless, complete, path, cycle, bipartite, obipartite.
std::optional<FamilyKind> parse_family(std::string_view name);
std::string_view to_string(FamilyKind kind);

/// Throws std::invalid_argument for non-positive parameters, cycles with
/// fewer than three vertices, or more than 64 vertices.
Digraph generate(const Family& f);

}  // namespace dicograph
