#include "dicograph/expression.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "dicograph/io.hpp"

namespace dicograph {

std::string_view to_string(OpKind op) {
  switch (op) {
    case OpKind::Leaf: return "v";
    case OpKind::Union: return "union";
    case OpKind::Order: return "order";
    case OpKind::Series: return "series";
  }
  return "?";
}

Expression Expression::leaf() { return Expression(); }

Expression Expression::make(OpKind op, std::vector<Expression> children) {
  if (op == OpKind::Leaf) throw std::invalid_argument("leaf cannot have children");
  if (children.size() < 2) throw std::invalid_argument("operator needs at least two operands");
  Expression e;
  e.kind_ = op;
  e.leaves_ = 0;
  for (auto& c : children) {
    e.leaves_ += c.leaves_;
    if (c.kind_ == op) {
      for (auto& gc : c.children_) e.children_.push_back(std::move(gc));
    } else {
      e.children_.push_back(std::move(c));
    }
  }
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg + " at offset " + std::to_string(pos_), 0,
                     static_cast<int>(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Expression expr() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string_view w = word();
    if (w == "v") return Expression::leaf();
    OpKind op;
    if (w == "union") {
      op = OpKind::Union;
    } else if (w == "order") {
      op = OpKind::Order;
    } else if (w == "series") {
      op = OpKind::Series;
    } else {
      pos_ = start;
      fail(w.empty() ? "expected expression" : "unknown operator '" + std::string(w) + "'");
    }
    expect('(');
    std::vector<Expression> children;
    children.push_back(expr());
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        children.push_back(expr());
        continue;
      }
      break;
    }
    if (children.size() < 2) fail(std::string(to_string(op)) + " needs at least two operands");
    expect(')');
    return Expression::make(op, std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void evaluate_into(const Expression& e, int base, std::vector<Arc>& arcs) {
  if (e.kind() == OpKind::Leaf) return;
  std::vector<std::pair<int, int>> ranges;  // [begin, end) per child
  int at = base;
  for (const auto& c : e.children()) {
    evaluate_into(c, at, arcs);
    ranges.emplace_back(at, at + c.leaf_count());
    at += c.leaf_count();
  }
  if (e.kind() == OpKind::Union) return;
  const bool both = e.kind() == OpKind::Series;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    for (std::size_t j = i + 1; j < ranges.size(); ++j) {
      for (int u = ranges[i].first; u < ranges[i].second; ++u) {
        for (int v = ranges[j].first; v < ranges[j].second; ++v) {
          arcs.emplace_back(u, v);
          if (both) arcs.emplace_back(v, u);
        }
      }
    }
  }
}

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string format(const Expression& e) {
  if (e.kind() == OpKind::Leaf) return "v";
  std::vector<std::string> parts;
  parts.reserve(e.children().size());
  for (const auto& c : e.children()) parts.push_back(format(c));
  if (e.kind() != OpKind::Order) std::sort(parts.begin(), parts.end());
  std::string out(to_string(e.kind()));
  out += '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ", ";
    out += parts[i];
  }
  out += ')';
  return out;
}

std::vector<Arc> evaluate_arcs(const Expression& e) {
  std::vector<Arc> arcs;
  evaluate_into(e, 0, arcs);
  return arcs;
}

Digraph evaluate(const Expression& e) {
  if (e.leaf_count() > kMaxVertices) throw std::invalid_argument("expression has more than 64 leaves");
  const auto arcs = evaluate_arcs(e);
  return Digraph(e.leaf_count(), arcs);
}

namespace {

struct FamilyName {
  FamilyKind kind;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {FamilyKind::TransitiveTournament, "tt"},
    {FamilyKind::Edgeless, "edgeless"},
    {FamilyKind::BidirectionalComplete, "complete"},
    {FamilyKind::OrientedPath, "path"},
    {FamilyKind::OrientedCycle, "cycle"},
    {FamilyKind::BidirCompleteBipartite, "bipartite"},
    {FamilyKind::OrientedCompleteBipartite, "obipartite"},
};

}  // namespace

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (const auto& f : kFamilyNames) {
    if (f.name == name) return f.kind;
  }
  return std::nullopt;
}

std::string_view to_string(FamilyKind kind) {
  for (const auto& f : kFamilyNames) {
    if (f.kind == kind) return f.name;
  }
  return "?";
}

Digraph generate(const Family& f) {
  const bool bipartite = f.kind == FamilyKind::BidirCompleteBipartite ||
                         f.kind == FamilyKind::OrientedCompleteBipartite;
  if (f.n < 1 || (bipartite && f.m < 1)) throw std::invalid_argument("family parameters must be positive");
  const int total = bipartite ? f.n + f.m : f.n;
  if (total > kMaxVertices) throw std::invalid_argument("family exceeds 64 vertices");
  Digraph g(total);
  switch (f.kind) {
    case FamilyKind::TransitiveTournament:
      for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v) g.add_arc(u, v);
      break;
    case FamilyKind::Edgeless:
      break;
    case FamilyKind::BidirectionalComplete:
      for (int u = 0; u < total; ++u)
        for (int v = 0; v < total; ++v)
          if (u != v) g.add_arc(u, v);
      break;
    case FamilyKind::OrientedPath:
      for (int u = 0; u + 1 < total; ++u) g.add_arc(u, u + 1);
      break;
    case FamilyKind::OrientedCycle:
      if (total < 3) throw std::invalid_argument("oriented cycle needs at least 3 vertices");
      for (int u = 0; u < total; ++u) g.add_arc(u, (u + 1) % total);
      break;
    case FamilyKind::BidirCompleteBipartite:
    case FamilyKind::OrientedCompleteBipartite:
      for (int u = 0; u < f.n; ++u) {
        for (int v = f.n; v < total; ++v) {
          g.add_arc(u, v);
          if (f.kind == FamilyKind::BidirCompleteBipartite) g.add_arc(v, u);
        }
      }
      break;
  }
  return g;
}

}  // namespace dicograph
