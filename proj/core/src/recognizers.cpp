#include "dicograph/recognizers.hpp"

#include <array>
#include <bit>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>

#include "dicograph/decomposition.hpp"

namespace dicograph {

namespace {

constexpr OpRule kAny{Mode::Any, RestKind::Singleton};
constexpr OpRule kNo{Mode::Forbidden, RestKind::Singleton};
constexpr OpRule one(RestKind r) { return {Mode::One, r}; }

bool is_bidir_complete(const Digraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const VertexMask others = g.all_vertices() & ~(VertexMask{1} << v);
    if (g.out_mask(v) != others) return false;
  }
  return true;
}

// Components of a symmetric adjacency (given as masks) are all cliques and
// there are at most `limit` of them (limit < 0: no bound).
bool cliques_only(const std::vector<VertexMask>& adj, VertexMask all, int limit) {
  int count = 0;
  VertexMask left = all;
  while (left) {
    const int v = std::countr_zero(left);
    const VertexMask clique = adj[v] | (VertexMask{1} << v);
    for (VertexMask m = clique; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      if ((adj[u] | (VertexMask{1} << u)) != clique) return false;
    }
    left &= ~clique;
    ++count;
  }
  return limit < 0 || count <= limit;
}

bool symmetric_class(const Digraph& g, bool use_complement, int limit) {
  if (!is_symmetric(g)) return false;
  std::vector<VertexMask> adj(g.order());
  for (int v = 0; v < g.order(); ++v) {
    adj[v] = use_complement ? g.all_vertices() & ~g.out_mask(v) & ~(VertexMask{1} << v) : g.out_mask(v);
  }
  return cliques_only(adj, g.all_vertices(), limit);
}

// Classes decided by a direct structural test.
std::optional<bool> direct_member(const Digraph& g, ClassId id) {
  switch (id) {
    case ClassId::TT: return is_tournament(g) && is_acyclic(g);
    case ClassId::EdgelessD: return g.arc_count() == 0;
    case ClassId::BidirComplete: return is_bidir_complete(g);
    case ClassId::TwoBidirCliques: return symmetric_class(g, false, 2);
    case ClassId::BidirCompleteBipartite: return symmetric_class(g, true, 2);
    case ClassId::SeriesOfStableSets: return symmetric_class(g, true, -1);
    case ClassId::UnionOfBidirCliques: return symmetric_class(g, false, -1);
    default: return std::nullopt;
  }
}

bool constructive(const Digraph& g, ClassId id, const ClassSpec& spec) {
  if (g.order() == 1) return true;
  const Split split = maximal_split(g);
  const OpRule* rule = nullptr;
  switch (split.kind) {
    case SplitKind::Prime: return false;
    case SplitKind::Union: rule = &spec.union_rule; break;
    case SplitKind::Order: rule = &spec.order_rule; break;
    case SplitKind::Series: rule = &spec.series_rule; break;
  }
  if (rule->mode == Mode::Forbidden) return false;
  std::vector<Digraph> parts;
  parts.reserve(split.parts.size());
  for (VertexMask p : split.parts) parts.push_back(induced(g, p));
  if (rule->mode == Mode::Any) {
    for (const auto& p : parts) {
      if (!constructive(p, id, spec)) return false;
    }
    return true;
  }
  const Digraph* odd = nullptr;
  for (const auto& p : parts) {
    if (is_rest_kind(p, rule->rest)) continue;
    if (odd) return false;
    odd = &p;
  }
  return odd == nullptr || constructive(*odd, id, spec);
}

}  // namespace

std::optional<ClassSpec> class_spec(ClassId id) {
  using R = RestKind;
  switch (id) {
    case ClassId::DC: return ClassSpec{kAny, kAny, kAny};
    case ClassId::OC: return ClassSpec{kAny, kAny, kNo};
    case ClassId::DTP: return ClassSpec{kAny, one(R::Singleton), one(R::Singleton)};
    case ClassId::OTP: return ClassSpec{kAny, one(R::Singleton), kNo};
    case ClassId::DCTP: return ClassSpec{one(R::Singleton), one(R::Singleton), kAny};
    case ClassId::OCTP:
    case ClassId::OT: return ClassSpec{one(R::Singleton), one(R::Singleton), kNo};
    case ClassId::DT: return ClassSpec{one(R::Singleton), one(R::Singleton), one(R::Singleton)};
    case ClassId::DWQT: return ClassSpec{kAny, one(R::Edgeless), one(R::Edgeless)};
    case ClassId::OWQT: return ClassSpec{kAny, one(R::Edgeless), kNo};
    case ClassId::DCWQT: return ClassSpec{one(R::BidirComplete), one(R::BidirComplete), kAny};
    case ClassId::OCWQT:
    case ClassId::OCSC: return ClassSpec{one(R::TransitiveTournament), one(R::Singleton), kNo};
    case ClassId::DSC: return ClassSpec{one(R::Edgeless), one(R::Edgeless), one(R::Edgeless)};
    case ClassId::OSC: return ClassSpec{one(R::Edgeless), one(R::Edgeless), kNo};
    case ClassId::DCSC:
      return ClassSpec{one(R::BidirComplete), one(R::BidirComplete), one(R::BidirComplete)};
    default: return std::nullopt;
  }
}

bool is_rest_kind(const Digraph& g, RestKind kind) {
  switch (kind) {
    case RestKind::Singleton: return g.order() == 1;
    case RestKind::Edgeless: return g.arc_count() == 0;
    case RestKind::BidirComplete: return is_bidir_complete(g);
    case RestKind::TransitiveTournament: return is_tournament(g) && is_acyclic(g);
  }
  return false;
}

ConstructiveResult member_constructive(const Digraph& g, ClassId id) {
  if (!has_constructive_definition(id)) {
    throw std::invalid_argument(std::string(to_string(id)) + " has no recursive definition");
  }
  bool member = false;
  if (auto direct = direct_member(g, id)) {
    member = *direct;
  } else {
    member = constructive(g, id, *class_spec(id));
  }
  ConstructiveResult r;
  r.member = member;
  if (member) r.certificate = di_co_tree(g);
  return r;
}

PatternResult member_by_patterns(const Digraph& g, ClassId id) {
  const Catalog cat = catalog(id);
  PatternResult r;
  // The configuration is the definition for TD and FD, so report it first.
  if (cat.partial) {
    if (auto roles = match_partial(g, *cat.partial)) r.witness = Occurrence{cat.partial->name, *roles};
  }
  if (!r.witness) r.witness = first_occurrence(g, cat.patterns);
  r.member = !r.witness;
  return r;
}

Verdict decide(const Digraph& g, ClassId id) {
  Verdict v{id, false, std::nullopt, std::nullopt};
  const bool constructive_route = has_constructive_definition(id);
  const bool pattern_route = !constructive_route || g.order() <= kPatternRouteLimit;
  std::optional<bool> by_construction;
  if (constructive_route) {
    auto c = member_constructive(g, id);
    by_construction = c.member;
    v.certificate = std::move(c.certificate);
  }
  if (pattern_route) {
    auto p = member_by_patterns(g, id);
    if (by_construction && *by_construction != p.member) {
      throw RouteDisagreement(id, std::string("recognition routes disagree for ") +
                                      std::string(to_string(id)) + " on " + canonical_text(g));
    }
    v.member = p.member;
    v.witness = std::move(p.witness);
  } else {
    v.member = *by_construction;
  }
  return v;
}

std::vector<ClassId> classify(const Digraph& g) {
  std::vector<ClassId> out;
  for (ClassId id : kAllClasses) {
    if (decide(g, id).member) out.push_back(id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Literal-definition oracle

namespace {

enum class Operand { Member, Single, Edgeless, Complete, Tournament };

struct OracleOp {
  OpKind op;
  Operand left;
  Operand right;
};

struct OracleDef {
  std::vector<Operand> bases;  // families whose every size is a member
  std::vector<OracleOp> ops;
};

OracleDef oracle_def(ClassId id) {
  using O = Operand;
  constexpr auto U = OpKind::Union;
  constexpr auto R = OpKind::Order;
  constexpr auto S = OpKind::Series;
  const OracleOp pair_u{U, O::Member, O::Member};
  const OracleOp pair_r{R, O::Member, O::Member};
  const OracleOp pair_s{S, O::Member, O::Member};
  auto with = [](O x) {
    return std::vector<OracleOp>{{U, O::Member, x}, {R, O::Member, x}, {R, x, O::Member}, {S, O::Member, x}};
  };
  switch (id) {
    case ClassId::DC: return {{}, {pair_u, pair_r, pair_s}};
    case ClassId::OC: return {{}, {pair_u, pair_r}};
    case ClassId::DTP: return {{}, {pair_u, {R, O::Member, O::Single}, {R, O::Single, O::Member}, {S, O::Member, O::Single}}};
    case ClassId::OTP: return {{}, {pair_u, {R, O::Member, O::Single}, {R, O::Single, O::Member}}};
    // Series of two members yields a co-trivially perfect digraph.
    case ClassId::DCTP: return {{}, {{U, O::Member, O::Single}, {R, O::Member, O::Single}, {R, O::Single, O::Member}, pair_s}};
    case ClassId::OCTP:
    case ClassId::OT: return {{}, {{U, O::Member, O::Single}, {R, O::Member, O::Single}, {R, O::Single, O::Member}}};
    case ClassId::DT: return {{}, with(O::Single)};
    case ClassId::DWQT: return {{O::Edgeless}, {pair_u, {R, O::Member, O::Edgeless}, {R, O::Edgeless, O::Member}, {S, O::Member, O::Edgeless}}};
    case ClassId::OWQT: return {{O::Edgeless}, {pair_u, {R, O::Member, O::Edgeless}, {R, O::Edgeless, O::Member}}};
    case ClassId::DCWQT: return {{O::Complete}, {{U, O::Member, O::Complete}, {R, O::Member, O::Complete}, {R, O::Complete, O::Member}, pair_s}};
    case ClassId::OCWQT: return {{O::Tournament}, {{U, O::Member, O::Tournament}, {R, O::Member, O::Tournament}, {R, O::Tournament, O::Member}}};
    case ClassId::DSC: return {{}, with(O::Edgeless)};
    case ClassId::OSC: return {{}, {{U, O::Member, O::Edgeless}, {R, O::Member, O::Edgeless}, {R, O::Edgeless, O::Member}}};
    case ClassId::DCSC: return {{}, with(O::Complete)};
    case ClassId::OCSC: return {{}, {{U, O::Member, O::Tournament}, {R, O::Member, O::Tournament}, {R, O::Tournament, O::Member}}};
    case ClassId::TT: return {{}, {{R, O::Member, O::Single}}};
    case ClassId::EdgelessD: return {{}, {{U, O::Member, O::Single}}};
    case ClassId::BidirComplete: return {{}, {{S, O::Member, O::Single}}};
    // The next four have no single-vertex start in their definitions; the
    // hereditary closure adds the one-sided families.
    case ClassId::TwoBidirCliques: return {{O::Complete}, {{U, O::Complete, O::Complete}}};
    case ClassId::BidirCompleteBipartite: return {{O::Edgeless}, {{S, O::Edgeless, O::Edgeless}}};
    case ClassId::SeriesOfStableSets: return {{O::Edgeless}, {{S, O::Member, O::Edgeless}}};
    case ClassId::UnionOfBidirCliques: return {{O::Complete}, {{U, O::Member, O::Complete}}};
    case ClassId::TD:
    case ClassId::FD: break;
  }
  throw std::invalid_argument(std::string(to_string(id)) + " has no recursive definition");
}

Digraph family_member(Operand o, int k) {
  switch (o) {
    case Operand::Edgeless: return generate({FamilyKind::Edgeless, k});
    case Operand::Complete: return generate({FamilyKind::BidirectionalComplete, k});
    case Operand::Tournament: return generate({FamilyKind::TransitiveTournament, k});
    default: return Digraph(k);
  }
}

Digraph compose(OpKind op, const Digraph& a, const Digraph& b) {
  const int na = a.order();
  Digraph g(na + b.order());
  for (auto [u, v] : a.arcs()) g.add_arc(u, v);
  for (auto [u, v] : b.arcs()) g.add_arc(na + u, na + v);
  if (op == OpKind::Union) return g;
  for (int u = 0; u < na; ++u) {
    for (int v = na; v < g.order(); ++v) {
      g.add_arc(u, v);
      if (op == OpKind::Series) g.add_arc(v, u);
    }
  }
  return g;
}

struct OracleTable {
  std::deque<std::set<std::uint64_t>> by_size{1};  // index = vertex count; deque keeps references stable
};

std::mutex& oracle_mutex() {
  static std::mutex m;
  return m;
}

std::map<ClassId, OracleTable>& oracle_tables() {
  static std::map<ClassId, OracleTable> tables;
  return tables;
}

std::vector<Digraph> operand_graphs(const OracleTable& t, Operand o, int k) {
  std::vector<Digraph> out;
  switch (o) {
    case Operand::Member:
      for (std::uint64_t code : t.by_size[k]) out.push_back(digraph_from_code(code));
      break;
    case Operand::Single:
      if (k == 1) out.emplace_back(1);
      break;
    default:
      out.push_back(family_member(o, k));
  }
  return out;
}

void extend_table(ClassId id, OracleTable& t, int n) {
  const OracleDef def = oracle_def(id);
  while (static_cast<int>(t.by_size.size()) <= n) {
    const int k = static_cast<int>(t.by_size.size());
    std::set<std::uint64_t> members;
    if (k == 1) members.insert(canonical_code(Digraph(1)));
    for (Operand base : def.bases) members.insert(canonical_code(family_member(base, k)));
    for (const OracleOp& op : def.ops) {
      for (int a = 1; a < k; ++a) {
        const auto left = operand_graphs(t, op.left, a);
        if (left.empty()) continue;
        const auto right = operand_graphs(t, op.right, k - a);
        for (const auto& l : left) {
          for (const auto& r : right) members.insert(canonical_code(compose(op.op, l, r)));
        }
      }
    }
    t.by_size.push_back(std::move(members));
  }
}

}  // namespace

const std::set<std::uint64_t>& oracle_members(ClassId id, int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("oracle_members supports 1 <= n <= 6");
  if (!has_constructive_definition(id)) {
    throw std::invalid_argument(std::string(to_string(id)) + " has no recursive definition");
  }
  std::lock_guard lock(oracle_mutex());
  OracleTable& t = oracle_tables()[id];
  extend_table(id, t, n);
  return t.by_size[n];
}

}  // namespace dicograph
