#include "dicograph/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace dicograph {

std::string_view to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::Union: return "union";
    case SplitKind::Series: return "series";
    case SplitKind::Order: return "order";
    case SplitKind::Prime: return "prime";
  }
  return "?";
}

namespace {

template <typename Neighbours>
std::vector<VertexMask> components(VertexMask all, Neighbours nb) {
  std::vector<VertexMask> out;
  VertexMask left = all;
  while (left) {
    VertexMask comp = left & -left;
    VertexMask frontier = comp;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexMask fresh = nb(v) & all & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool one_way_complete(const Digraph& g, VertexMask from, VertexMask to) {
  for (VertexMask a = from; a; a &= a - 1) {
    const int u = std::countr_zero(a);
    if ((g.out_mask(u) & to) != to) return false;
    if (g.in_mask(u) & to) return false;
  }
  return true;
}

}  // namespace

Split maximal_split(const Digraph& g) {
  if (g.order() < 2) throw std::invalid_argument("maximal_split needs at least two vertices");
  const VertexMask all = g.all_vertices();

  auto parts = components(all, [&](int v) { return g.out_mask(v) | g.in_mask(v); });
  if (parts.size() > 1) return {SplitKind::Union, std::move(parts)};

  parts = components(all, [&](int v) { return ~(g.out_mask(v) & g.in_mask(v)) & ~(VertexMask{1} << v); });
  if (parts.size() > 1) return {SplitKind::Series, std::move(parts)};

  // Pairs joined by both arcs or by none stay in one block.
  parts = components(all, [&](int v) {
    const VertexMask out = g.out_mask(v);
    const VertexMask in = g.in_mask(v);
    return ~(out ^ in) & ~(VertexMask{1} << v);
  });
  if (parts.size() > 1) {
    // Rank each block by how many other blocks its representative points to.
    std::vector<int> rank(parts.size(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const int u = std::countr_zero(parts[i]);
      for (std::size_t j = 0; j < parts.size(); ++j) {
        if (i != j && g.has_arc(u, std::countr_zero(parts[j]))) ++rank[i];
      }
    }
    std::vector<std::size_t> idx(parts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rank[a] > rank[b]; });
    std::vector<VertexMask> ordered;
    for (std::size_t i : idx) ordered.push_back(parts[i]);
    bool ok = true;
    for (std::size_t i = 0; i < ordered.size() && ok; ++i) {
      VertexMask later = 0;
      for (std::size_t j = i + 1; j < ordered.size(); ++j) later |= ordered[j];
      ok = one_way_complete(g, ordered[i], later);
    }
    if (ok) return {SplitKind::Order, std::move(ordered)};
  }
  return {SplitKind::Prime, {all}};
}

namespace {

bool build_tree(const Digraph& g, const std::vector<int>& vertices, LabeledTree& out_tree,
                std::optional<Expression>& out_expr) {
  if (vertices.size() == 1) {
    out_expr = Expression::leaf();
    out_tree.leaf_vertices.push_back(vertices[0]);
    return true;
  }
  const Digraph sub = induced(g, vertices);
  const Split split = maximal_split(sub);
  if (split.kind == SplitKind::Prime) return false;
  std::vector<Expression> children;
  for (VertexMask part : split.parts) {
    std::vector<int> members;
    for (VertexMask m = part; m; m &= m - 1) members.push_back(vertices[std::countr_zero(m)]);
    std::optional<Expression> child;
    if (!build_tree(g, members, out_tree, child)) return false;
    children.push_back(std::move(*child));
  }
  const OpKind op = split.kind == SplitKind::Union    ? OpKind::Union
                    : split.kind == SplitKind::Series ? OpKind::Series
                                                      : OpKind::Order;
  out_expr = Expression::make(op, std::move(children));
  return true;
}

}  // namespace

std::optional<LabeledTree> di_co_tree_labeled(const Digraph& g) {
  std::vector<int> vertices(g.order());
  std::iota(vertices.begin(), vertices.end(), 0);
  LabeledTree tree{Expression::leaf(), {}};
  std::optional<Expression> expr;
  if (!build_tree(g, vertices, tree, expr)) return std::nullopt;
  tree.expression = std::move(*expr);
  return tree;
}

std::optional<Expression> di_co_tree(const Digraph& g) {
  auto t = di_co_tree_labeled(g);
  if (!t) return std::nullopt;
  return std::move(t->expression);
}

// ---------------------------------------------------------------------------
// Creation sequences

std::optional<CreationSequence> creation_sequence(int n, std::span<const Arc> arcs,
                                                  bool allow_series) {
  if (n < 1) throw std::invalid_argument("creation_sequence needs at least one vertex");
  std::vector<int> out(n, 0), in(n, 0);
  for (const auto& [u, v] : arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("loop in arc list");
    ++out[u];
    ++in[v];
  }
  {
    // Duplicates: group the heads by tail, then stamp.
    std::vector<int> start(n + 1, 0);
    for (int u = 0; u < n; ++u) start[u + 1] = start[u] + out[u];
    std::vector<int> heads(arcs.size());
    std::vector<int> pos(start.begin(), start.end() - 1);
    for (const auto& [u, v] : arcs) heads[pos[u]++] = v;
    std::vector<int> stamp(n, -1);
    for (int u = 0; u < n; ++u) {
      for (int i = start[u]; i < start[u + 1]; ++i) {
        if (stamp[heads[i]] == u) throw std::invalid_argument("duplicate arc in arc list");
        stamp[heads[i]] = u;
      }
    }
  }

  // Every peeled vertex is either isolated or joined in the same way to all
  // vertices still present, so the degrees of those vertices all drop by the
  // same amounts: one in-degree per source, one out-degree per sink, one of
  // each per bi-dominating vertex. A vertex is therefore found by its
  // original degree pair, shifted by those running totals.
  auto key = [](long o, long i) { return (static_cast<std::uint64_t>(o) << 32) | static_cast<std::uint64_t>(i); };
  std::unordered_map<std::uint64_t, int> first;
  first.reserve(n);
  std::vector<int> next(n, -1);
  for (int v = n - 1; v >= 0; --v) {
    auto [it, fresh] = first.try_emplace(key(out[v], in[v]), v);
    if (!fresh) {
      next[v] = it->second;
      it->second = v;
    }
  }
  auto take = [&](long o, long i) {
    auto it = first.find(key(o, i));
    if (it == first.end() || it->second < 0) return -1;
    const int v = it->second;
    it->second = next[v];
    return v;
  };

  long lost_out = 0;
  long lost_in = 0;
  std::vector<int> peel_order;
  std::string peel_digit;
  peel_order.reserve(n);
  peel_digit.reserve(n);
  for (int k = n; k >= 1; --k) {
    int v = -1;
    char digit = '1';
    if (k >= 2) {
      const long all = k - 1;
      if (allow_series && (v = take(all + lost_out, all + lost_in)) >= 0) {
        digit = '3';
      } else if ((v = take(lost_out, all + lost_in)) >= 0) {
        digit = '2';
      } else if ((v = take(all + lost_out, lost_in)) >= 0) {
        digit = '1';
      }
    }
    if (v < 0) {
      v = take(lost_out, lost_in);
      if (v < 0) return std::nullopt;
      digit = k >= 2 ? '0' : '1';
    }
    peel_order.push_back(v);
    peel_digit.push_back(digit);
    if (digit == '1' || digit == '3') ++lost_in;
    if (digit == '2' || digit == '3') ++lost_out;
  }

  CreationSequence seq;
  seq.digits.assign(peel_digit.rbegin(), peel_digit.rend());
  seq.order.assign(peel_order.rbegin(), peel_order.rend());
  return seq;
}

std::optional<CreationSequence> creation_sequence(const Digraph& g, bool allow_series) {
  const auto arcs = g.arcs();
  return creation_sequence(g.order(), arcs, allow_series);
}

namespace {

bool peelable(const Digraph& g, VertexMask alive, int v, bool allow_series) {
  const VertexMask others = alive & ~(VertexMask{1} << v);
  const VertexMask out = g.out_mask(v) & others;
  const VertexMask in = g.in_mask(v) & others;
  if (!out && !in) return true;
  if (out == others && !in) return true;
  if (in == others && !out) return true;
  return allow_series && out == others && in == others;
}

bool peel_search(const Digraph& g, VertexMask alive, bool allow_series,
                 std::unordered_map<VertexMask, bool>& memo) {
  if (std::popcount(alive) <= 1) return true;
  if (auto it = memo.find(alive); it != memo.end()) return it->second;
  bool ok = false;
  for (VertexMask m = alive; m && !ok; m &= m - 1) {
    const int v = std::countr_zero(m);
    if (peelable(g, alive, v, allow_series)) {
      ok = peel_search(g, alive & ~(VertexMask{1} << v), allow_series, memo);
    }
  }
  memo[alive] = ok;
  return ok;
}

}  // namespace

bool creation_sequence_exists_exhaustive(const Digraph& g, bool allow_series) {
  std::unordered_map<VertexMask, bool> memo;
  return peel_search(g, g.all_vertices(), allow_series, memo);
}

std::vector<Arc> replay_arcs(std::string_view digits) {
  if (digits.empty() || digits[0] != '1') throw std::invalid_argument("creation sequence must start with 1");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char d = digits[i];
    if (d < '0' || d > '3') throw std::invalid_argument("creation sequence digits are 0-3");
    if (i == 0 || d == '0') continue;
    const int v = static_cast<int>(i);
    for (int u = 0; u < v; ++u) {
      if (d == '1' || d == '3') arcs.emplace_back(v, u);
      if (d == '2' || d == '3') arcs.emplace_back(u, v);
    }
  }
  return arcs;
}

Digraph replay(std::string_view digits) {
  if (digits.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw std::invalid_argument("creation sequence longer than 64");
  }
  const auto arcs = replay_arcs(digits);
  return Digraph(static_cast<int>(digits.size()), arcs);
}

}  // namespace dicograph
