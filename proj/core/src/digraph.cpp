#include "dicograph/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "embedding.hpp"

namespace dicograph {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must be in 1.." + std::to_string(kMaxVertices) +
                                ", got " + std::to_string(n));
  }
}

VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(int n) : n_(n) { check_order(n); }

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const auto& [u, v] : arcs) add_arc(u, v);
}

Digraph::Digraph(int n, std::initializer_list<Arc> arcs)
    : Digraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n_));
  }
}

VertexMask Digraph::in_mask(int v) const {
  VertexMask m = 0;
  for (int u = 0; u < n_; ++u) {
    if (has_arc(u, v)) m |= bit(u);
  }
  return m;
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  out_[u] |= bit(v);
}

void Digraph::remove_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  out_[u] &= ~bit(v);
}

int Digraph::arc_count() const {
  int c = 0;
  for (int u = 0; u < n_; ++u) c += std::popcount(out_[u]);
  return c;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (has_arc(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// UndirectedGraph

UndirectedGraph::UndirectedGraph(int n) : n_(n) { check_order(n); }

UndirectedGraph::UndirectedGraph(int n, std::initializer_list<std::pair<int, int>> edges)
    : UndirectedGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void UndirectedGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw std::invalid_argument("invalid edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "}");
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

int UndirectedGraph::edge_count() const {
  int c = 0;
  for (int u = 0; u < n_; ++u) c += std::popcount(adj_[u]);
  return c / 2;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Digraph UndirectedGraph::as_symmetric_digraph() const {
  Digraph d(n_);
  for (const auto& [u, v] : edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

UndirectedGraph complement(const UndirectedGraph& g) {
  UndirectedGraph c(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

UndirectedGraph induced(const UndirectedGraph& g, VertexMask subset) {
  std::vector<int> vs;
  for (int v = 0; v < g.order(); ++v) {
    if ((subset >> v) & 1U) vs.push_back(v);
  }
  if (vs.empty()) throw std::invalid_argument("induced: empty vertex subset");
  UndirectedGraph h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.has_edge(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Transforms

Digraph complement(const Digraph& g) {
  Digraph c(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u != v && !g.has_arc(u, v)) c.add_arc(u, v);
    }
  }
  return c;
}

Digraph converse(const Digraph& g) {
  Digraph c(g.order());
  for (const auto& [u, v] : g.arcs()) c.add_arc(v, u);
  return c;
}

UndirectedGraph underlying(const Digraph& g) {
  UndirectedGraph u(g.order());
  for (const auto& [a, b] : g.arcs()) u.add_edge(a, b);
  return u;
}

SymAsymParts sym_asym_parts(const Digraph& g) {
  SymAsymParts parts{Digraph(g.order()), Digraph(g.order())};
  for (const auto& [u, v] : g.arcs()) {
    if (g.has_arc(v, u)) {
      parts.symmetric.add_arc(u, v);
    } else {
      parts.asymmetric.add_arc(u, v);
    }
  }
  return parts;
}

Digraph induced(const Digraph& g, VertexMask subset) {
  if (subset == 0) throw std::invalid_argument("induced: empty vertex subset");
  if ((subset & ~g.all_vertices()) != 0) {
    throw std::invalid_argument("induced: vertex subset out of range");
  }
  std::vector<int> vs;
  for (int v = 0; v < g.order(); ++v) {
    if ((subset >> v) & 1U) vs.push_back(v);
  }
  Digraph h(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i != j && g.has_arc(vs[i], vs[j])) h.add_arc(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

Digraph induced(const Digraph& g, std::span<const int> vertices) {
  VertexMask mask = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.order()) {
      throw std::invalid_argument("induced: vertex " + std::to_string(v) + " out of range");
    }
    if ((mask >> v) & 1U) throw std::invalid_argument("induced: duplicate vertex");
    mask |= bit(v);
  }
  return induced(g, mask);
}

Digraph delete_vertex(const Digraph& g, int v) {
  if (g.order() < 2) throw std::invalid_argument("delete_vertex: digraph has one vertex");
  return induced(g, g.all_vertices() & ~bit(v));
}

Digraph relabel(const Digraph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.order()) {
    throw std::invalid_argument("relabel: order has wrong length");
  }
  Digraph h(g.order());
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (i != j && g.has_arc(order[i], order[j])) h.add_arc(i, j);
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_transitive(const Digraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    VertexMask two_step = 0;
    VertexMask out = g.out_mask(u);
    while (out) {
      const int v = std::countr_zero(out);
      out &= out - 1;
      two_step |= g.out_mask(v);
    }
    two_step &= ~bit(u);
    if ((two_step & ~g.out_mask(u)) != 0) return false;
  }
  return true;
}

bool is_acyclic(const Digraph& g) {
  VertexMask remaining = g.all_vertices();
  bool progress = true;
  while (remaining && progress) {
    progress = false;
    for (int v = 0; v < g.order(); ++v) {
      if (((remaining >> v) & 1U) && (g.out_mask(v) & remaining) == 0) {
        remaining &= ~bit(v);
        progress = true;
      }
    }
  }
  return remaining == 0;
}

bool is_oriented(const Digraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_arc(u, v) && g.has_arc(v, u)) return false;
    }
  }
  return true;
}

bool is_tournament(const Digraph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_arc(u, v) == g.has_arc(v, u)) return false;
    }
  }
  return true;
}

bool is_symmetric(const Digraph& g) {
  for (const auto& [u, v] : g.arcs()) {
    if (!g.has_arc(v, u)) return false;
  }
  return true;
}

Predicates predicates(const Digraph& g) {
  Predicates p;
  const int n = g.order();
  p.is_edgeless = g.arc_count() == 0;
  p.is_bidirectional_complete = g.arc_count() == n * (n - 1);
  p.is_tournament = is_tournament(g);
  p.is_transitive = is_transitive(g);
  p.is_acyclic = is_acyclic(g);
  p.is_oriented = is_oriented(g);
  return p;
}

// ---------------------------------------------------------------------------
// Canonical labelling
//
// Vertices are first partitioned by an iterated colour refinement whose colours
// depend only on isomorphism-invariant data. The canonical relabelling is the
// colour-respecting vertex order whose column-wise adjacency code is
// lexicographically smallest. The search prunes on code prefixes and skips
// candidates that are twins (transposition is an automorphism) of an already
// tried candidate at the same depth.

namespace {

__extension__ using Column = unsigned __int128;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<int> refine_colours(const Digraph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> sig(n);
  std::vector<int> colour(n, 0);
  int classes = 1;
  for (int round = 0; round <= n; ++round) {
    for (int v = 0; v < n; ++v) {
      std::uint64_t acc = 0;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        const int type = (g.has_arc(v, u) ? 1 : 0) | (g.has_arc(u, v) ? 2 : 0);
        acc += mix((static_cast<std::uint64_t>(colour[u]) << 2) | static_cast<std::uint64_t>(type));
      }
      sig[v] = mix(mix(static_cast<std::uint64_t>(colour[v])) ^ acc);
    }
    std::vector<std::uint64_t> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                   distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes && round > 0) break;
    classes = now;
  }
  return colour;
}

class CanonicalSearch {
 public:
  static constexpr long kNodeBudget = 20'000'000;

  explicit CanonicalSearch(const Digraph& g) : g_(g), n_(g.order()) {
    colour_ = refine_colours(g);
    slot_colour_ = colour_;
    std::sort(slot_colour_.begin(), slot_colour_.end());
    twins_.assign(n_, 0);
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (colour_[u] != colour_[v]) continue;
        const VertexMask uv = bit(u) | bit(v);
        if (g.has_arc(u, v) != g.has_arc(v, u)) continue;
        if ((g.out_mask(u) & ~uv) != (g.out_mask(v) & ~uv)) continue;
        if ((g.in_mask(u) & ~uv) != (g.in_mask(v) & ~uv)) continue;
        twins_[u] |= bit(v);
        twins_[v] |= bit(u);
      }
    }
    cur_.assign(n_, 0);
    best_.assign(n_, 0);
    labeling_.assign(n_, -1);
  }

  std::vector<int> run() {
    diverged_ = true;
    search(0, 0);
    return best_labeling_;
  }

  const std::vector<Column>& best_columns() const { return best_; }

 private:
  Column column(int k, int v) const {
    Column c = 0;
    for (int i = 0; i < k; ++i) {
      c <<= 2;
      const int u = labeling_[i];
      if (g_.has_arc(u, v)) c |= 2;
      if (g_.has_arc(v, u)) c |= 1;
    }
    return c;
  }

  void search(int k, VertexMask used) {
    if (++nodes_ > kNodeBudget) {
      throw std::runtime_error("canonical_form: search budget exhausted");
    }
    if (k == n_) {
      if (diverged_) {
        best_ = cur_;
        best_labeling_ = labeling_;
        diverged_ = false;
      }
      return;
    }
    VertexMask tried = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      if (colour_[v] != slot_colour_[k]) continue;
      if (twins_[v] & tried) continue;
      tried |= bit(v);
      labeling_[k] = v;
      const Column col = column(k, v);
      const bool was_diverged = diverged_;
      if (!diverged_) {
        if (col > best_[k]) continue;
        if (col < best_[k]) diverged_ = true;
      }
      cur_[k] = col;
      search(k + 1, used | bit(v));
      // A diverged branch always reaches a leaf and resets the flag; a branch
      // entered on an equal prefix leaves it untouched.
      diverged_ = was_diverged && diverged_;
    }
  }

  const Digraph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<VertexMask> twins_;
  std::vector<Column> cur_;
  std::vector<Column> best_;
  std::vector<int> labeling_;
  std::vector<int> best_labeling_;
  bool diverged_ = true;
  long nodes_ = 0;
};

}  // namespace

std::vector<int> canonical_labeling(const Digraph& g) { return CanonicalSearch(g).run(); }

Digraph canonical_digraph(const Digraph& g) {
  const auto order = canonical_labeling(g);
  return relabel(g, order);
}

std::string canonical_form(const Digraph& g) {
  const Digraph c = canonical_digraph(g);
  const int n = c.order();
  std::string out;
  out.push_back(static_cast<char>(n));
  unsigned char acc = 0;
  int filled = 0;
  auto push = [&](bool b) {
    acc = static_cast<unsigned char>((acc << 1) | (b ? 1 : 0));
    if (++filled == 8) {
      out.push_back(static_cast<char>(acc));
      acc = 0;
      filled = 0;
    }
  };
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < k; ++i) {
      push(c.has_arc(i, k));
      push(c.has_arc(k, i));
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(acc << (8 - filled)));
  return out;
}

std::uint64_t canonical_code(const Digraph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("canonical_code: requires n <= 8");
  const Digraph c = canonical_digraph(g);
  std::uint64_t code = 0;
  int pos = 55;
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < k; ++i) {
      if (c.has_arc(i, k)) code |= std::uint64_t{1} << pos;
      --pos;
      if (c.has_arc(k, i)) code |= std::uint64_t{1} << pos;
      --pos;
    }
  }
  return code | (static_cast<std::uint64_t>(n) << 56);
}

Digraph digraph_from_code(std::uint64_t code) {
  const int n = static_cast<int>(code >> 56);
  Digraph g(n);
  int pos = 55;
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < k; ++i) {
      if ((code >> pos) & 1U) g.add_arc(i, k);
      --pos;
      if ((code >> pos) & 1U) g.add_arc(k, i);
      --pos;
    }
  }
  return g;
}

std::string canonical_text(const Digraph& g) {
  const Digraph c = canonical_digraph(g);
  std::string s = std::to_string(c.order()) + ":";
  bool first = true;
  for (const auto& [u, v] : c.arcs()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(u) + ">" + std::to_string(v);
  }
  return s;
}

std::optional<Isomorphism> isomorphic(const Digraph& g, const Digraph& h) {
  if (g.order() != h.order() || g.arc_count() != h.arc_count()) return std::nullopt;
  if (g.order() <= 10) {
    const auto lg = canonical_labeling(g);
    const auto lh = canonical_labeling(h);
    if (relabel(g, lg) != relabel(h, lh)) return std::nullopt;
    Isomorphism iso{std::vector<int>(g.order())};
    for (int i = 0; i < g.order(); ++i) iso.mapping[lg[i]] = lh[i];
    return iso;
  }
  detail::EmbeddingSearch search(g, h, /*exact=*/true);
  auto m = search.find();
  if (!m) return std::nullopt;
  return Isomorphism{std::move(*m)};
}

}  // namespace dicograph
