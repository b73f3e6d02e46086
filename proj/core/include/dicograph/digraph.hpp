#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dicograph {

inline constexpr int kMaxVertices = 64;

using VertexMask = std::uint64_t;
using Arc = std::pair<int, int>;

/// Loop-free digraph on vertices 0..n-1 stored as an out-adjacency bit matrix.
///
/// The vertex count is fixed at construction (1 <= n <= 64). Arcs may be added
/// or removed on a non-const value; every transform below returns a new value.
class Digraph {
 public:
  explicit Digraph(int n);
  Digraph(int n, std::span<const Arc> arcs);
  Digraph(int n, std::initializer_list<Arc> arcs);

  int order() const { return n_; }
  VertexMask all_vertices() const {
    return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
  }

  bool has_arc(int u, int v) const { return (out_[u] >> v) & 1U; }
  bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }
  VertexMask out_mask(int u) const { return out_[u]; }
  VertexMask in_mask(int v) const;

  /// Throws std::invalid_argument for loops or out-of-range endpoints.
  void add_arc(int u, int v);
  void remove_arc(int u, int v);

  int arc_count() const;
  /// Arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  void check_vertex(int v) const;

  int n_;
  std::array<VertexMask, kMaxVertices> out_{};
};

/// Simple undirected graph; adjacency rows are kept symmetric.
class UndirectedGraph {
 public:
  explicit UndirectedGraph(int n);
  UndirectedGraph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbours(int u) const { return adj_[u]; }
  void add_edge(int u, int v);
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  /// Complete biorientation: every edge becomes a pair of opposite arcs.
  Digraph as_symmetric_digraph() const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_;
  std::array<VertexMask, kMaxVertices> adj_{};
};

UndirectedGraph complement(const UndirectedGraph& g);
UndirectedGraph induced(const UndirectedGraph& g, VertexMask subset);

Digraph complement(const Digraph& g);
Digraph converse(const Digraph& g);
UndirectedGraph underlying(const Digraph& g);

struct SymAsymParts {
  Digraph symmetric;
  Digraph asymmetric;
};
SymAsymParts sym_asym_parts(const Digraph& g);

/// Induced subdigraph on `subset`, relabelled 0..k-1 in increasing vertex
/// order. Throws std::invalid_argument for an empty or out-of-range subset.
Digraph induced(const Digraph& g, VertexMask subset);
Digraph induced(const Digraph& g, std::span<const int> vertices);

/// The subdigraph obtained by deleting one vertex. Requires order() >= 2.
Digraph delete_vertex(const Digraph& g, int v);

/// Relabels so that new vertex i is old vertex order[i].
Digraph relabel(const Digraph& g, std::span<const int> order);

struct Predicates {
  bool is_edgeless = false;
  bool is_bidirectional_complete = false;
  bool is_tournament = false;
  bool is_transitive = false;
  bool is_acyclic = false;
  bool is_oriented = false;
};
Predicates predicates(const Digraph& g);

bool is_transitive(const Digraph& g);
bool is_acyclic(const Digraph& g);
bool is_oriented(const Digraph& g);
bool is_tournament(const Digraph& g);
bool is_symmetric(const Digraph& g);

// ---------------------------------------------------------------------------
// Isomorphism and canonical forms

/// mapping[v] is the image in `h` of vertex v of `g`.
struct Isomorphism {
  std::vector<int> mapping;
};

std::optional<Isomorphism> isomorphic(const Digraph& g, const Digraph& h);

/// Vertex order producing the canonical relabelling: canonical vertex i is
/// original vertex labeling[i].
std::vector<int> canonical_labeling(const Digraph& g);

/// Canonical byte string: equal for two digraphs iff they are isomorphic.
/// Byte 0 is n, followed by the adjacency bits of the canonical relabelling,
/// column by column (for k = 1..n-1, i < k: arc(i,k) then arc(k,i)).
/// Throws std::runtime_error if the search budget is exhausted, which can only
/// happen for large highly symmetric inputs.
std::string canonical_form(const Digraph& g);

/// The canonically relabelled copy of g.
Digraph canonical_digraph(const Digraph& g);

/// Packed canonical form for n <= 8: the bit string of canonical_form in the
/// low 56 bits, n in the top byte. Ordering matches canonical_form ordering.
std::uint64_t canonical_code(const Digraph& g);
Digraph digraph_from_code(std::uint64_t code);

/// Printable rendering of the canonical form, e.g. "4:0>1,2>3".
std::string canonical_text(const Digraph& g);

}  // namespace dicograph
