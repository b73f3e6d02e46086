#pragma once

// Backtracking search for induced embeddings of a small digraph into a larger
// one. Shared by the isomorphism test and the obstruction matcher.

#include <bit>
#include <optional>
#include <vector>

#include "dicograph/digraph.hpp"

namespace dicograph::detail {

class EmbeddingSearch {
 public:
  /// `exact` demands a bijection and equal degree signatures per vertex pair.
  EmbeddingSearch(const Digraph& pattern, const Digraph& host, bool exact)
      : pattern_(pattern), host_(host), exact_(exact) {
    const int k = pattern.order();
    order_.reserve(k);
    // Greedy connectivity order: next vertex has most arcs to already chosen
    // ones, ties broken by total degree then index.
    VertexMask chosen = 0;
    for (int step = 0; step < k; ++step) {
      int best = -1;
      int best_links = -1;
      int best_deg = -1;
      for (int v = 0; v < k; ++v) {
        if ((chosen >> v) & 1U) continue;
        const VertexMask nb = pattern.out_mask(v) | pattern.in_mask(v);
        const int links = std::popcount(nb & chosen);
        const int deg = std::popcount(nb);
        if (links > best_links || (links == best_links && deg > best_deg)) {
          best = v;
          best_links = links;
          best_deg = deg;
        }
      }
      order_.push_back(best);
      chosen |= VertexMask{1} << best;
    }
    for (int v = 0; v < k; ++v) {
      pat_out_.push_back(std::popcount(pattern.out_mask(v)));
      pat_in_.push_back(std::popcount(pattern.in_mask(v)));
    }
    for (int v = 0; v < host.order(); ++v) {
      host_out_.push_back(std::popcount(host.out_mask(v)));
      host_in_.push_back(std::popcount(host.in_mask(v)));
    }
  }

  /// mapping[pattern vertex] = host vertex, or nullopt.
  std::optional<std::vector<int>> find() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (exact_ && pattern_.order() != host_.order()) return std::nullopt;
    map_.assign(pattern_.order(), -1);
    if (extend(0, 0)) return map_;
    return std::nullopt;
  }

 private:
  bool compatible(int p, int h) const {
    if (exact_) return pat_out_[p] == host_out_[h] && pat_in_[p] == host_in_[h];
    return pat_out_[p] <= host_out_[h] && pat_in_[p] <= host_in_[h];
  }

  bool extend(std::size_t depth, VertexMask used) {
    if (depth == order_.size()) return true;
    const int p = order_[depth];
    for (int h = 0; h < host_.order(); ++h) {
      if ((used >> h) & 1U) continue;
      if (!compatible(p, h)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const int q = order_[j];
        const int hq = map_[q];
        ok = pattern_.has_arc(p, q) == host_.has_arc(h, hq) &&
             pattern_.has_arc(q, p) == host_.has_arc(hq, h);
      }
      if (!ok) continue;
      map_[p] = h;
      if (extend(depth + 1, used | (VertexMask{1} << h))) return true;
      map_[p] = -1;
    }
    return false;
  }

  const Digraph& pattern_;
  const Digraph& host_;
  bool exact_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<int> pat_out_, pat_in_, host_out_, host_in_;
};

}  // namespace dicograph::detail
