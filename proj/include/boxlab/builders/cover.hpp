#ifndef BOXLAB_BUILDERS_COVER_HPP
#define BOXLAB_BUILDERS_COVER_HPP

// Shared pieces of the greedy constructions: single-dimension interval
// supergraphs of G and bookkeeping of which non-edges are still unrealized.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "boxlab/core/bitset.hpp"
#include "boxlab/core/box.hpp"
#include "boxlab/core/graph.hpp"
#include "boxlab/core/verify.hpp"

namespace boxlab {

// One dimension realizing exactly the non-edges of G incident to a or b, for a
// non-adjacent pair {a, b}.
inline box_representation::column pair_layout_column(const graph& g, vertex a, vertex b) {
  if (a == b || g.adjacent(a, b)) throw structural_error("pair layout needs a non-adjacent pair");
  box_representation::column c(g.order());
  for (vertex v = 0; v < g.order(); ++v) {
    const bool na = g.adjacent(v, a), nb = g.adjacent(v, b);
    if (na && nb) c[v] = {-2, 2};
    else if (na) c[v] = {-2, 0};
    else if (nb) c[v] = {0, 2};
    else c[v] = interval::point(0);
  }
  c[a] = {-2, -1};
  c[b] = {1, 2};
  return c;
}

// v -> [rank(v), max rank over N[v]]: an interval supergraph of G for any
// ranking, since an edge uv with rank(u) < rank(v) puts rank(v) in both.
inline box_representation::column ordering_column(const graph& g, std::span<const vertex> order) {
  std::vector<std::int64_t> rank(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<std::int64_t>(i);
  box_representation::column c(g.order());
  for (vertex v = 0; v < g.order(); ++v) {
    std::int64_t hi = rank[v];
    for (vertex w : g.neighbours(v)) hi = std::max(hi, rank[w]);
    c[v] = {rank[v], hi};
  }
  return c;
}

// v -> [min, max] of rank over a closed set S(v) with v in S(v) and S(u) or
// S(v) containing the other endpoint of every edge.
inline box_representation::column hull_column(std::span<const std::vector<vertex>> closed, std::span<const std::int64_t> rank) {
  box_representation::column c(closed.size());
  for (std::size_t v = 0; v < closed.size(); ++v) {
    std::int64_t lo = rank[v], hi = rank[v];
    for (vertex w : closed[v]) {
      lo = std::min(lo, rank[w]);
      hi = std::max(hi, rank[w]);
    }
    c[v] = {lo, hi};
  }
  return c;
}

// Non-edges of G not yet separated by any accepted dimension.
class nonedge_cover {
public:
  explicit nonedge_cover(const graph& g) : open_(g.order(), dyn_bitset(g.order())), count_(g.order(), 0) {
    for (vertex v = 0; v < g.order(); ++v) {
      open_[v] = g.row(v);
      open_[v].flip();
      open_[v].reset(v);
      count_[v] = open_[v].count();
      remaining_ += count_[v];
    }
    remaining_ /= 2;
  }

  std::size_t remaining() const noexcept { return remaining_; }
  bool done() const noexcept { return remaining_ == 0; }
  const dyn_bitset& open(vertex v) const noexcept { return open_[v]; }

  // Number of open non-edges the column separates.
  std::size_t gain(const box_representation::column& c) const {
    std::size_t total = 0;
    for_each_left_set(c, [&](vertex v, const dyn_bitset& left) {
      if (count_[v] != 0) total += count_and(left, open_[v]);
    });
    return total;
  }

  // Marks everything the column separates as closed; returns how many.
  std::size_t apply(const box_representation::column& c) {
    std::vector<std::pair<vertex, dyn_bitset>> hits;
    for_each_left_set(c, [&](vertex v, const dyn_bitset& left) {
      if (count_[v] == 0 || count_and(left, open_[v]) == 0) return;
      dyn_bitset h = left;
      h &= open_[v];
      hits.emplace_back(v, std::move(h));
    });
    std::size_t closed = 0;
    for (auto& [v, h] : hits)
      h.for_each([&](std::size_t u) {
        if (open_[v].test(u)) {
          open_[v].reset(u);
          open_[u].reset(v);
          --count_[v];
          --count_[u];
          ++closed;
        }
      });
    remaining_ -= closed;
    return closed;
  }

  // Vertex with the most open non-edges (lowest index on ties).
  vertex busiest() const noexcept {
    vertex best = 0;
    std::size_t most = 0;
    for (vertex v = 0; v < open_.size(); ++v) {
      if (count_[v] > most) {
        most = count_[v];
        best = v;
      }
    }
    return best;
  }

  // Open partner of a with the most open non-edges itself.
  vertex busiest_partner(vertex a) const noexcept {
    vertex best = a;
    std::size_t most = 0;
    open_[a].for_each([&](std::size_t u) {
      if (best == a || count_[u] > most) {
        most = count_[u];
        best = static_cast<vertex>(u);
      }
    });
    return best;
  }

private:
  static std::size_t count_and(const dyn_bitset& x, const dyn_bitset& y) noexcept {
    std::size_t c = 0;
    const auto& a = x.words();
    const auto& b = y.words();
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
  }

  std::vector<dyn_bitset> open_;
  std::vector<std::size_t> count_;
  std::size_t remaining_ = 0;
};

// Dimensions of pair layouts that close every remaining open non-edge.
inline std::vector<std::pair<vertex, vertex>> finish_with_pairs(const graph& g, nonedge_cover& cover, box_representation& rep) {
  std::vector<std::pair<vertex, vertex>> pairs;
  while (!cover.done()) {
    const vertex a = cover.busiest();
    const vertex b = cover.busiest_partner(a);
    auto col = pair_layout_column(g, std::min(a, b), std::max(a, b));
    cover.apply(col);
    rep.add_dim(std::move(col));
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  return pairs;
}

} // namespace boxlab

#endif // BOXLAB_BUILDERS_COVER_HPP
