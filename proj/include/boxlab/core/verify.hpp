#ifndef BOXLAB_CORE_VERIFY_HPP
#define BOXLAB_CORE_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "boxlab/core/bitset.hpp"
#include "boxlab/core/box.hpp"
#include "boxlab/core/graph.hpp"
#include "boxlab/core/poset.hpp"

namespace boxlab {

enum class violation_kind {
  missing_edge,           // uv is an edge but the boxes are disjoint
  spurious_intersection,  // uv is a non-edge but the boxes meet
  spurious_order,         // u before v in every order, u and v unrelated or v < u
  missing_order,          // u < v in P but some order puts v first
  unseparated_pair,       // FK: no order puts u before every z >= v
};

inline const char* to_string(violation_kind k) {
  switch (k) {
  case violation_kind::missing_edge: return "missing-edge";
  case violation_kind::spurious_intersection: return "spurious-intersection";
  case violation_kind::spurious_order: return "spurious-order";
  case violation_kind::missing_order: return "missing-order";
  case violation_kind::unseparated_pair: return "unseparated-pair";
  }
  return "?";
}

struct violation {
  vertex u;
  vertex v;
  violation_kind kind;

  bool operator==(const violation&) const = default;
};

inline constexpr std::size_t default_violation_cap = 100;

// Outcome of a verifier. `total` counts every violation; `violations` keeps the
// first `cap` of them.
struct verify_report {
  std::vector<violation> violations;
  std::size_t total = 0;
  std::size_t cap = default_violation_cap;

  bool ok() const noexcept { return total == 0; }
  void add(vertex u, vertex v, violation_kind kind) {
    ++total;
    if (violations.size() < cap) violations.push_back({u, v, kind});
  }
  std::string summary() const {
    std::string s = std::to_string(total) + " violation(s)";
    for (const auto& x : violations)
      s += "\n  " + std::string(to_string(x.kind)) + " {" + std::to_string(x.u) + "," + std::to_string(x.v) + "}";
    return s;
  }
};

// For one dimension, calls f(v, left) for every vertex v where `left` holds
// exactly the vertices u with hi(u) < lo(v). A pair is separated in the
// dimension iff one endpoint lies in the other's left set (never both).
template <class F>
void for_each_left_set(const box_representation::column& col, F&& f) {
  const std::size_t n = col.size();
  std::vector<vertex> by_lo(n), by_hi(n);
  std::iota(by_lo.begin(), by_lo.end(), vertex{0});
  std::iota(by_hi.begin(), by_hi.end(), vertex{0});
  std::sort(by_lo.begin(), by_lo.end(), [&](vertex a, vertex b) { return col[a].lo < col[b].lo || (col[a].lo == col[b].lo && a < b); });
  std::sort(by_hi.begin(), by_hi.end(), [&](vertex a, vertex b) { return col[a].hi < col[b].hi || (col[a].hi == col[b].hi && a < b); });
  dyn_bitset left(n);
  std::size_t j = 0;
  bool any = false;
  for (vertex v : by_lo) {
    while (j < n && col[by_hi[j]].hi < col[v].lo) {
      left.set(by_hi[j++]);
      any = true;
    }
    if (any) f(v, left);
  }
}

// Accumulates pairwise separation over dimensions.
class separation_tracker {
public:
  explicit separation_tracker(std::size_t n) : left_(n, dyn_bitset(n)) {}

  void add(const box_representation::column& col) {
    for_each_left_set(col, [&](vertex v, const dyn_bitset& left) { left_[v] |= left; });
  }
  void add_all(const box_representation& rep) {
    for (const auto& c : rep.columns()) add(c);
  }

  bool separated(vertex u, vertex v) const noexcept { return left_[v].test(u) || left_[u].test(v); }

private:
  std::vector<dyn_bitset> left_;
};

inline graph intersection_graph(const box_representation& rep) {
  const std::size_t n = rep.vertices();
  separation_tracker sep(n);
  sep.add_all(rep);
  std::vector<edge> es;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (!sep.separated(u, v)) es.emplace_back(u, v);
  return graph::from_edges(n, es);
}

inline verify_report verify_box_rep(const graph& g, const box_representation& rep,
                                    std::size_t cap = default_violation_cap) {
  if (rep.vertices() != g.order())
    throw structural_error("representation has boxes for " + std::to_string(rep.vertices()) + " vertices, graph has " +
                           std::to_string(g.order()));
  verify_report report;
  report.cap = cap;
  separation_tracker sep(g.order());
  sep.add_all(rep);
  for (vertex u = 0; u < g.order(); ++u)
    for (vertex v = u + 1; v < g.order(); ++v) {
      const bool meet = !sep.separated(u, v);
      if (g.adjacent(u, v) && !meet) report.add(u, v, violation_kind::missing_edge);
      if (!g.adjacent(u, v) && meet) report.add(u, v, violation_kind::spurious_intersection);
    }
  return report;
}

inline verify_report verify_realizer(const poset& p, const realizer& r, std::size_t cap = default_violation_cap) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> ranks;
  ranks.reserve(r.size());
  for (const auto& o : r.orders) ranks.push_back(order_ranks(o, n));
  verify_report report;
  report.cap = cap;
  if (r.size() == 0 && n > 1) throw structural_error("empty realizer");
  for (vertex u = 0; u < n; ++u)
    for (vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      bool all_before = true;
      for (const auto& rk : ranks) all_before = all_before && rk[u] < rk[v];
      if (all_before && !p.less(u, v)) report.add(u, v, violation_kind::spurious_order);
      if (!all_before && p.less(u, v)) report.add(u, v, violation_kind::missing_order);
    }
  return report;
}

// Checks the Füredi–Kahn condition: for each incomparable ordered pair (x, y)
// some order puts x before every z with y <= z. The orders need not be linear
// extensions.
inline verify_report verify_fk_realizer(const poset& p, std::span<const std::vector<vertex>> orders,
                                        std::size_t cap = default_violation_cap) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> ranks;
  ranks.reserve(orders.size());
  for (const auto& o : orders) ranks.push_back(order_ranks(o, n));
  verify_report report;
  report.cap = cap;
  // first_up[i][y] = min rank in order i over the up-set {z : y <= z}.
  std::vector<std::vector<std::size_t>> first_up(ranks.size(), std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < ranks.size(); ++i)
    for (vertex y = 0; y < n; ++y) {
      std::size_t m = ranks[i][y];
      p.above(y).for_each([&](std::size_t z) { m = std::min(m, ranks[i][z]); });
      first_up[i][y] = m;
    }
  for (vertex x = 0; x < n; ++x)
    for (vertex y = 0; y < n; ++y) {
      if (x == y || p.comparable(x, y)) continue;
      bool witnessed = false;
      for (std::size_t i = 0; i < ranks.size() && !witnessed; ++i) witnessed = ranks[i][x] < first_up[i][y];
      if (!witnessed) report.add(x, y, violation_kind::unseparated_pair);
    }
  return report;
}

} // namespace boxlab

#endif // BOXLAB_CORE_VERIFY_HPP
