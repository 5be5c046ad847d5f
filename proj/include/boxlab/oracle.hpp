#ifndef BOXLAB_ORACLE_HPP
#define BOXLAB_ORACLE_HPP

// Exact boxicity and poset dimension by exhaustive search, for tiny inputs.
// Deliberately independent of the builders it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "boxlab/core/box.hpp"
#include "boxlab/core/compose.hpp"
#include "boxlab/core/error.hpp"
#include "boxlab/core/graph.hpp"
#include "boxlab/core/poset.hpp"
#include "boxlab/core/verify.hpp"

namespace boxlab {

inline constexpr std::size_t interval_oracle_limit = 12;
inline constexpr std::size_t exact_oracle_limit = 8;

namespace detail {

inline std::vector<std::uint32_t> neighbour_masks(const graph& g) {
  std::vector<std::uint32_t> nb(g.order(), 0);
  for (vertex v = 0; v < g.order(); ++v)
    for (vertex w : g.neighbours(v)) nb[v] |= 1U << w;
  return nb;
}

// An ordering with no u < v < w, uw an edge, uv a non-edge. Such an order
// exists iff the graph is interval. Whether w may come next depends only on
// the set S already placed: every placed non-neighbour of w must have all of
// its neighbours inside S. So a search over subsets suffices.
inline std::optional<std::vector<vertex>> umbrella_free_order(const std::vector<std::uint32_t>& nb) {
  const std::size_t n = nb.size();
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  std::vector<std::int8_t> last(std::size_t{1} << n, -1);
  std::vector<char> reach(std::size_t{1} << n, 0);
  reach[0] = 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!reach[mask]) continue;
    std::uint32_t closed = 0;
    for (std::size_t u = 0; u < n; ++u)
      if ((mask >> u & 1U) && (nb[u] & ~mask) == 0) closed |= 1U << u;
    for (std::size_t w = 0; w < n; ++w) {
      if (mask >> w & 1U) continue;
      if ((mask & ~nb[w] & ~closed) != 0) continue;
      const std::uint32_t next = mask | (1U << w);
      if (!reach[next]) {
        reach[next] = 1;
        last[next] = static_cast<std::int8_t>(w);
      }
    }
    if (mask == full) break;
  }
  if (!reach[full]) return std::nullopt;
  std::vector<vertex> order;
  for (std::uint32_t mask = full; mask != 0; mask &= ~(1U << last[mask])) order.push_back(static_cast<vertex>(last[mask]));
  std::reverse(order.begin(), order.end());
  return order;
}

// v -> [rank(v), max rank over N[v]]
inline box_representation::column order_model(const graph& g, std::span<const vertex> order) {
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

// Keeps the inclusion-maximal masks of a deduplicated list.
template <class Mask, class Payload>
std::vector<std::pair<Mask, Payload>> maximal_masks(std::map<Mask, Payload>& found) {
  std::vector<std::pair<Mask, Payload>> all(found.begin(), found.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    const int ca = __builtin_popcountll(a.first), cb = __builtin_popcountll(b.first);
    return ca != cb ? ca > cb : a.first < b.first;
  });
  std::vector<std::pair<Mask, Payload>> keep;
  for (auto& e : all) {
    bool dominated = false;
    for (const auto& k : keep)
      if ((e.first & ~k.first) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) keep.push_back(std::move(e));
  }
  return keep;
}

// Smallest number of masks whose union contains `universe`, by iterative
// deepening with branching on the lowest uncovered element.
template <class Mask, class Payload>
std::optional<std::vector<std::size_t>> min_cover(const std::vector<std::pair<Mask, Payload>>& sets, Mask universe, std::size_t max_depth) {
  std::vector<std::size_t> chosen;
  std::function<bool(Mask, std::size_t)> search = [&](Mask open, std::size_t depth) -> bool {
    if (open == 0) return true;
    if (depth == 0) return false;
    const Mask low = open & (~open + 1);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if ((sets[i].first & low) == 0) continue;
      if (depth == 1 && (open & ~sets[i].first) != 0) continue;
      chosen.push_back(i);
      if (search(open & ~sets[i].first, depth - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t d = 1; d <= max_depth; ++d) {
    chosen.clear();
    if (search(universe, d)) return chosen;
  }
  return std::nullopt;
}

} // namespace detail

// One-dimensional model of an interval graph, or nullopt.
inline std::optional<box_representation> is_interval_graph(const graph& g) {
  if (g.order() > interval_oracle_limit)
    throw parameter_error("is_interval_graph: oracle handles at most " + std::to_string(interval_oracle_limit) + " vertices");
  const auto order = detail::umbrella_free_order(detail::neighbour_masks(g));
  if (!order) return std::nullopt;
  box_representation rep(g.order());
  rep.add_dim(detail::order_model(g, *order));
  return rep;
}

struct exact_boxicity_result {
  std::size_t value = 0;
  box_representation witness;
};

// Every inclusion-minimal interval supergraph of G is the one induced by some
// ordering through [rank(v), max rank N[v]], so the maximal sets of non-edges
// one dimension can realize come from enumerating orderings. Boxicity is the
// least number of such sets covering all non-edges.
inline exact_boxicity_result exact_boxicity(const graph& g) {
  const std::size_t n = g.order();
  if (n > exact_oracle_limit)
    throw parameter_error("exact_boxicity: oracle handles at most " + std::to_string(exact_oracle_limit) + " vertices");
  if (g.is_complete()) return {1, complete_representation(n)};

  std::vector<edge> nonedges;
  for (vertex u = 0; u < n; ++u)
    for (vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) nonedges.emplace_back(u, v);
  std::map<std::uint32_t, std::vector<vertex>> found;
  std::vector<vertex> order(n);
  std::iota(order.begin(), order.end(), vertex{0});
  do {
    const auto col = detail::order_model(g, order);
    std::uint32_t mask = 0;
    for (std::size_t e = 0; e < nonedges.size(); ++e) {
      const auto [u, v] = nonedges[e];
      if (!col[u].meets(col[v])) mask |= 1U << e;
    }
    found.emplace(mask, order);
  } while (std::next_permutation(order.begin(), order.end()));
  const auto sets = detail::maximal_masks(found);
  const std::uint32_t universe = nonedges.size() == 32 ? ~0U : (1U << nonedges.size()) - 1;
  const auto cover = detail::min_cover(sets, universe, std::max<std::size_t>(1, n / 2));
  if (!cover) throw structural_error("exact_boxicity: no cover within floor(n/2) dimensions");
  box_representation rep(n);
  for (auto i : *cover) rep.add_dim(detail::order_model(g, sets[i].second));
  return {cover->size(), std::move(rep)};
}

namespace detail {

inline void for_each_linear_extension(const poset& p, const std::function<void(const std::vector<vertex>&)>& f) {
  const std::size_t n = p.size();
  std::vector<std::uint32_t> down(n, 0);
  for (vertex u = 0; u < n; ++u) p.above(u).for_each([&](std::size_t v) { down[v] |= 1U << u; });
  std::vector<vertex> prefix;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t placed) {
    if (prefix.size() == n) {
      f(prefix);
      return;
    }
    for (vertex v = 0; v < n; ++v) {
      if ((placed >> v & 1U) || (down[v] & ~placed) != 0) continue;
      prefix.push_back(v);
      rec(placed | (1U << v));
      prefix.pop_back();
    }
  };
  rec(0);
}

} // namespace detail

struct exact_dimension_result {
  std::size_t value = 0;
  realizer witness;
};

// A family of linear extensions is a realizer iff it reverses every critical
// pair (x, y): x, y incomparable, everything below x is below y and
// everything above y is above x; "reversed" means y comes before x.
inline exact_dimension_result exact_dimension(const poset& p) {
  const std::size_t n = p.size();
  if (n > exact_oracle_limit)
    throw parameter_error("exact_dimension: oracle handles at most " + std::to_string(exact_oracle_limit) + " elements");
  std::vector<std::uint32_t> down(n, 0), up(n, 0);
  for (vertex u = 0; u < n; ++u)
    p.above(u).for_each([&](std::size_t v) {
      down[v] |= 1U << u;
      up[u] |= 1U << v;
    });
  std::vector<edge> critical;
  for (vertex x = 0; x < n; ++x)
    for (vertex y = 0; y < n; ++y)
      if (x != y && !p.comparable(x, y) && (down[x] & ~down[y]) == 0 && (up[y] & ~up[x]) == 0) critical.emplace_back(x, y);

  std::map<std::uint64_t, std::vector<vertex>> found;
  detail::for_each_linear_extension(p, [&](const std::vector<vertex>& ext) {
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[ext[i]] = i;
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < critical.size(); ++c)
      if (rank[critical[c].second] < rank[critical[c].first]) mask |= std::uint64_t{1} << c;
    found.emplace(mask, ext);
  });
  if (critical.empty()) return {1, realizer{{found.begin()->second}}};
  const auto sets = detail::maximal_masks(found);
  const std::uint64_t universe = critical.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << critical.size()) - 1;
  const auto cover = detail::min_cover(sets, universe, n);
  if (!cover) throw structural_error("exact_dimension: no realizer found");
  realizer r;
  for (auto i : *cover) r.orders.push_back(sets[i].second);
  return {cover->size(), std::move(r)};
}

} // namespace boxlab

#endif // BOXLAB_ORACLE_HPP
