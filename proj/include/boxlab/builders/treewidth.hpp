#ifndef BOXLAB_BUILDERS_TREEWIDTH_HPP
#define BOXLAB_BUILDERS_TREEWIDTH_HPP

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "boxlab/builders/cover.hpp"
#include "boxlab/certificate.hpp"

namespace boxlab {

// Bags indexed by tree node 0..bags.size()-1; `edges` are the tree edges.
// Bags may be empty (restrictions of a decomposition produce such bags).
struct tree_decomposition {
  std::vector<std::vector<vertex>> bags;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::size_t width() const noexcept {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return w == 0 ? 0 : w - 1;
  }
};

// Throws structural_error naming the first failed condition.
inline void validate_decomposition(const graph& g, const tree_decomposition& td) {
  const std::size_t n = g.order(), nodes = td.bags.size();
  if (nodes == 0) {
    if (n == 0) return;
    throw structural_error("tree decomposition has no bags");
  }
  if (td.edges.size() != nodes - 1)
    throw structural_error("tree decomposition: " + std::to_string(td.edges.size()) + " tree edges for " + std::to_string(nodes) +
                           " nodes");
  std::vector<std::vector<std::uint32_t>> adj(nodes);
  for (auto [x, y] : td.edges) {
    if (x >= nodes || y >= nodes || x == y) throw structural_error("tree decomposition: bad tree edge");
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<char> seen(nodes, 0);
  std::deque<std::uint32_t> q{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    const auto x = q.front();
    q.pop_front();
    for (auto y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        q.push_back(y);
      }
  }
  if (reached != nodes) throw structural_error("tree decomposition: tree is not connected");

  std::vector<dyn_bitset> member(nodes, dyn_bitset(n));
  std::vector<std::size_t> occurrences(n, 0);
  for (std::size_t x = 0; x < nodes; ++x)
    for (vertex v : td.bags[x]) {
      if (v >= n) throw structural_error("tree decomposition: bag " + std::to_string(x) + " holds out-of-range vertex " + std::to_string(v));
      if (member[x].test(v)) throw structural_error("tree decomposition: bag " + std::to_string(x) + " repeats vertex " + std::to_string(v));
      member[x].set(v);
      ++occurrences[v];
    }
  // The nodes holding v induce a forest; it is a tree iff it has one edge
  // fewer than nodes.
  std::vector<std::size_t> links(n, 0);
  for (auto [x, y] : td.edges) {
    dyn_bitset both = member[x];
    both &= member[y];
    both.for_each([&](std::size_t v) { ++links[v]; });
  }
  for (vertex v = 0; v < n; ++v) {
    if (occurrences[v] == 0) throw structural_error("tree decomposition: vertex " + std::to_string(v) + " is in no bag");
    if (links[v] + 1 != occurrences[v])
      throw structural_error("tree decomposition: bags holding vertex " + std::to_string(v) + " are not connected");
  }
  std::vector<dyn_bitset> covered(n, dyn_bitset(n));
  for (const auto& m : member)
    m.for_each([&](std::size_t v) { covered[v] |= m; });
  for (auto [u, v] : g.edges())
    if (!covered[u].test(v)) throw structural_error("tree decomposition: edge " + std::to_string(u) + " " + std::to_string(v) + " in no bag");
}

namespace detail {

// Vertices in order of first appearance along a preorder walk of the tree.
inline std::vector<vertex> first_appearance(const tree_decomposition& td, std::size_t n, std::uint32_t root) {
  std::vector<std::vector<std::uint32_t>> adj(td.bags.size());
  for (auto [x, y] : td.edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<char> seen_node(td.bags.size(), 0), seen(n, 0);
  std::vector<vertex> out;
  std::vector<std::uint32_t> stack{root};
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    if (seen_node[x]) continue;
    seen_node[x] = 1;
    std::vector<vertex> bag = td.bags[x];
    std::sort(bag.begin(), bag.end());
    for (vertex v : bag)
      if (!seen[v]) {
        seen[v] = 1;
        out.push_back(v);
      }
    for (auto it = adj[x].rbegin(); it != adj[x].rend(); ++it)
      if (!seen_node[*it]) stack.push_back(*it);
  }
  for (vertex v = 0; v < n; ++v)
    if (!seen[v]) out.push_back(v);
  return out;
}

inline std::vector<vertex> bfs_order(const graph& g, vertex start) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<vertex> out;
  out.reserve(n);
  for (vertex s0 = 0; s0 < n; ++s0) {
    const vertex s = static_cast<vertex>((start + s0) % n);
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t head = out.size();
    out.push_back(s);
    while (head < out.size()) {
      const vertex v = out[head++];
      for (vertex w : g.neighbours(v))
        if (!seen[w]) {
          seen[w] = 1;
          out.push_back(w);
        }
    }
  }
  return out;
}

} // namespace detail

inline constexpr std::size_t treewidth_tree_roots = 16;
inline constexpr std::size_t treewidth_graph_roots = 8;

// Greedy cover of the non-edges by interval supergraphs. Candidates are the
// orderings [rank(v), max rank N[v]] for first-appearance orders of the
// decomposition from several roots, graph BFS orders, their reversals, and
// the pair layout of the busiest open pair; each round takes the candidate
// separating the most open non-edges.
inline certificate treewidth_rep(const graph& g, const tree_decomposition& td) {
  validate_decomposition(g, td);
  const std::size_t n = g.order();
  const std::size_t w = td.width();
  certificate c;
  c.construction = "treewidth";
  c.params = {{"n", n}, {"width", w}};
  c.target_d = w + 2;
  if (g.is_complete()) {
    c.boxes = complete_representation(n);
    c.witness = {{"picks", json::array()}};
    return c;
  }

  std::vector<std::vector<vertex>> orders;
  const std::size_t nodes = td.bags.size();
  const std::size_t tree_roots = std::min(nodes, treewidth_tree_roots);
  for (std::size_t i = 0; i < tree_roots; ++i)
    orders.push_back(detail::first_appearance(td, n, static_cast<std::uint32_t>(i * nodes / tree_roots)));
  const std::size_t graph_roots = std::min(n, treewidth_graph_roots);
  for (std::size_t i = 0; i < graph_roots; ++i) orders.push_back(detail::bfs_order(g, static_cast<vertex>(i * n / graph_roots)));
  const std::size_t base = orders.size();
  for (std::size_t i = 0; i < base; ++i) orders.emplace_back(orders[i].rbegin(), orders[i].rend());

  std::vector<box_representation::column> cand;
  for (const auto& o : orders) cand.push_back(ordering_column(g, o));
  std::vector<char> used(cand.size(), 0);

  nonedge_cover cover(g);
  c.boxes = box_representation(n);
  json picks = json::array();
  while (!cover.done()) {
    std::size_t best = cand.size(), best_gain = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (used[i]) continue;
      const std::size_t gain = cover.gain(cand[i]);
      if (gain == 0) used[i] = 1;
      else if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    const vertex a = cover.busiest(), b = cover.busiest_partner(a);
    auto pair_col = pair_layout_column(g, std::min(a, b), std::max(a, b));
    if (best == cand.size() || cover.gain(pair_col) > best_gain) {
      cover.apply(pair_col);
      c.boxes.add_dim(std::move(pair_col));
      picks.push_back(json::array({std::min(a, b), std::max(a, b)}));
    } else {
      used[best] = 1;
      cover.apply(cand[best]);
      c.boxes.add_dim(cand[best]);
      picks.push_back(best);
    }
  }
  c.witness = {{"picks", std::move(picks)}};
  return c;
}

// Heuristic decomposition from a minimum-degree elimination with fill-in.
// Valid for every graph; its width is not minimal in general.
inline tree_decomposition min_degree_decomposition(const graph& g) {
  const std::size_t n = g.order();
  tree_decomposition td;
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  std::vector<std::set<vertex>> fill(n);
  for (vertex v = 0; v < n; ++v) fill[v].insert(g.neighbours(v).begin(), g.neighbours(v).end());
  std::vector<char> gone(n, 0);
  std::vector<std::size_t> step(n, 0);
  std::vector<vertex> order;
  for (std::size_t i = 0; i < n; ++i) {
    vertex best = 0;
    std::size_t best_deg = n + 1;
    for (vertex v = 0; v < n; ++v)
      if (!gone[v] && fill[v].size() < best_deg) {
        best = v;
        best_deg = fill[v].size();
      }
    gone[best] = 1;
    step[best] = i;
    order.push_back(best);
    std::vector<vertex> bag{best};
    bag.insert(bag.end(), fill[best].begin(), fill[best].end());
    for (vertex u : fill[best]) {
      fill[u].erase(best);
      for (vertex w : fill[best])
        if (w != u) fill[u].insert(w);
    }
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(std::move(bag));
  }
  // Bag i hangs below the bag of its earliest-eliminated later neighbour;
  // roots of separate components are chained.
  std::int64_t last_root = -1;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t parent = n;
    for (vertex u : td.bags[i])
      if (u != order[i]) parent = std::min(parent, step[u]);
    if (parent < n) td.edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(parent));
    else {
      if (last_root >= 0) td.edges.emplace_back(static_cast<std::uint32_t>(last_root), static_cast<std::uint32_t>(i));
      last_root = static_cast<std::int64_t>(i);
    }
  }
  return td;
}

} // namespace boxlab

#endif // BOXLAB_BUILDERS_TREEWIDTH_HPP
