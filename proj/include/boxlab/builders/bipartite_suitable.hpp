#ifndef BOXLAB_BUILDERS_BIPARTITE_SUITABLE_HPP
#define BOXLAB_BUILDERS_BIPARTITE_SUITABLE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "boxlab/builders/span_gadget.hpp"
#include "boxlab/certificate.hpp"
#include "boxlab/formulas.hpp"
#include "boxlab/lll.hpp"
#include "boxlab/suitable.hpp"

namespace boxlab {

struct bipartite_params {
  std::uint64_t d = 0, delta = 0, r = 0, l = 0, t = 0, h = 0, p_bound = 0, target = 0;

  static bipartite_params from(std::uint64_t d, std::uint64_t delta) {
    bipartite_params p;
    p.d = d;
    p.delta = delta;
    p.r = formula::bip_r(d);
    p.l = formula::bip_l(d, p.r);
    p.t = formula::bip_t(d, delta);
    p.h = formula::bip_h(p.r, delta);
    p.p_bound = formula::suitable_size(p.h, p.r + 1);
    p.target = formula::bip_target(p.t, p.l, p.p_bound);
    return p;
  }

  json to_json() const {
    return {{"d", d}, {"Delta", delta}, {"r", r}, {"l", l}, {"t", t}, {"h", h}, {"p_bound", p_bound}};
  }
};

namespace detail {

// Greedy proper colouring in order of decreasing degree (lowest id on ties).
inline std::vector<std::uint32_t> greedy_colouring(const std::vector<std::vector<std::uint32_t>>& adj) {
  const std::size_t m = adj.size();
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return adj[x].size() > adj[y].size(); });
  constexpr std::uint32_t none = ~0U;
  std::vector<std::uint32_t> colour(m, none);
  std::vector<char> taken;
  for (auto x : order) {
    taken.assign(adj[x].size() + 1, 0);
    for (auto y : adj[x])
      if (colour[y] != none && colour[y] < taken.size()) taken[colour[y]] = 1;
    std::uint32_t c = 0;
    while (taken[c]) ++c;
    colour[x] = c;
  }
  return colour;
}

} // namespace detail

// Representation of G<A,B> (cliques added on A and on B). A-vertices have at
// most d neighbours in B and B-vertices at most Delta in A, Delta >= d >= 2.
inline certificate bipartite_suitable_rep(const graph& g, std::span<const vertex> a, std::span<const vertex> b, std::uint64_t d,
                                          std::uint64_t delta, std::uint64_t seed) {
  const std::size_t n = g.order();
  const auto in_a = vertex_mask(n, a, "bipartite_suitable A");
  const auto in_b = vertex_mask(n, b, "bipartite_suitable B");
  if (in_a.intersects(in_b)) throw structural_error("bipartite_suitable_rep: A and B overlap");
  if (d < 2 || delta < d) throw parameter_error("bipartite_suitable_rep: need Delta >= d >= 2");
  for (vertex v : a)
    if (degree_into(g, v, in_b) > d) throw parameter_error("bipartite_suitable_rep: A-vertex " + std::to_string(v) + " exceeds degree d");
  for (vertex w : b)
    if (degree_into(g, w, in_a) > delta)
      throw parameter_error("bipartite_suitable_rep: B-vertex " + std::to_string(w) + " exceeds degree Delta");

  const auto p = bipartite_params::from(d, delta);
  certificate c;
  c.construction = "bipartite_suitable";
  c.seed = seed;
  c.params = p.to_json();
  c.target_d = p.target;
  c.boxes = box_representation(n);

  seed_sequence seeds(seed);
  colouring_options opt;
  opt.d_bound = static_cast<std::uint32_t>(d);
  opt.delta_bound = static_cast<std::uint32_t>(delta);
  const auto fam = family_colourings(g, a, b, static_cast<std::uint32_t>(p.r), static_cast<std::uint32_t>(p.l),
                                     static_cast<std::uint32_t>(p.t), seeds.next(), opt);

  std::vector<std::uint32_t> local(n, 0);
  std::uint64_t blocks = 0, p_max = 0;
  for (std::uint32_t j = 0; j < p.t; ++j) {
    std::vector<vertex> aj;
    for (vertex v : a)
      if (fam.assignment[v] == j) aj.push_back(v);
    if (aj.empty()) continue;
    std::map<std::uint32_t, std::vector<vertex>> by_colour;
    for (vertex w : b) by_colour[fam.colours[j][w]].push_back(w);
    for (auto& [alpha, bja] : by_colour) {
      std::sort(bja.begin(), bja.end());
      bool any_nonedge = false;
      for (vertex v : aj) {
        std::size_t adjacent = 0;
        for (vertex w : bja) adjacent += g.adjacent(v, w) ? 1 : 0;
        if (adjacent < bja.size()) {
          any_nonedge = true;
          break;
        }
      }
      if (!any_nonedge) continue;
      ++blocks;

      // Conflict graph on B_{j,alpha}: two vertices sharing an A_j-neighbour.
      for (std::uint32_t i = 0; i < bja.size(); ++i) local[bja[i]] = i;
      dyn_bitset in_block(n);
      for (vertex w : bja) in_block.set(w);
      std::vector<std::vector<std::uint32_t>> h_adj(bja.size());
      for (vertex v : aj) {
        std::vector<std::uint32_t> nb;
        for (vertex w : g.neighbours(v))
          if (in_block.test(w)) nb.push_back(local[w]);
        for (std::size_t x = 0; x < nb.size(); ++x)
          for (std::size_t y = x + 1; y < nb.size(); ++y) {
            h_adj[nb[x]].push_back(nb[y]);
            h_adj[nb[y]].push_back(nb[x]);
          }
      }
      for (auto& list : h_adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
      }
      const auto colour = detail::greedy_colouring(h_adj);
      const std::uint32_t h_used = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
      if (h_used > p.h) throw structural_error("bipartite_suitable_rep: conflict colouring exceeded r*Delta+1 colours");
      std::vector<std::vector<vertex>> classes(h_used);
      for (std::uint32_t i = 0; i < bja.size(); ++i) classes[colour[i]].push_back(bja[i]);

      std::vector<std::vector<vertex>> perms;
      const std::uint64_t block_seed = seeds.next();
      if (h_used < 2) perms.push_back({0});
      else perms = build_suitable(h_used, static_cast<std::uint32_t>(p.r + 1), block_seed).perms;
      p_max = std::max<std::uint64_t>(p_max, perms.size());

      for (const auto& pi : perms) {
        std::vector<vertex> fwd, rev;
        for (vertex q : pi) {
          fwd.insert(fwd.end(), classes[q].begin(), classes[q].end());
          rev.insert(rev.end(), classes[q].rbegin(), classes[q].rend());
        }
        const bool same = fwd == rev;
        c.boxes.append(span_gadget(spans_from_order(g, aj, std::move(fwd)), n));
        if (!same) c.boxes.append(span_gadget(spans_from_order(g, aj, std::move(rev)), n));
      }
    }
  }
  ensure_nonzero_dims(c.boxes);

  json colourings = json::array();
  for (std::uint32_t j = 0; j < p.t; ++j) {
    json row = json::array();
    for (vertex w : b) row.push_back(fam.colours[j][w]);
    colourings.push_back(std::move(row));
  }
  json assignment = json::array();
  for (vertex v : a) assignment.push_back(fam.assignment[v]);
  c.witness = {{"A", std::vector<vertex>(a.begin(), a.end())},
               {"B", std::vector<vertex>(b.begin(), b.end())},
               {"colourings", std::move(colourings)},
               {"assignment", std::move(assignment)},
               {"blocks", blocks},
               {"p_max", p_max}};
  return c;
}

} // namespace boxlab

#endif // BOXLAB_BUILDERS_BIPARTITE_SUITABLE_HPP
