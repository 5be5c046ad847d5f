#ifndef BOXLAB_BUILDERS_CAUGHT_PERMUTATION_HPP
#define BOXLAB_BUILDERS_CAUGHT_PERMUTATION_HPP

#include <numeric>
#include <string>
#include <vector>

#include "boxlab/builders/span_gadget.hpp"
#include "boxlab/certificate.hpp"
#include "boxlab/core/random.hpp"
#include "boxlab/formulas.hpp"

namespace boxlab {

// True iff `order` (a permutation of B) catches the non-edge vw: w lies
// strictly between two B-neighbours of v.
inline bool catches(const graph& g, std::span<const vertex> order, vertex v, vertex w) {
  std::size_t lo = order.size(), hi = 0, pw = order.size();
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == w) pw = i;
    if (g.adjacent(v, order[i])) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  return lo < order.size() && pw > lo && pw < hi;
}

// Representation of G<A,B> from t random permutations of B, two dimensions
// each. Only permutations that release a still-caught non-edge are kept.
inline certificate caught_permutation_rep(const graph& g, std::span<const vertex> a, std::span<const vertex> b, std::uint32_t k,
                                          std::uint64_t seed) {
  const std::size_t n = g.order();
  const auto in_a = vertex_mask(n, a, "caught_permutation A");
  const auto in_b = vertex_mask(n, b, "caught_permutation B");
  if (in_a.intersects(in_b)) throw structural_error("caught_permutation_rep: A and B overlap");
  for (vertex v : a)
    if (degree_into(g, v, in_b) > k)
      throw parameter_error("caught_permutation_rep: vertex " + std::to_string(v) + " has more than k=" + std::to_string(k) +
                            " neighbours in B");
  const std::uint64_t size = a.size() + b.size();
  const std::uint64_t t = formula::caught_t(size, k);

  certificate c;
  c.construction = "caught_permutation";
  c.seed = seed;
  c.params = {{"n", size}, {"k", k}, {"t", t}};
  c.target_d = std::max<std::uint64_t>(1, 2 * t);
  c.boxes = box_representation(n);

  // still[v]: B-vertices w with vw a non-edge that every kept permutation catches.
  std::vector<dyn_bitset> still(n, dyn_bitset(n));
  std::size_t total = 0;
  for (vertex v : a) {
    still[v] = in_b;
    for (vertex w : g.neighbours(v)) still[v].reset(w);
    total += still[v].count();
  }
  rng gen(seed);
  const std::uint64_t cap = retry_cap();
  std::vector<std::vector<vertex>> kept;
  std::uint64_t attempt = 0;
  std::vector<std::uint32_t> pos(n);
  while (true) {
    if (++attempt > cap) throw randomized_failure("caught_permutation_rep: some non-edge caught by every permutation", cap);
    kept.clear();
    std::vector<dyn_bitset> open = still;
    std::size_t remaining = total;
    for (std::uint64_t i = 0; i < t && remaining > 0; ++i) {
      std::vector<vertex> sigma(b.begin(), b.end());
      gen.shuffle(sigma);
      for (std::size_t p = 0; p < sigma.size(); ++p) pos[sigma[p]] = static_cast<std::uint32_t>(p);
      std::size_t released = 0;
      for (vertex v : a) {
        if (open[v].none()) continue;
        std::uint32_t lo = ~0U, hi = 0;
        for (vertex w : g.neighbours(v))
          if (in_b.test(w)) {
            lo = std::min(lo, pos[w]);
            hi = std::max(hi, pos[w]);
          }
        std::vector<vertex> freed;
        open[v].for_each([&](std::size_t w) {
          if (lo == ~0U || pos[w] < lo || pos[w] > hi) freed.push_back(static_cast<vertex>(w));
        });
        for (vertex w : freed) open[v].reset(w);
        released += freed.size();
      }
      if (released > 0) {
        remaining -= released;
        kept.push_back(std::move(sigma));
      }
    }
    if (remaining == 0) break;
  }

  json perms = json::array();
  for (const auto& sigma : kept) {
    c.boxes.append(span_gadget(spans_from_order(g, a, sigma), n));
    perms.push_back(sigma);
  }
  ensure_nonzero_dims(c.boxes);
  c.witness = {{"A", std::vector<vertex>(a.begin(), a.end())},
               {"B", std::vector<vertex>(b.begin(), b.end())},
               {"permutations", std::move(perms)},
               {"attempts", attempt}};
  return c;
}

} // namespace boxlab

#endif // BOXLAB_BUILDERS_CAUGHT_PERMUTATION_HPP
