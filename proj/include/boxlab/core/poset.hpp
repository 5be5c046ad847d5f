#ifndef BOXLAB_CORE_POSET_HPP
#define BOXLAB_CORE_POSET_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "boxlab/core/bitset.hpp"
#include "boxlab/core/error.hpp"
#include "boxlab/core/graph.hpp"

namespace boxlab {

// Strict partial order on 0..n-1, stored transitively closed.
class poset {
public:
  poset() = default;
  explicit poset(std::size_t n) : up_(n, dyn_bitset(n)) {}

  // Builds the transitive closure of `relations` (pairs u < v). A cycle, which
  // includes a reflexive pair, raises structural_error.
  static poset from_relations(std::size_t n, std::span<const edge> relations) {
    poset p(n);
    for (auto [u, v] : relations) {
      if (u >= n || v >= n)
        throw structural_error("relation out of range: " + std::to_string(u) + " < " + std::to_string(v));
      if (u == v) throw structural_error("reflexive relation at " + std::to_string(u));
      p.up_[u].set(v);
    }
    // Warshall on bitset rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
    for (std::size_t i = 0; i < n; ++i)
      if (p.up_[i].test(i)) throw structural_error("relation contains a cycle through " + std::to_string(i));
    return p;
  }

  std::size_t size() const noexcept { return up_.size(); }

  bool less(vertex u, vertex v) const noexcept { return up_[u].test(v); }
  bool comparable(vertex u, vertex v) const noexcept { return less(u, v) || less(v, u); }

  // Elements strictly above v.
  const dyn_bitset& above(vertex v) const noexcept { return up_[v]; }

  std::vector<edge> relations() const {
    std::vector<edge> out;
    for (vertex u = 0; u < size(); ++u) up_[u].for_each([&](std::size_t v) { out.emplace_back(u, static_cast<vertex>(v)); });
    return out;
  }

  bool operator==(const poset&) const = default;

private:
  std::vector<dyn_bitset> up_;
};

// A list of total orders; order i lists the elements from first to last.
struct realizer {
  std::vector<std::vector<vertex>> orders;

  std::size_t size() const noexcept { return orders.size(); }
};

// rank[v] of each element within `order` (0-based), validating it is a
// permutation of 0..n-1.
inline std::vector<std::size_t> order_ranks(std::span<const vertex> order, std::size_t n) {
  if (order.size() != n)
    throw structural_error("order has " + std::to_string(order.size()) + " elements, expected " + std::to_string(n));
  std::vector<std::size_t> rank(n, n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const vertex v = order[i];
    if (v >= n || rank[v] != n) throw structural_error("order is not a permutation");
    rank[v] = i;
  }
  return rank;
}

} // namespace boxlab

#endif // BOXLAB_CORE_POSET_HPP
