#ifndef BOXLAB_BUILDERS_PAIR_ELIMINATION_HPP
#define BOXLAB_BUILDERS_PAIR_ELIMINATION_HPP

#include <vector>

#include "boxlab/builders/cover.hpp"
#include "boxlab/certificate.hpp"
#include "boxlab/formulas.hpp"

namespace boxlab {

// At most max(1, floor(n/2)) dimensions: take the lexicographically first
// non-adjacent pair among the live vertices, emit its pair layout, retire
// both, repeat until the live vertices form a clique.
inline certificate pair_elimination_rep(const graph& g) {
  const std::size_t n = g.order();
  certificate c;
  c.construction = "pair_elimination";
  c.boxes = box_representation(n);
  std::vector<char> live(n, 1);
  json pairs = json::array();
  for (vertex a = 0; a < n; ++a) {
    if (!live[a]) continue;
    for (vertex b = a + 1; b < n; ++b) {
      if (!live[b] || g.adjacent(a, b)) continue;
      c.boxes.add_dim(pair_layout_column(g, a, b));
      live[a] = live[b] = 0;
      pairs.push_back(json::array({a, b}));
      break;
    }
  }
  ensure_nonzero_dims(c.boxes);
  c.params = {{"n", n}};
  c.target_d = formula::pair_elimination_target(n);
  c.witness = {{"pairs", std::move(pairs)}};
  return c;
}

} // namespace boxlab

#endif // BOXLAB_BUILDERS_PAIR_ELIMINATION_HPP
