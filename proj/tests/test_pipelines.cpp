#include <gtest/gtest.h>

#include "support.hpp"

using namespace boxlab;
using namespace boxlab::testing;

namespace {

std::vector<vertex> range(vertex lo, vertex hi) {
  std::vector<vertex> out(hi - lo);
  std::iota(out.begin(), out.end(), lo);
  return out;
}

// A rows x cols grid followed by `extra` independent vertices, vertex
// rows*cols + i joined to grid vertices chosen at random (1..3 of them).
graph grid_with_pendants(std::size_t rows, std::size_t cols, std::size_t extra, std::uint64_t seed) {
  rng r(seed);
  const std::size_t base = rows * cols;
  std::vector<edge> es = gen::grid(rows, cols).edges();
  for (std::size_t i = 0; i < extra; ++i) {
    std::set<vertex> nb;
    const std::size_t want = 1 + r.below(3);
    while (nb.size() < want) nb.insert(static_cast<vertex>(r.below(base)));
    for (vertex w : nb) es.emplace_back(w, static_cast<vertex>(base + i));
  }
  return graph::from_edges(base + extra, es);
}

} // namespace

TEST(Degree, CompleteGraphShortCircuit) {
  const auto c = bounded_degree_rep(gen::complete(30), 1);
  EXPECT_EQ(c.d(), 1U);
  EXPECT_EQ(bound_formula(c.construction, c.params), 1U);
}

TEST(Degree, MaxDegreeTwo) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const graph g = gen::gnp(40, 0.08, 2, s);
    const auto c = bounded_degree_rep(g, s);
    EXPECT_EQ(naive_violations(g, c.boxes), 0U);
  }
  for (std::size_t n = 3; n <= 7; ++n) {
    EXPECT_LE(exact_boxicity(gen::cycle(n)).value, 2U);
    EXPECT_LE(exact_boxicity(gen::path(n)).value, 2U);
  }
}

TEST(Degree, AutoParametersAndPieceTargets) {
  const graph g = gen::degree_capped(500, 60, 4);
  const auto c = bounded_degree_rep(g, 7);
  EXPECT_TRUE(verify_box_rep(g, c.boxes).ok());
  const auto delta = g.max_degree();
  const auto ap = auto_params_partition(delta);
  EXPECT_EQ(c.params["Delta"].get<std::size_t>(), delta);
  EXPECT_EQ(c.params["d"].get<std::uint32_t>(), ap.d);
  EXPECT_EQ(c.params["k"].get<std::uint32_t>(), ap.k);
  EXPECT_EQ(bound_formula(c.construction, c.params), *c.target_d);
}

TEST(Degree, ForcedPartitionUsesBipartitePieces) {
  const graph g = gen::degree_capped(300, 30, 5);
  degree_options opt{partition_params{15, 4, false}, true};
  const auto c = bounded_degree_rep(g, 8, opt);
  EXPECT_EQ(naive_violations(g, c.boxes), 0U);
  ASSERT_TRUE(c.params.contains("bipartite"));
  const auto& bp = c.params["bipartite"];
  const auto d = bp["d"].get<std::uint64_t>(), delta = bp["Delta"].get<std::uint64_t>();
  EXPECT_EQ(bp["r"].get<std::uint64_t>(), ref_r(d));
  EXPECT_EQ(bp["t"].get<std::uint64_t>(), ref_t(d, delta));
  EXPECT_EQ(bp["l"].get<std::uint64_t>(), ref_l(d, ref_r(d)));
  // Partition loads recorded in the witness.
  partition p{4, c.witness["partition"].get<std::vector<std::uint32_t>>()};
  EXPECT_TRUE(check_partition(g, p, 15));
  EXPECT_TRUE(c.params["unsafe"].get<bool>());
}

TEST(Degree, Deterministic) {
  const graph g = gen::degree_capped(200, 25, 6);
  EXPECT_EQ(to_json(bounded_degree_rep(g, 3)).dump(), to_json(bounded_degree_rep(g, 3)).dump());
}

TEST(Genus, EmptyCutExtendsInput) {
  const graph g = gen::grid(4, 4);
  const auto rep = layered_tw_rep(g, gen::grid_decomposition(4, 4), gen::grid_layers(4, 4)).boxes;
  const auto c = genus_rep(g, 0, {}, rep, 1);
  EXPECT_EQ(c.d(), rep.dims());
  EXPECT_EQ(c.boxes, rep);
}

TEST(Genus, DeletionBranchArithmetic) {
  const graph g = gen::gnp(30, 0.3, 0, 2);
  const std::vector<vertex> x{3, 11, 17};
  const auto rep = pair_elimination_rep(g.induced(complement_vertices(30, x))).boxes;
  const auto c = genus_rep(g, 1, x, rep, 2);
  EXPECT_EQ(c.params["branch"], "deletion");
  EXPECT_EQ(c.d(), rep.dims() + 3);
  EXPECT_EQ(naive_violations(g, c.boxes), 0U);
  EXPECT_EQ(bound_formula("genus", c.params), rep.dims() + 3);
}

TEST(Genus, RejectsInvalidSuppliedRep) {
  const graph g = gen::cycle(6);
  const std::vector<vertex> x{0};
  EXPECT_THROW(genus_rep(g, 1, x, complete_representation(5), 1), structural_error);
  EXPECT_THROW(genus_rep(g, 1, x, complete_representation(6), 1), structural_error);
}

TEST(Genus, SuitableBranchOnGridWithPendants) {
  const graph g = grid_with_pendants(6, 6, 200, 3);
  const auto x = range(36, 236);
  const auto rep = layered_tw_rep(gen::grid(6, 6), gen::grid_decomposition(6, 6), gen::grid_layers(6, 6)).boxes;
  genus_options opt;
  opt.threshold = 100;
  const auto c = genus_rep(g, 4, x, rep, 5, opt);
  EXPECT_EQ(c.params["branch"], "suitable");
  EXPECT_TRUE(verify_box_rep(g, c.boxes).ok());
  EXPECT_EQ(c.params["k"].get<std::uint64_t>(), ref_genus_k(4));
  EXPECT_EQ(bound_formula("genus", c.params), *c.target_d);
  // Classes re-derived from G.
  std::vector<std::size_t> into(g.order(), 0);
  for (vertex v : x)
    for (vertex w : g.neighbours(v)) ++into[w];
  std::vector<vertex> y, z, y0;
  for (vertex v = 0; v < 36; ++v) (into[v] == 0 ? y0 : into[v] <= 2 ? y : z).push_back(v);
  EXPECT_EQ(c.witness["Y"].get<std::vector<vertex>>(), y);
  EXPECT_EQ(c.witness["Z"].get<std::vector<vertex>>(), z);
  EXPECT_EQ(c.witness["Y0"].get<std::vector<vertex>>(), y0);
}

TEST(Genus, SuitableBranchAtDefaultThreshold) {
  const graph g = grid_with_pendants(10, 10, 10000, 7);
  const auto x = range(100, 10100);
  const auto rep = layered_tw_rep(gen::grid(10, 10), gen::grid_decomposition(10, 10), gen::grid_layers(10, 10)).boxes;
  const auto c = genus_rep(g, 200, x, rep, 9);
  EXPECT_EQ(c.params["branch"], "suitable");
  EXPECT_TRUE(verify_box_rep(g, c.boxes).ok());
  const auto classes = classify_by_cut(g, x);
  EXPECT_EQ(c.witness["Z"].get<std::vector<vertex>>(), classes.z);
}

TEST(GenusK, Formula) {
  EXPECT_EQ(formula::genus_k(0), 8U);
  EXPECT_EQ(formula::genus_k(1), 8U);
  for (std::uint64_t g = 2; g < 3000; g += 7) EXPECT_EQ(formula::genus_k(g), ref_genus_k(g));
}

TEST(Layered, PathFromAnEnd) {
  const graph p = gen::path(12);
  tree_decomposition td;
  for (vertex v = 0; v + 1 < 12; ++v) {
    td.bags.push_back({v, v + 1});
    if (v > 0) td.edges.emplace_back(v - 1, v);
  }
  const auto c = layered_tw_rep(p, td, bfs_layers(p));
  EXPECT_EQ(*c.target_d, 10U);
  EXPECT_LE(c.d(), 10U);
  EXPECT_EQ(naive_violations(p, c.boxes), 0U);
}

TEST(Layered, SingleLayer) {
  const graph g = gen::cycle(6);
  const std::vector<std::uint32_t> layer(6, 0);
  const auto c = layered_tw_rep(g, min_degree_decomposition(g), layer);
  EXPECT_EQ(c.d(), 3 * c.params["D_sub"].get<std::size_t>() + 1);
  EXPECT_TRUE(verify_box_rep(g, c.boxes).ok());
}

TEST(Layered, Grid10x10) {
  const auto c = layered_tw_rep(gen::grid(10, 10), gen::grid_decomposition(10, 10), gen::grid_layers(10, 10));
  EXPECT_EQ(c.params["ltw"].get<std::size_t>(), 3U);
  EXPECT_EQ(*c.target_d, 22U);
  EXPECT_TRUE(verify_box_rep(gen::grid(10, 10), c.boxes).ok());
}

TEST(Layered, RejectsBadLayering) {
  const graph p = gen::path(4);
  const std::vector<std::uint32_t> skip{0, 2, 3, 4};
  EXPECT_THROW(layered_tw_rep(p, min_degree_decomposition(p), skip), structural_error);
  const std::vector<std::uint32_t> short_layers{0, 1};
  EXPECT_THROW(layered_tw_rep(p, min_degree_decomposition(p), short_layers), structural_error);
}

TEST(BoundFormula, Examples) {
  EXPECT_EQ(bound_formula("layered_treewidth", json{{"ltw", 3}}), 22U);
  const json degree{{"piece_targets", json::array({json::array({3, 4}), json::array({5, 0})})}};
  EXPECT_EQ(bound_formula("degree", degree), 12U);
  EXPECT_EQ(bound_formula("genus", json{{"branch", "deletion"}, {"d_repGX", 4}, {"X_size", 3}}), 7U);
  EXPECT_THROW(bound_formula("genus", json{{"branch", "deletion"}}), parameter_error);
  EXPECT_THROW(bound_formula("nonsense", json::object()), parameter_error);
}

TEST(Formulas, AgreeWithIndependentRecomputation) {
  for (std::uint64_t d = 2; d < 2000; d = d * 3 / 2 + 1) {
    const auto r = formula::bip_r(d);
    EXPECT_EQ(r, ref_r(d));
    EXPECT_EQ(formula::bip_l(d, r), ref_l(d, r));
    for (std::uint64_t delta : {d, 2 * d, 10 * d}) EXPECT_EQ(formula::bip_t(d, delta), ref_t(d, delta));
  }
  for (std::uint64_t n = 2; n < 100000; n = n * 2 + 1)
    for (std::uint64_t k = 1; k < 12; ++k) {
      EXPECT_EQ(formula::caught_t(n, k), ref_caught_t(n, k));
      EXPECT_EQ(std::max<std::uint64_t>(1, formula::degenerate_target(n, k)), ref_degenerate_target(n, k));
    }
  EXPECT_EQ(formula::ltw_target(3), 22U);
  EXPECT_EQ(formula::pair_elimination_target(7), 3U);
  EXPECT_EQ(formula::pair_elimination_target(1), 1U);
}
