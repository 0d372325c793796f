#include <gtest/gtest.h>

#include <random>

#include "cblock/errors.hpp"
#include "cblock/vertex_cover.hpp"
#include "graph_gen.hpp"
#include "oracles.hpp"

namespace cblock {
namespace {

TEST(VcBranching, KnownValues) {
  EXPECT_EQ(vertex_cover_number(Graph::cycle(5)), 3);
  EXPECT_EQ(vertex_cover_number(Graph::path(4)), 2);
  EXPECT_EQ(vertex_cover_number(Graph::cycle(4)), 2);
  EXPECT_EQ(vertex_cover_number(Graph::complete(4)), 3);
  EXPECT_EQ(vertex_cover_number(Graph(3)), 0);
}

TEST(VcBranching, MatchesOracleOnAllSmallGraphs) {
  for (const Graph& g : testing::all_graphs_up_to(7)) {
    const auto r = vc_branching(g);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->size, testing::oracle_vc(g));
    EXPECT_TRUE(is_vertex_cover(g, r->cover));
    EXPECT_EQ(static_cast<int>(r->cover.size()), r->size);
  }
}

TEST(VcBranching, BudgetSemantics) {
  const Graph g = Graph::cycle(7);
  EXPECT_FALSE(vc_branching(g, 3).has_value());
  ASSERT_TRUE(vc_branching(g, 4).has_value());
  EXPECT_EQ(vc_branching(g, 4)->size, 4);
}

TEST(VcBipartite, MatchesBranching) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const Graph g = testing::random_bipartite_graph(1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 7),
                                                    0.4, rng);
    const CoverResult r = vc_bipartite(g);
    EXPECT_EQ(r.size, testing::oracle_vc(g));
    EXPECT_TRUE(is_vertex_cover(g, r.cover));
    EXPECT_EQ(static_cast<int>(maximum_matching(g).size()), r.size);
  }
}

TEST(VcBipartite, KnownValuesAndErrors) {
  EXPECT_EQ(vc_bipartite(Graph::path(4)).size, 2);
  EXPECT_EQ(vc_bipartite(Graph::cycle(4)).size, 2);
  EXPECT_THROW(vc_bipartite(Graph::cycle(5)), DomainError);
}

TEST(VcModulator, KnownValues) {
  const std::vector<Vertex> b0{0};
  EXPECT_EQ(vc_with_modulator(Graph::cycle(5), b0).size, 3);
  const std::vector<Vertex> b01{0, 1};
  EXPECT_EQ(vc_with_modulator(Graph::complete(4), b01).size, 3);
  const std::vector<Vertex> none;
  EXPECT_THROW(vc_with_modulator(Graph::cycle(5), none), DomainError);
}

TEST(VcModulator, MatchesOracle) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 150; ++round) {
    const Graph g = testing::random_graph(3 + static_cast<int>(rng() % 8), 0.4, rng);
    VertexSet modulator;
    for (Vertex v = 0; v < g.order() && !is_bipartite(remove_vertices(g, modulator).graph); ++v) {
      modulator.push_back(v);
    }
    const CoverResult r = vc_with_modulator(g, modulator);
    EXPECT_EQ(r.size, testing::oracle_vc(g));
    EXPECT_TRUE(is_vertex_cover(g, r.cover));
  }
}

TEST(VcAfterContraction, KnownValues) {
  EXPECT_EQ(vc_after_contraction(Graph::path(4), Edge{1, 2}), 1);
  for (const Edge& e : Graph::cycle(4).edges()) EXPECT_EQ(vc_after_contraction(Graph::cycle(4), e), 2);
}

TEST(VcAfterContraction, MatchesOracleOnBipartiteGraphs) {
  for (const Graph& g : testing::all_graphs_up_to(7)) {
    if (!is_bipartite(g)) continue;
    for (const Edge& e : g.edges()) {
      EXPECT_EQ(vc_after_contraction(g, e), testing::oracle_vc(contract(g, e).quotient));
    }
  }
}

}  // namespace
}  // namespace cblock
