#include <gtest/gtest.h>

#include <random>

#include "cblock/bipartite_contraction.hpp"
#include "cblock/errors.hpp"
#include "graph_gen.hpp"
#include "oracles.hpp"

namespace cblock {
namespace {

TEST(Coloring, P4Split) {
  const Graph g = Graph::path(4);
  const TwoColoring phi({Color::One, Color::One, Color::Two, Color::Two});
  EXPECT_EQ(coloring_cost(g, phi), 2);
  const EdgeSet f = coloring_to_contraction(g, phi);
  EXPECT_EQ(f, (EdgeSet{{0, 1}, {2, 3}}));
  const Graph q = contract(g, f).quotient;
  EXPECT_EQ(q, Graph::path(2));
}

TEST(Coloring, FromContraction) {
  const EdgeSet one{{0, 1}};
  EXPECT_LE(coloring_cost(Graph::complete(3), contraction_to_coloring(Graph::complete(3), one)), 1);
  EXPECT_LE(coloring_cost(Graph::cycle(5), contraction_to_coloring(Graph::cycle(5), one)), 1);
  EXPECT_THROW(contraction_to_coloring(Graph::complete(4), one), DomainError);
}

TEST(Coloring, RoundTripOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    const Graph g = testing::random_graph(2 + static_cast<int>(rng() % 8), 0.5, rng);
    std::vector<Color> colors;
    for (int v = 0; v < g.order(); ++v) colors.push_back(rng() % 2 ? Color::One : Color::Two);
    const TwoColoring phi(colors);
    const EdgeSet f = coloring_to_contraction(g, phi);
    EXPECT_EQ(static_cast<int>(f.size()), coloring_cost(g, phi));
    EXPECT_TRUE(is_bipartite(contract(g, f).quotient));
    EXPECT_LE(coloring_cost(g, contraction_to_coloring(g, f)), static_cast<int>(f.size()));
  }
}

TEST(BcDecide, KnownValues) {
  ASSERT_TRUE(bc_decide(Graph::complete(3), 1).has_value());
  EXPECT_EQ(bc_decide(Graph::complete(3), 1)->size(), 1U);
  EXPECT_FALSE(bc_decide(Graph::complete(4), 1).has_value());
  ASSERT_TRUE(bc_decide(Graph::complete(4), 2).has_value());
  EXPECT_EQ(bc_decide(Graph::complete(4), 2)->size(), 2U);
  EXPECT_EQ(bc_decide(Graph::cycle(6), 0)->size(), 0U);
  EXPECT_EQ(bipartite_contraction_number(Graph::cycle(5)), 1);
}

TEST(BcDecide, StrategiesAgreeWithColoringOracle) {
  for (const Graph& g : testing::all_graphs_up_to(6)) {
    const int want = testing::oracle_min_coloring_cost(g);
    EXPECT_EQ(bipartite_contraction_number(g), want);
    for (int k = 0; k <= 2; ++k) {
      const auto a = bc_decide(g, k, BcStrategy::Branching);
      const auto b = bc_decide(g, k, BcStrategy::Enumeration);
      EXPECT_EQ(a.has_value(), want <= k);
      EXPECT_EQ(b.has_value(), want <= k);
      if (a) {
        EXPECT_EQ(static_cast<int>(a->size()), want);
        EXPECT_TRUE(is_bipartite(contract(g, *a).quotient));
      }
    }
  }
}

}  // namespace
}  // namespace cblock
