#include <gtest/gtest.h>

#include <random>

#include "cblock/containment.hpp"
#include "cblock/errors.hpp"
#include "graph_gen.hpp"
#include "oracles.hpp"

namespace cblock {
namespace {

const Relation kAll[] = {Relation::Subgraph, Relation::InducedSubgraph, Relation::Minor, Relation::TopologicalMinor};

TEST(Contains, TriangleInC4) {
  EXPECT_FALSE(contains(Graph::cycle(4), Graph::complete(3), Relation::Subgraph).has_value());
  const auto occ = contains(Graph::cycle(4), Graph::complete(3), Relation::Minor);
  ASSERT_TRUE(occ.has_value());
  EXPECT_TRUE(is_valid_occurrence(Graph::cycle(4), Graph::complete(3), Relation::Minor, *occ));
  EXPECT_EQ(occurrence_vertices(*occ).size(), 4U);
}

TEST(Contains, TopologicalModelPaths) {
  const Graph g = Graph::cycle(6);
  const auto occ = contains(g, Graph::complete(3), Relation::TopologicalMinor);
  ASSERT_TRUE(occ.has_value());
  const auto& model = std::get<TopologicalModel>(*occ);
  EXPECT_EQ(model.branch.size(), 3U);
  EXPECT_EQ(model.paths.size(), 3U);
  EXPECT_TRUE(is_valid_occurrence(g, Graph::complete(3), Relation::TopologicalMinor, *occ));
}

TEST(Contains, DisconnectedPatternRejectedForMinors) {
  const Graph two = disjoint_union(Graph::path(2), Graph::path(2));
  EXPECT_THROW(contains(Graph::cycle(6), two, Relation::Minor), DomainError);
  EXPECT_TRUE(contains(Graph::cycle(6), two, Relation::Subgraph).has_value());
}

TEST(Contains, MatchesOracleOnSmallGraphs) {
  const std::vector<Graph> patterns{Graph::complete(3), Graph::path(3), Graph::path(4), Graph::star(3),
                                    Graph::cycle(4), Graph::complete(4)};
  for (const Graph& g : testing::all_graphs_up_to(6)) {
    for (const Graph& h : patterns) {
      for (Relation rel : kAll) {
        const auto occ = contains(g, h, rel);
        ASSERT_EQ(occ.has_value(), testing::oracle_contains(g, h, rel))
            << "relation " << static_cast<int>(rel) << " n=" << g.order() << " m=" << g.size();
        if (occ) {
          EXPECT_TRUE(is_valid_occurrence(g, h, rel, *occ));
        }
      }
    }
  }
}

TEST(Contains, MinorOnRandomSevenVertexGraphs) {
  std::mt19937_64 rng(41);
  const std::vector<Graph> patterns{Graph::complete(4), Graph::cycle(5), Graph::complete_bipartite(2, 3)};
  for (int round = 0; round < 60; ++round) {
    const Graph g = testing::random_graph(7, 0.45, rng);
    for (const Graph& h : patterns) {
      EXPECT_EQ(contains(g, h, Relation::Minor).has_value(), testing::oracle_contains(g, h, Relation::Minor));
    }
  }
}

TEST(ForEachEmbedding, CountsTrianglesInK4) {
  int count = 0;
  for_each_embedding(Graph::complete(4), Graph::complete(3), Relation::Subgraph, [&](const std::vector<Vertex>&) {
    ++count;
    return false;
  });
  EXPECT_EQ(count, 24);
}

}  // namespace
}  // namespace cblock
