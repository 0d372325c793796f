#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cblock/errors.hpp"
#include "cblock/graph.hpp"
#include "cblock/graph_io.hpp"
#include "graph_gen.hpp"
#include "oracles.hpp"

namespace cblock {
namespace {

using testing::MaskGraph;

TEST(Graph, ConstructionRejectsBadEdges) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), DomainError);
  EXPECT_THROW(g.add_edge(2, 2), DomainError);
  EXPECT_THROW(g.add_edge(0, 3), DomainError);
  EXPECT_FALSE(g.add_edge_if_absent(0, 1));
  EXPECT_TRUE(g.add_edge_if_absent(1, 2));
  EXPECT_EQ(g.size(), 2U);
}

TEST(Graph, NamedFamilies) {
  EXPECT_EQ(Graph::complete(5).size(), 10U);
  EXPECT_EQ(Graph::cycle(6).size(), 6U);
  EXPECT_EQ(Graph::path(4).size(), 3U);
  EXPECT_EQ(Graph::star(3).order(), 4);
  EXPECT_EQ(Graph::complete_bipartite(3, 3).size(), 9U);
}

TEST(Graph, EdgesAreSortedAndNormalized) {
  const Graph g(4, std::vector<Edge>{{2, 3}, {0, 1}, make_edge(2, 0)});
  const EdgeSet want{{0, 1}, {0, 2}, {2, 3}};
  EXPECT_EQ(g.edges(), want);
}

TEST(Graph, EdgesByDegreePrefersHighDegree) {
  const EdgeSet order = edges_by_degree(Graph::path(4));
  ASSERT_EQ(order.size(), 3U);
  EXPECT_EQ(order[0], (Edge{1, 2}));
  EXPECT_EQ(order[1], (Edge{0, 1}));
  EXPECT_EQ(order[2], (Edge{2, 3}));
}

TEST(Contract, C4SingleEdgeGivesTriangle) {
  const ContractionResult r = contract(Graph::cycle(4), Edge{0, 1});
  EXPECT_EQ(r.quotient.order(), 3);
  EXPECT_EQ(r.quotient.size(), 3U);
  EXPECT_EQ(r.vmap, (std::vector<Vertex>{0, 0, 1, 2}));
}

TEST(Contract, RejectsNonEdge) {
  EXPECT_THROW(contract(Graph::path(4), Edge{0, 2}), DomainError);
}

TEST(Contract, MatchesLabelPropagationOracle) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 300; ++round) {
    const Graph g = testing::random_graph(2 + static_cast<int>(rng() % 8), 0.45, rng);
    EdgeSet f;
    for (const Edge& e : g.edges()) {
      if (rng() % 3 == 0) f.push_back(e);
    }
    const ContractionResult got = contract(g, f);
    const auto want = testing::oracle_contract(MaskGraph::from(g), f);
    EXPECT_EQ(got.vmap, want.vmap);
    EXPECT_EQ(got.quotient, want.graph.to_graph());
  }
}

TEST(Contract, OrderIndependent) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const Graph g = testing::random_connected_graph(6, 0.5, rng);
    EdgeSet f = g.edges();
    f.resize(std::min<std::size_t>(f.size(), 3));
    const Graph once = contract(g, f).quotient;
    EdgeSet reversed(f.rbegin(), f.rend());
    EXPECT_EQ(contract(g, reversed).quotient, once);
  }
}

TEST(Graph, BipartitionReportsOddCycle) {
  const auto r = bipartition(Graph::cycle(5));
  ASSERT_TRUE(std::holds_alternative<OddCycle>(r));
  EXPECT_EQ(std::get<OddCycle>(r).vertices.size(), 5U);
  EXPECT_TRUE(is_bipartite(Graph::cycle(6)));
  EXPECT_EQ(shortest_odd_cycle(Graph::complete(4))->size(), 3U);
  EXPECT_FALSE(shortest_cycle(Graph::path(5)).has_value());
}

TEST(Graph, ComponentsAndStars) {
  const Graph g = disjoint_union(Graph::star(3), Graph::path(2));
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_TRUE(is_star(induced_subgraph(g, comps[0]).graph));
  EXPECT_THROW(is_star(g), DomainError);
  EXPECT_FALSE(is_star(Graph::path(4)));
}

TEST(Graph, Subdivide) {
  const Graph s = subdivide(Graph::complete(3));
  EXPECT_EQ(s.order(), 6);
  EXPECT_EQ(s.size(), 6U);
  EXPECT_TRUE(testing::isomorphic(s, Graph::cycle(6)));
}

TEST(GraphIo, RoundTrip) {
  const Graph g = Graph::complete_bipartite(2, 3);
  EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  EXPECT_EQ(parse_graph("# comment\n3 2\n0 1\n1 2\n"), Graph::path(3));
}

TEST(GraphIo, RejectsMalformedText) {
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 0\n"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_graph("2 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse_graph("x"), ParseError);
}

}  // namespace
}  // namespace cblock
