#include <gtest/gtest.h>

#include <random>

#include "cblock/contraction_vc.hpp"
#include "cblock/errors.hpp"
#include "cblock/graph_io.hpp"
#include "cblock/vertex_cover.hpp"
#include "graph_gen.hpp"
#include "oracles.hpp"

namespace cblock {
namespace {

int drop_of(const Graph& g, const EdgeSet& f) {
  return testing::oracle_vc(g) - testing::oracle_vc(contract(g, f).quotient);
}

TEST(ContractionVc1, KnownValues) {
  const Decision p4 = contraction_vc_1(Graph::path(4));
  EXPECT_TRUE(p4.yes);
  ASSERT_TRUE(p4.witness.has_value());
  EXPECT_EQ(*p4.witness, (EdgeSet{{1, 2}}));
  EXPECT_FALSE(contraction_vc_1(Graph::cycle(4)).yes);
  const Decision c5 = contraction_vc_1(Graph::cycle(5));
  EXPECT_TRUE(c5.yes);
  EXPECT_EQ(drop_of(Graph::cycle(5), *c5.witness), 1);
}

TEST(ContractionVc1, MatchesOracle) {
  for (const Graph& g : testing::connected_graphs_up_to(7)) {
    const Decision r = contraction_vc_1(g);
    EXPECT_EQ(r.yes, testing::oracle_min_contract(g, 1, 1).has_value());
    if (r.yes) {
      EXPECT_GE(drop_of(g, *r.witness), 1);
    }
  }
}

TEST(TwoApproxDrop, KnownValues) {
  const std::vector<Vertex> k4{0, 1, 2, 3};
  const DropPlan plan = two_approx_drop(Graph::complete(4), k4, 2);
  EXPECT_LE(plan.edges.size(), 4U);
  EXPECT_LE(testing::oracle_vc(contract(Graph::complete(4), plan.edges).quotient), 1);

  const std::vector<Vertex> k3{0, 1, 2};
  const DropPlan tri = two_approx_drop(Graph::complete(3), k3, 1);
  EXPECT_LE(tri.edges.size(), 2U);
  EXPECT_EQ(drop_of(Graph::complete(3), tri.edges), 1);

  std::vector<Vertex> c7{0, 1, 2, 3, 4, 5, 6};
  const DropPlan seven = two_approx_drop(Graph::cycle(7), c7, 1);
  EXPECT_LE(seven.edges.size(), 2U);
  EXPECT_GE(drop_of(Graph::cycle(7), seven.edges), 1);
}

TEST(TwoApproxDrop, Preconditions) {
  const std::vector<Vertex> part{0, 1};
  EXPECT_THROW(two_approx_drop(Graph::cycle(5), part, 1), DomainError);
  const std::vector<Vertex> all{0, 1, 2};
  EXPECT_THROW(two_approx_drop(Graph::complete(3), all, 2), DomainError);
}

TEST(ComponentOpt, KnownValues) {
  EXPECT_EQ(component_opt(Graph::complete(3), 1), 1);
  EXPECT_EQ(component_opt(Graph::complete(3), 2), 2);
  EXPECT_FALSE(component_opt(Graph::complete(3), 2, BoundaryConvention::Paper).has_value());
  EXPECT_EQ(component_opt(Graph::cycle(5), 0), 0);
  EXPECT_EQ(component_opt(Graph::star(3), 1), 3);
  EXPECT_FALSE(component_opt(Graph::star(3), 1, BoundaryConvention::Paper).has_value());
}

TEST(DpMinContract, KnownValues) {
  const Graph two_triangles = disjoint_union(Graph::complete(3), Graph::complete(3));
  EXPECT_EQ(dp_min_contract(two_triangles, 2), 2);
  EXPECT_EQ(dp_min_contract(Graph::star(3), 1), 3);
  EXPECT_EQ(dp_min_contract(Graph::cycle(5), 0), 0);
  EXPECT_THROW(dp_min_contract(Graph::cycle(7), 1), DomainError);
}

TEST(DpMinContract, MatchesBruteOnRandomUnions) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    Graph g;
    const int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      g = disjoint_union(g, testing::random_connected_graph(1 + static_cast<int>(rng() % 4), 0.5, rng));
    }
    int d = 0;
    for (const auto& c : connected_components(g)) d = std::max(d, testing::oracle_vc(induced_subgraph(g, c).graph));
    if (d == 0) continue;
    for (auto conv : {BoundaryConvention::SpanningTree, BoundaryConvention::Paper}) {
      const bool paper = conv == BoundaryConvention::Paper;
      EXPECT_EQ(dp_min_contract(g, d, conv),
                testing::oracle_min_contract(g, d, static_cast<int>(g.size()), paper));
    }
  }
}

TEST(Algorithm1, KnownValues) {
  const Decision c5 = algorithm1(Graph::cycle(5), 1, 1);
  EXPECT_TRUE(c5.yes);
  EXPECT_EQ(c5.trace, Trace::BcLarge);
  const Decision c4 = algorithm1(Graph::cycle(4), 1, 1);
  EXPECT_FALSE(c4.yes);
  EXPECT_EQ(c4.trace, Trace::EnumerationNo);
  const Decision p4 = algorithm1(Graph::path(4), 1, 1);
  EXPECT_TRUE(p4.yes);
  EXPECT_EQ(*p4.witness, (EdgeSet{{1, 2}}));
  EXPECT_EQ(algorithm1(Graph::path(4), 0, 1).trace, Trace::TrivialNo);
  EXPECT_TRUE(algorithm1(Graph::path(4), 0, 0).yes);
}

TEST(Algorithm1, MatchesOracleOnSmallGraphs) {
  for (const Graph& g : testing::connected_graphs_up_to(6)) {
    for (int d = 1; d <= 2; ++d) {
      const auto want = testing::oracle_min_contract(g, d, 4);
      for (int k = 1; k <= 4; ++k) {
        const Decision r = algorithm1(g, k, d);
        ASSERT_EQ(r.yes, want.has_value() && *want <= k) << serialize_graph(g);
        if (r.yes) {
          EXPECT_LE(static_cast<int>(r.witness->size()), k);
          EXPECT_GE(drop_of(g, *r.witness), d);
        }
      }
    }
  }
}

TEST(MinContract2Approx, KnownValues) {
  const Graph two_triangles = disjoint_union(Graph::complete(3), Graph::complete(3));
  const Approximation a = min_contract_2approx(two_triangles, 2);
  EXPECT_EQ(a.value, 2);
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(min_contract_2approx(Graph::cycle(5), 1).value, 1);
  const Graph k33 = Graph::complete_bipartite(3, 3);
  const Approximation b = min_contract_2approx(k33, 2);
  const auto k0 = testing::oracle_min_contract(k33, 2, 4);
  ASSERT_TRUE(b.value && k0);
  EXPECT_LE(*b.value, 4);
  EXPECT_LE(*b.value, 2 * *k0);
  EXPECT_GE(*b.value, *k0);
}

TEST(BruteMinContract, KnownValues) {
  EXPECT_EQ(brute_min_contract(Graph::path(4), 1, 2), 1);
  EXPECT_FALSE(brute_min_contract(Graph::cycle(4), 1, 1).has_value());
  const Graph g = Graph::complete(5);
  EXPECT_TRUE(brute_min_contract(g, 1, static_cast<int>(g.size())).has_value());
}

}  // namespace
}  // namespace cblock
