#include <gtest/gtest.h>

#include <map>

#include "cblock/cnf.hpp"
#include "cblock/errors.hpp"
#include "cblock/graph_io.hpp"
#include "cblock/reductions.hpp"
#include "cblock/transversal.hpp"
#include "graph_gen.hpp"

namespace cblock {
namespace {

std::map<Role, int> role_counts(const GadgetInstance& inst) {
  std::map<Role, int> out;
  for (const RoleTag& t : inst.roles) ++out[t.role];
  return out;
}

int clause_literals(const CleanFormula& phi) {
  int total = 0;
  for (const Clause& c : phi.clauses()) total += static_cast<int>(c.size());
  return total;
}

// Greedy packing of vertex-disjoint shortest cycles; a lower bound on the maximum packing.
int greedy_cycle_packing(Graph g) {
  int count = 0;
  while (auto cycle = shortest_cycle(g)) {
    VertexSet drop(cycle->begin(), cycle->end());
    std::sort(drop.begin(), drop.end());
    g = remove_vertices(g, drop).graph;
    ++count;
  }
  return count;
}

TEST(BuildBase, Phi0Counts) {
  const GadgetInstance inst = build_base(phi0());
  EXPECT_EQ(inst.graph.order(), 14);
  EXPECT_EQ(inst.graph.size(), 17U);
  EXPECT_EQ(inst.threshold, 13);
  const auto roles = role_counts(inst);
  EXPECT_EQ(roles.at(Role::AVertex) + roles.at(Role::Dummy), 8);
  EXPECT_EQ(roles.at(Role::BVertex), 6);
}

TEST(BuildBase, EveryBVertexHasOneCrossEdge) {
  for (const CleanFormula& phi : enumerate_clean_formulas(3)) {
    const GadgetInstance inst = build_base(phi);
    for (Vertex v = 0; v < inst.graph.order(); ++v) {
      if (inst.roles[v].role != Role::BVertex) continue;
      int cross = 0;
      for (Vertex y : inst.graph.neighbors(v)) cross += inst.roles[y].role != Role::BVertex ? 1 : 0;
      EXPECT_EQ(cross, 1);
    }
  }
}

TEST(BuildBase, VariableGadgetsAreFourCycles) {
  const CleanFormula phi = phi0();
  const GadgetInstance inst = build_base(phi);
  for (int x = 0; x < phi.variables(); ++x) {
    VertexSet members;
    for (Vertex v = 0; v < inst.graph.order(); ++v) {
      const Role r = inst.roles[v].role;
      if ((r == Role::AVertex || r == Role::Dummy) && inst.roles[v].variable == x) members.push_back(v);
    }
    ASSERT_EQ(members.size(), 4U);
    EXPECT_TRUE(testing::isomorphic(induced_subgraph(inst.graph, members).graph, Graph::cycle(4)));
  }
}

TEST(BuildThm1, Phi0C4StructuralAudit) {
  const CleanFormula phi = phi0();
  const GadgetInstance inst = build_thm1(phi, Graph::cycle(4));
  const int n = phi.variables();
  EXPECT_EQ(inst.graph.order(), 112);
  EXPECT_EQ(inst.threshold, 8 * n - phi.clause_count());
  ASSERT_EQ(inst.roles.size(), 112U);
  const auto roles = role_counts(inst);
  EXPECT_EQ(roles.at(Role::AVertex) + roles.at(Role::Dummy), 4 * n);
  EXPECT_EQ(roles.at(Role::BVertex), clause_literals(phi));
  EXPECT_EQ(roles.at(Role::Base), 3 * n);
  EXPECT_EQ(roles.at(Role::PendantRoot), 3 * n);
  EXPECT_LE(inst.graph.max_degree(), 5 * Graph::cycle(4).max_degree());
  for (Vertex v = 0; v < inst.graph.order(); ++v) {
    const Role r = inst.roles[v].role;
    const int deg = inst.graph.degree(v);
    if (r == Role::InternalA || r == Role::InternalB || r == Role::InternalAB || r == Role::Pendant) {
      EXPECT_EQ(deg, 2) << "vertex " << v;
    }
    if (r == Role::Base) {
      EXPECT_EQ(deg, 3) << "vertex " << v;
      int pendant_edges = 0;
      for (Vertex y : inst.graph.neighbors(v)) pendant_edges += inst.roles[y].role == Role::PendantRoot ? 1 : 0;
      EXPECT_EQ(pendant_edges, 1);
    }
    if (r == Role::PendantRoot) {
      EXPECT_EQ(deg, 5) << "vertex " << v;
    }
  }
}

TEST(BuildThm1, VertexCountIsLinearInFormulaSize) {
  for (const CleanFormula& phi : enumerate_clean_formulas(3)) {
    const GadgetInstance inst = build_thm1(phi, Graph::cycle(4));
    int pairs = 0;
    for (const Clause& c : phi.clauses()) pairs += static_cast<int>(c.size() * (c.size() - 1) / 2);
    EXPECT_EQ(inst.graph.order(), 47 * phi.variables() + clause_literals(phi) + 4 * pairs);
  }
}

TEST(BuildThm1, Deterministic) {
  const GadgetInstance a = build_thm1(phi0(), Graph::cycle(4));
  const GadgetInstance b = build_thm1(phi0(), Graph::cycle(4));
  EXPECT_EQ(serialize_graph(a.graph), serialize_graph(b.graph));
  EXPECT_EQ(serialize_roles(a), serialize_roles(b));
}

TEST(BuildThm1, RejectsBadPatterns) {
  EXPECT_THROW(build_thm1(phi0(), Graph::complete(4)), DomainError);
  EXPECT_THROW(build_thm1(phi0(), Graph::path(4)), DomainError);
  EXPECT_THROW(build_thm1(phi0(), Graph::cycle(4), 0, 1), DomainError);
  EXPECT_EQ(first_non_adjacent_pair(Graph::cycle(4)), (Edge{0, 2}));
  EXPECT_FALSE(first_non_adjacent_pair(Graph::complete(3)).has_value());
}

TEST(BuildThm1, DoubleCopiesSurviveEveryContraction) {
  const CleanFormula phi = phi0();
  const GadgetInstance inst = build_thm1(phi, Graph::cycle(4));
  const int need = 2 * phi.variables() + 3 * phi.variables();
  for (const Edge& e : inst.graph.edges()) {
    EXPECT_GE(greedy_cycle_packing(contract(inst.graph, e).quotient), need) << format_edge(e);
  }
}

TEST(BuildThm2, PatternIsSubdividedClique) {
  const GadgetInstance inst = build_thm2(phi0(), 3);
  ASSERT_TRUE(inst.meta.pattern.has_value());
  EXPECT_TRUE(testing::isomorphic(*inst.meta.pattern, Graph::cycle(6)));
  EXPECT_EQ(subdivide(Graph::complete(4)).order(), 10);
  EXPECT_THROW(build_thm2(phi0(), 2), DomainError);
  const GadgetInstance same = build_thm1(phi0(), subdivide(Graph::complete(3)), 0, 1);
  EXPECT_EQ(serialize_graph(inst.graph), serialize_graph(same.graph));
}

TEST(BuildThm3, PathGadgetStructure) {
  const CleanFormula phi = phi0();
  const GadgetInstance i4 = build_thm3(phi, 4);
  EXPECT_EQ(i4.threshold, 13);
  EXPECT_EQ(i4.graph.order(), 87);
  EXPECT_EQ(i4.graph.size(), 90U);
  const auto r4 = role_counts(i4);
  const int ab_vertices = 4 * phi.variables() + clause_literals(phi);
  EXPECT_EQ(r4.at(Role::Attached), ab_vertices);
  EXPECT_EQ(r4.at(Role::Base), 3 * phi.variables());

  const GadgetInstance i5 = build_thm3(phi, 5);
  const auto r5 = role_counts(i5);
  EXPECT_EQ(r5.at(Role::Attached), 2 * ab_vertices);
  for (Vertex v = 0; v < i4.graph.order(); ++v) {
    if (i4.roles[v].role == Role::Attached) {
      EXPECT_EQ(i4.graph.degree(v), 1);
    }
    if (i4.roles[v].role == Role::InternalA || i4.roles[v].role == Role::InternalB) {
      EXPECT_EQ(i4.graph.degree(v), 2);
    }
  }
  EXPECT_THROW(build_thm3(phi, 3), DomainError);
}

TEST(Reductions, LowerBoundHoldsOnSmallInstances) {
  const GadgetInstance inst = build_thm1(phi0(), Graph::cycle(4));
  EXPECT_GE(fvs(inst.graph)->size, inst.threshold);
  const GadgetInstance t3 = build_thm3(phi0(), 4);
  EXPECT_GE(tau(t3.graph, HitFamily(Relation::Subgraph, {Graph::path(4)}))->size, t3.threshold);
}

TEST(Reductions, RoleTagsRender) {
  const GadgetInstance inst = build_base(phi0());
  const std::string text = serialize_roles(inst);
  EXPECT_NE(text.find("dummy[x1]"), std::string::npos);
  EXPECT_NE(text.find("b[C1,+x1]"), std::string::npos);
}

}  // namespace
}  // namespace cblock
