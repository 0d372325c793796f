#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cblock/bipartite_contraction.hpp"
#include "cblock/graph.hpp"

namespace cblock {

/// Which branch of the XP decision procedure produced the answer.
enum class Trace {
  TrivialNo,        // k < d
  BcLarge,          // bc(G) >= d
  SmallComponents,  // every component has vc <= d; exact DP
  Lemma3Budget,     // a component has vc >= d+1 and k >= 2d
  EnumerationYes,
  EnumerationNo,
};

std::string_view to_string(Trace trace);

struct Decision {
  bool yes = false;
  /// Present exactly when `yes`.
  std::optional<EdgeSet> witness;
  Trace trace = Trace::TrivialNo;
};

/// How opt(C, d') is defined when d' equals vc(C).
enum class BoundaryConvention {
  /// Contracting a spanning tree collapses C to one vertex, so the drop
  /// vc(C) is reachable with |V(C)| - 1 contractions.
  SpanningTree,
  /// opt(C, d') is infinite whenever vc(C) <= d' (and d' > 0).
  Paper,
};

/// "Can one contraction drop vc by one?" in polynomial time: yes for every
/// non-bipartite graph; otherwise each edge is tested with vc_after_contraction.
Decision contraction_vc_1(const Graph& g);

struct DropPlan {
  /// Contracted edges, in original vertex ids, in the order they were chosen.
  EdgeSet edges;
  /// vc of the component before round 1 and after every round.
  std::vector<int> cover_sizes;
};

/// At most 2d edges inside `component` whose contraction drops its vc by d:
/// each round contracts a shortest path between two minimum-cover vertices at
/// distance at most two. Throws DomainError when `component` is not a
/// connected component of `g` or its vc is at most d.
DropPlan two_approx_drop(const Graph& g, std::span<const Vertex> component, int d);

/// Minimum-size contraction set of a connected graph `c` that drops vc(c) by
/// at least `d_prime`, or nullopt for "infinity".
std::optional<EdgeSet> component_opt_witness(const Graph& c, int d_prime,
                                             BoundaryConvention convention = BoundaryConvention::SpanningTree);
std::optional<int> component_opt(const Graph& c, int d_prime,
                                 BoundaryConvention convention = BoundaryConvention::SpanningTree);

/// Exact MinContraction(vc) when every component has vc <= d, by dynamic
/// programming over components. Nullopt means infinity. Throws DomainError
/// when some component has vc > d.
std::optional<EdgeSet> dp_min_contract_witness(const Graph& g, int d,
                                               BoundaryConvention convention = BoundaryConvention::SpanningTree);
std::optional<int> dp_min_contract(const Graph& g, int d,
                                   BoundaryConvention convention = BoundaryConvention::SpanningTree);

struct Algorithm1Options {
  BoundaryConvention convention = BoundaryConvention::SpanningTree;
  BcStrategy bc_strategy = BcStrategy::Branching;
};

/// Decides whether at most k contractions drop vc(g) by at least d.
Decision algorithm1(const Graph& g, int k, int d, const Algorithm1Options& options = {});

struct Approximation {
  /// Nullopt when no contraction set reaches the drop.
  std::optional<int> value;
  EdgeSet witness;
  /// False only on the large-component branch, where value <= 2 * optimum.
  bool exact = true;
};

/// Min number of contractions dropping vc by d, exact except when a component
/// has vc >= d+1, where the value is at most twice the optimum.
Approximation min_contract_2approx(const Graph& g, int d,
                                   BoundaryConvention convention = BoundaryConvention::SpanningTree);

/// Ground truth by exhaustive enumeration of F with |F| <= cap, evaluated with
/// vc_branching. Under the Paper convention, sets that collapse a component
/// with an edge to an edgeless graph are not admissible.
std::optional<EdgeSet> brute_min_contract_witness(const Graph& g, int d, int cap,
                                                  BoundaryConvention convention = BoundaryConvention::SpanningTree);
std::optional<int> brute_min_contract(const Graph& g, int d, int cap,
                                      BoundaryConvention convention = BoundaryConvention::SpanningTree);

}  // namespace cblock
