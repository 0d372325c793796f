#pragma once

#include <optional>
#include <span>

#include "cblock/graph.hpp"

namespace cblock {

struct CoverResult {
  int size = 0;
  VertexSet cover;
};

/// Exact minimum vertex cover by branch and reduce: degree-1 vertices take
/// their neighbor, a vertex of degree above the remaining budget is forced,
/// paths/cycles are solved directly, otherwise branch on a maximum-degree
/// vertex v ("v in the cover" / "N(v) in the cover"). With a budget, returns
/// nullopt iff vc(g) > budget.
std::optional<CoverResult> vc_branching(const Graph& g, std::optional<int> budget = std::nullopt);

/// vc(g) via vc_branching.
int vertex_cover_number(const Graph& g);

/// Maximum matching of a bipartite graph (augmenting paths).
/// Throws DomainError if `g` is not bipartite.
EdgeSet maximum_matching(const Graph& g);

/// Minimum vertex cover of a bipartite graph by the König construction.
/// Throws DomainError if `g` is not bipartite.
CoverResult vc_bipartite(const Graph& g);

/// Minimum vertex cover of `g` given a set `modulator` with g - modulator
/// bipartite: every guess S of the modulator's cover vertices is tried, the
/// neighbors of the excluded modulator vertices are forced, and the rest is
/// solved by König. Throws DomainError when g - modulator is not bipartite.
CoverResult vc_with_modulator(const Graph& g, std::span<const Vertex> modulator);

/// vc(g/e) for bipartite g, as min{1 + vc(Q - w), |N(w)| + vc(Q - N[w])}
/// where Q = g/e and w is the merged vertex.
int vc_after_contraction(const Graph& g, Edge e);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

}  // namespace cblock
