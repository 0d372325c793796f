#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "cblock/graph.hpp"

namespace cblock {

enum class Relation { Subgraph, InducedSubgraph, Minor, TopologicalMinor };

/// Injective map pattern vertex -> host vertex.
struct Embedding {
  std::vector<Vertex> map;
};

/// Disjoint connected branch sets, one per pattern vertex, with a host edge
/// between the sets of every pattern edge.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

/// Branch vertices plus one path per pattern edge (in `h.edges()` order),
/// listed endpoint to endpoint; paths are internally vertex-disjoint and avoid
/// other branch vertices.
struct TopologicalModel {
  std::vector<Vertex> branch;
  std::vector<std::vector<Vertex>> paths;
};

using Occurrence = std::variant<Embedding, MinorModel, TopologicalModel>;

/// An occurrence of `h` in `g` under `rel`, or nullopt. Deterministic: the
/// first occurrence found with anchors in ascending vertex order. For minors
/// and topological minors the model found uses the fewest host vertices.
std::optional<Occurrence> contains(const Graph& g, const Graph& h, Relation rel);

/// Visits every (induced) subgraph embedding of `h` in `g`; stops when `visit`
/// returns true. `rel` must be Subgraph or InducedSubgraph.
void for_each_embedding(const Graph& g, const Graph& h, Relation rel,
                        const std::function<bool(const std::vector<Vertex>&)>& visit);

/// Host vertices used by the occurrence, sorted.
VertexSet occurrence_vertices(const Occurrence& occ);

/// Checks the model conditions of `rel` for `occ`.
bool is_valid_occurrence(const Graph& g, const Graph& h, Relation rel, const Occurrence& occ);

}  // namespace cblock
