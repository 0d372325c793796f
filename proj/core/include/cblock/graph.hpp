#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace cblock {

using Vertex = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds a normalized edge; throws DomainError for a loop.
Edge make_edge(Vertex a, Vertex b);

using EdgeSet = std::vector<Edge>;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph on vertices 0..order()-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  /// Throws DomainError on loops, duplicate edges, or out-of-range endpoints.
  Graph(int order, std::span<const Edge> edges);

  static Graph complete(int order);
  static Graph path(int order);
  static Graph cycle(int order);
  static Graph star(int leaves);
  static Graph complete_bipartite(int left, int right);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const noexcept;
  int min_degree() const noexcept;
  bool has_edge(Vertex a, Vertex b) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// Adds {a,b}; throws DomainError on loops, duplicates, or bad endpoints.
  void add_edge(Vertex a, Vertex b);
  /// Adds {a,b} unless a == b or the edge is already present.
  bool add_edge_if_absent(Vertex a, Vertex b);
  Vertex add_vertex();

  /// All edges, sorted lexicographically as (min, max).
  EdgeSet edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Replaces every edge by a path of length two.
Graph subdivide(const Graph& g);

/// Quotient graph g/F together with the surjective vertex map old -> new.
struct ContractionResult {
  Graph quotient;
  std::vector<Vertex> vmap;
};

/// Contracts every edge of `f`. Merged classes are numbered in ascending
/// order of their minimum original vertex. Throws DomainError if some edge of
/// `f` is not an edge of `g`.
ContractionResult contract(const Graph& g, std::span<const Edge> f);
ContractionResult contract(const Graph& g, Edge e);

/// An induced subgraph and the map from its vertices back to the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Subgraph remove_vertices(const Graph& g, std::span<const Vertex> drop);

/// Components in ascending order of their minimum vertex; each one sorted.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// Odd cycle given as its vertices in cyclic order.
struct OddCycle {
  std::vector<Vertex> vertices;
};

/// Either a proper 2-sided split or an odd cycle certifying that none exists.
/// Each component is explored by BFS from its minimum vertex, which goes left.
using BipartitionResult = std::variant<Bipartition, OddCycle>;

BipartitionResult bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// A shortest odd cycle of `g`, or nullopt when `g` is bipartite.
std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g);

/// A shortest cycle of `g`, or nullopt when `g` is a forest.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g);

/// True iff `g` has an edge and one vertex meets every edge.
/// Throws DomainError when `g` is disconnected.
bool is_star(const Graph& g);

/// BFS shortest path from `from` to `to` inclusive, neighbors visited in
/// ascending order. Nullopt when no path exists.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex from, Vertex to);

/// Spanning-forest edges of g[vertices] found by BFS from the minimum vertex
/// of each component, in discovery order.
EdgeSet bfs_spanning_forest(const Graph& g, std::span<const Vertex> vertices);

/// All edges ordered by descending deg(u) + deg(v), ties lexicographic. This
/// is the scan order used wherever a single witness edge is reported.
EdgeSet edges_by_degree(const Graph& g);

/// Sorted set of endpoints of `f`.
VertexSet endpoints(std::span<const Edge> f);

}  // namespace cblock
