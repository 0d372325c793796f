#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cblock/graph.hpp"

namespace cblock {

enum class Color : std::uint8_t { One = 1, Two = 2 };

/// A total map V(G) -> {1, 2}.
class TwoColoring {
 public:
  TwoColoring() = default;
  explicit TwoColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}
  /// Color One on `ones`, Two elsewhere.
  static TwoColoring from_set(int order, std::span<const Vertex> ones);

  int order() const noexcept { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }
  VertexSet vertices_of(Color c) const;
  const std::vector<Color>& colors() const noexcept { return colors_; }

  friend bool operator==(const TwoColoring&, const TwoColoring&) = default;

 private:
  std::vector<Color> colors_;
};

/// Connected components of G[V1] and G[V2], in ascending order of minimum vertex.
using MonoComponents = std::vector<VertexSet>;

MonoComponents monochromatic_components(const Graph& g, const TwoColoring& phi);

/// Sum over monochromatic components X of (|X| - 1).
int coloring_cost(const Graph& g, const TwoColoring& phi);

/// BFS spanning trees of the monochromatic components; |F| == cost(phi) and
/// g/F is bipartite.
EdgeSet coloring_to_contraction(const Graph& g, const TwoColoring& phi);

/// Pulls the bipartition of g/F back through the contraction map (left side
/// colored One). Throws DomainError when g/F is not bipartite.
TwoColoring contraction_to_coloring(const Graph& g, std::span<const Edge> f);

enum class BcStrategy {
  /// Iterative deepening that branches on edges touching the classes of a
  /// shortest odd cycle of the current quotient.
  Branching,
  /// Every edge subset of size 0..k in size-lexicographic order (oracle).
  Enumeration,
};

/// Some F with |F| <= k and g/F bipartite, or nullopt if none exists.
/// The returned witness has minimum size.
std::optional<EdgeSet> bc_decide(const Graph& g, int k, BcStrategy strategy = BcStrategy::Branching);

/// bc(g), the minimum number of contractions making g bipartite.
int bipartite_contraction_number(const Graph& g);

}  // namespace cblock
