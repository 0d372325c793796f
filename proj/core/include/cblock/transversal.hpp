#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cblock/containment.hpp"
#include "cblock/graph.hpp"

namespace cblock {

/// Infinite (or trivial) families handled by dedicated solvers.
enum class SymbolicFamily { AllCycles, OddCycles, SingleEdge };

/// Pattern family H together with a containment relation.
class HitFamily {
 public:
  /// Throws DomainError when a pattern is empty or disconnected.
  HitFamily(Relation relation, std::vector<Graph> patterns);
  HitFamily(Relation relation, SymbolicFamily family);

  static HitFamily all_cycles() { return {Relation::Subgraph, SymbolicFamily::AllCycles}; }
  static HitFamily odd_cycles() { return {Relation::Subgraph, SymbolicFamily::OddCycles}; }
  static HitFamily single_edge() { return {Relation::Subgraph, SymbolicFamily::SingleEdge}; }

  Relation relation() const noexcept { return relation_; }
  bool is_symbolic() const noexcept { return std::holds_alternative<SymbolicFamily>(patterns_); }
  SymbolicFamily symbolic() const { return std::get<SymbolicFamily>(patterns_); }
  const std::vector<Graph>& patterns() const { return std::get<std::vector<Graph>>(patterns_); }

 private:
  Relation relation_;
  std::variant<std::vector<Graph>, SymbolicFamily> patterns_;
};

struct TauResult {
  int size = 0;
  VertexSet set;
};

/// Minimum S with no pattern occurring in g - S. With a budget, returns
/// nullopt iff the minimum exceeds it.
std::optional<TauResult> tau(const Graph& g, const HitFamily& family, std::optional<int> budget = std::nullopt);

/// Minimum feedback vertex set.
std::optional<TauResult> fvs(const Graph& g, std::optional<int> budget = std::nullopt);

/// Minimum odd cycle transversal.
std::optional<TauResult> oct(const Graph& g, std::optional<int> budget = std::nullopt);

/// True iff some pattern occurs in g.
bool has_occurrence(const Graph& g, const HitFamily& family);

/// tau(g/e) < tau(g). Throws DomainError when e is not an edge of g.
bool drop_given_edge(const Graph& g, Edge e, const HitFamily& family);

/// First edge in edges_by_degree order whose contraction lowers tau, if any.
std::optional<Edge> find_dropping_edge(const Graph& g, const HitFamily& family);

/// One message per ordered pair of explicit patterns (i, j), i != j, where
/// pattern i contains pattern j under the family's relation.
std::vector<std::string> antichain_warnings(const HitFamily& family);

}  // namespace cblock
