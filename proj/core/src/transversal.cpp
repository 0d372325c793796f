#include "cblock/transversal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cblock/errors.hpp"
#include "cblock/vertex_cover.hpp"
#include "hitting_set.hpp"

namespace cblock {

HitFamily::HitFamily(Relation relation, std::vector<Graph> patterns)
    : relation_(relation), patterns_(std::move(patterns)) {
  const auto& list = std::get<std::vector<Graph>>(patterns_);
  if (list.empty()) throw DomainError("pattern family is empty");
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].order() == 0) throw DomainError("pattern " + std::to_string(i + 1) + " has no vertices");
    if (!is_connected(list[i])) throw DomainError("pattern " + std::to_string(i + 1) + " is disconnected");
  }
}

HitFamily::HitFamily(Relation relation, SymbolicFamily family) : relation_(relation), patterns_(family) {}

namespace {

// Occurrence sets above this count switch the subgraph relations to lazy branching.
constexpr std::size_t kMaxEnumerated = 2'000'000;

std::optional<TauResult> as_result(std::optional<VertexSet> set) {
  if (!set) return std::nullopt;
  std::sort(set->begin(), set->end());
  return TauResult{static_cast<int>(set->size()), std::move(*set)};
}

std::optional<VertexSet> find_occurrence(const Graph& g, const HitFamily& family) {
  for (const Graph& h : family.patterns()) {
    if (auto occ = contains(g, h, family.relation())) return occurrence_vertices(*occ);
  }
  return std::nullopt;
}

std::optional<std::vector<VertexSet>> enumerate_occurrences(const Graph& g, const HitFamily& family) {
  std::set<VertexSet> seen;
  bool overflow = false;
  for (const Graph& h : family.patterns()) {
    for_each_embedding(g, h, family.relation(), [&](const std::vector<Vertex>& map) {
      VertexSet s = map;
      std::sort(s.begin(), s.end());
      seen.insert(std::move(s));
      overflow = seen.size() > kMaxEnumerated;
      return overflow;
    });
    if (overflow) return std::nullopt;
  }
  return std::vector<VertexSet>(seen.begin(), seen.end());
}

// Branches on the vertices of one occurrence at a time, after splitting into
// components and discarding parts that no pattern fits into.
class LazyTransversal {
 public:
  explicit LazyTransversal(const HitFamily& family) : family_(family) {
    min_order_ = family.patterns().front().order();
    strip_leaves_ = true;
    for (const Graph& h : family.patterns()) {
      min_order_ = std::min(min_order_, h.order());
      if (h.min_degree() < 2) strip_leaves_ = false;
    }
  }

  std::optional<VertexSet> minimize(const Subgraph& s, int cap) {
    for (int b = packing(s.graph); b <= cap; ++b) {
      if (auto found = decide(s, b)) return found;
    }
    return std::nullopt;
  }

 private:
  int packing(Graph g) const {
    int count = 0;
    while (auto occ = find_occurrence(g, family_)) {
      ++count;
      g = remove_vertices(g, *occ).graph;
    }
    return count;
  }

  std::vector<Subgraph> parts(const Subgraph& s) const {
    Graph g = s.graph;
    std::vector<Vertex> to_parent = s.to_parent;
    if (strip_leaves_) {
      bool changed = true;
      while (changed) {
        VertexSet drop;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (g.degree(v) <= 1) drop.push_back(v);
        }
        changed = !drop.empty();
        if (changed) {
          Subgraph next = remove_vertices(g, drop);
          for (Vertex& v : next.to_parent) v = to_parent[v];
          g = std::move(next.graph);
          to_parent = std::move(next.to_parent);
        }
      }
    }
    std::vector<Subgraph> out;
    for (const auto& c : connected_components(g)) {
      if (static_cast<int>(c.size()) < min_order_) continue;
      Subgraph part = induced_subgraph(g, c);
      if (!find_occurrence(part.graph, family_)) continue;
      for (Vertex& v : part.to_parent) v = to_parent[v];
      out.push_back(std::move(part));
    }
    return out;
  }

  std::optional<VertexSet> decide(const Subgraph& s, int budget) {
    VertexSet chosen;
    const auto pieces = parts(s);
    if (pieces.empty()) return chosen;
    if (pieces.size() > 1) {
      std::vector<int> bounds;
      int total = 0;
      for (const auto& p : pieces) total += bounds.emplace_back(packing(p.graph));
      if (total > budget) return std::nullopt;
      int spent = 0;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        total -= bounds[i];
        auto best = minimize(pieces[i], budget - spent - total);
        if (!best) return std::nullopt;
        spent += static_cast<int>(best->size());
        chosen.insert(chosen.end(), best->begin(), best->end());
      }
      return chosen;
    }
    const Subgraph& part = pieces.front();
    if (budget <= 0 || packing(part.graph) > budget) return std::nullopt;
    const VertexSet occ = *find_occurrence(part.graph, family_);
    for (Vertex x : occ) {
      Subgraph next = remove_vertices(part.graph, VertexSet{x});
      for (Vertex& v : next.to_parent) v = part.to_parent[v];
      if (auto rest = decide(next, budget - 1)) {
        rest->push_back(part.to_parent[x]);
        return rest;
      }
    }
    return std::nullopt;
  }

  const HitFamily& family_;
  int min_order_ = 1;
  bool strip_leaves_ = false;
};

std::optional<TauResult> explicit_tau(const Graph& g, const HitFamily& family, int cap) {
  const Relation rel = family.relation();
  if (rel == Relation::Subgraph || rel == Relation::InducedSubgraph) {
    if (auto sets = enumerate_occurrences(g, family)) {
      return as_result(detail::min_hitting_set(std::move(*sets), cap));
    }
  }
  Subgraph whole{g, std::vector<Vertex>(static_cast<std::size_t>(g.order()))};
  std::iota(whole.to_parent.begin(), whole.to_parent.end(), 0);
  return as_result(LazyTransversal(family).minimize(whole, cap));
}

std::string_view relation_name(Relation rel) {
  switch (rel) {
    case Relation::Subgraph: return "subgraph";
    case Relation::InducedSubgraph: return "induced subgraph";
    case Relation::Minor: return "minor";
    case Relation::TopologicalMinor: return "topological minor";
  }
  return "?";
}

}  // namespace

std::optional<TauResult> tau(const Graph& g, const HitFamily& family, std::optional<int> budget) {
  const int cap = budget ? *budget : g.order();
  if (cap < 0) return std::nullopt;
  if (!family.is_symbolic()) return explicit_tau(g, family, cap);
  switch (family.symbolic()) {
    case SymbolicFamily::SingleEdge: {
      auto cover = vc_branching(g, cap);
      if (!cover) return std::nullopt;
      return TauResult{cover->size, std::move(cover->cover)};
    }
    case SymbolicFamily::AllCycles:
      return fvs(g, cap);
    case SymbolicFamily::OddCycles: {
      const Relation rel = family.relation();
      // Every cycle contains a triangle as a minor and is a subdivided triangle.
      if (rel == Relation::Minor || rel == Relation::TopologicalMinor) return fvs(g, cap);
      return oct(g, cap);
    }
  }
  return std::nullopt;
}

bool has_occurrence(const Graph& g, const HitFamily& family) {
  if (!family.is_symbolic()) return find_occurrence(g, family).has_value();
  switch (family.symbolic()) {
    case SymbolicFamily::SingleEdge: return g.size() > 0;
    case SymbolicFamily::AllCycles: return shortest_cycle(g).has_value();
    case SymbolicFamily::OddCycles:
      if (family.relation() == Relation::Minor || family.relation() == Relation::TopologicalMinor) {
        return shortest_cycle(g).has_value();
      }
      return !is_bipartite(g);
  }
  return false;
}

bool drop_given_edge(const Graph& g, Edge e, const HitFamily& family) {
  if (!g.contains(e.u) || !g.contains(e.v) || !g.has_edge(e.u, e.v)) {
    throw DomainError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
  }
  const int t = tau(g, family)->size;
  if (t == 0) return false;
  return tau(contract(g, e).quotient, family, t - 1).has_value();
}

std::optional<Edge> find_dropping_edge(const Graph& g, const HitFamily& family) {
  const int t = tau(g, family)->size;
  if (t == 0) return std::nullopt;
  for (const Edge& e : edges_by_degree(g)) {
    if (tau(contract(g, e).quotient, family, t - 1)) return e;
  }
  return std::nullopt;
}

std::vector<std::string> antichain_warnings(const HitFamily& family) {
  std::vector<std::string> out;
  if (family.is_symbolic()) return out;
  const auto& list = family.patterns();
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (i == j || !contains(list[i], list[j], family.relation())) continue;
      out.push_back("pattern " + std::to_string(i + 1) + " contains pattern " + std::to_string(j + 1) + " as a " +
                    std::string(relation_name(family.relation())));
    }
  }
  return out;
}

}  // namespace cblock
