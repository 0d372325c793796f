#include "cblock/bipartite_contraction.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cblock/errors.hpp"
#include "combinations.hpp"

namespace cblock {

TwoColoring TwoColoring::from_set(int order, std::span<const Vertex> ones) {
  std::vector<Color> colors(static_cast<std::size_t>(order), Color::Two);
  for (Vertex v : ones) colors.at(static_cast<std::size_t>(v)) = Color::One;
  return TwoColoring(std::move(colors));
}

VertexSet TwoColoring::vertices_of(Color c) const {
  VertexSet out;
  for (Vertex v = 0; v < order(); ++v) {
    if (colors_[v] == c) out.push_back(v);
  }
  return out;
}

MonoComponents monochromatic_components(const Graph& g, const TwoColoring& phi) {
  if (phi.order() != g.order()) throw DomainError("coloring does not match the graph");
  MonoComponents out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet component;
    seen[s] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      component.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y] && phi[y] == phi[s]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

int coloring_cost(const Graph& g, const TwoColoring& phi) {
  int cost = 0;
  for (const auto& component : monochromatic_components(g, phi)) cost += static_cast<int>(component.size()) - 1;
  return cost;
}

EdgeSet coloring_to_contraction(const Graph& g, const TwoColoring& phi) {
  EdgeSet f;
  for (const auto& component : monochromatic_components(g, phi)) {
    const EdgeSet tree = bfs_spanning_forest(g, component);
    f.insert(f.end(), tree.begin(), tree.end());
  }
  std::sort(f.begin(), f.end());
  return f;
}

TwoColoring contraction_to_coloring(const Graph& g, std::span<const Edge> f) {
  const ContractionResult q = contract(g, f);
  const auto split = bipartition(q.quotient);
  const auto* parts = std::get_if<Bipartition>(&split);
  if (!parts) throw DomainError("contraction_to_coloring: g/F is not bipartite");
  std::vector<char> left(static_cast<std::size_t>(q.quotient.order()), 0);
  for (Vertex v : parts->left) left[v] = 1;
  std::vector<Color> colors(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) colors[v] = left[q.vmap[v]] ? Color::One : Color::Two;
  return TwoColoring(std::move(colors));
}

namespace {

class BcBrancher {
 public:
  explicit BcBrancher(const Graph& g) : g_(g), edges_(g.edges()) {}

  bool search(EdgeSet& f, int budget) {
    const ContractionResult q = contract(g_, f);
    const auto cycle = shortest_odd_cycle(q.quotient);
    if (!cycle) return true;
    if (static_cast<int>(f.size()) == budget) return false;
    std::vector<char> on_cycle(static_cast<std::size_t>(q.quotient.order()), 0);
    for (Vertex v : *cycle) on_cycle[v] = 1;
    // Any original edge between the same two classes has the same effect, so
    // keep one representative (the lexicographically smallest) per quotient edge.
    std::map<Edge, Edge> candidates;
    for (const Edge& e : edges_) {
      const Vertex a = q.vmap[e.u];
      const Vertex b = q.vmap[e.v];
      if (a == b || !(on_cycle[a] || on_cycle[b])) continue;
      candidates.try_emplace(make_edge(a, b), e);
    }
    std::vector<Edge> ordered;
    for (const auto& [key, e] : candidates) ordered.push_back(e);
    std::sort(ordered.begin(), ordered.end());
    for (const Edge& e : ordered) {
      f.push_back(e);
      if (search(f, budget)) return true;
      f.pop_back();
    }
    return false;
  }

 private:
  const Graph& g_;
  EdgeSet edges_;
};

std::optional<EdgeSet> bc_enumerate(const Graph& g, int k) {
  const EdgeSet edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (int size = 0; size <= std::min(k, m); ++size) {
    EdgeSet found;
    const bool hit = detail::for_each_combination(m, size, [&](std::span<const int> pick) {
      EdgeSet f;
      for (int i : pick) f.push_back(edges[i]);
      if (!is_bipartite(contract(g, f).quotient)) return false;
      found = std::move(f);
      return true;
    });
    if (hit) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<EdgeSet> bc_decide(const Graph& g, int k, BcStrategy strategy) {
  if (k < 0) return std::nullopt;
  if (strategy == BcStrategy::Enumeration) return bc_enumerate(g, k);
  BcBrancher brancher(g);
  for (int budget = 0; budget <= k; ++budget) {
    EdgeSet f;
    if (brancher.search(f, budget)) {
      std::sort(f.begin(), f.end());
      return f;
    }
  }
  return std::nullopt;
}

int bipartite_contraction_number(const Graph& g) {
  for (int k = 0;; ++k) {
    if (bc_decide(g, k)) return k;
  }
}

}  // namespace cblock
