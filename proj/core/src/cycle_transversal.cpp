#include <algorithm>
#include <map>
#include <numeric>

#include "cblock/transversal.hpp"

namespace cblock {

namespace {

// Multigraph with edge multiplicities capped at two; a double edge is a
// cycle of length two.
class Multigraph {
 public:
  explicit Multigraph(const Graph& g)
      : adj_(static_cast<std::size_t>(g.order())), alive_(static_cast<std::size_t>(g.order()), 1) {
    for (const Edge& e : g.edges()) add(e.u, e.v);
  }

  int order() const { return static_cast<int>(adj_.size()); }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  const std::map<Vertex, int>& neighbors(Vertex v) const { return adj_[v]; }

  int degree(Vertex v) const {
    int d = 0;
    for (const auto& [y, mult] : adj_[v]) d += mult;
    return d;
  }

  void add(Vertex a, Vertex b) {
    int& mult = adj_[a][b];
    mult = std::min(mult + 1, 2);
    adj_[b][a] = mult;
  }

  void remove(Vertex v) {
    for (const auto& [y, mult] : adj_[v]) adj_[y].erase(v);
    adj_[v].clear();
    alive_[v] = 0;
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < order(); ++v) {
      if (alive_[v]) out.push_back(v);
    }
    return out;
  }

  // Keeps only `keep` alive.
  Multigraph restricted(const std::vector<Vertex>& keep) const {
    Multigraph out(*this);
    std::vector<char> wanted(adj_.size(), 0);
    for (Vertex v : keep) wanted[v] = 1;
    for (Vertex v = 0; v < order(); ++v) {
      if (out.alive_[v] && !wanted[v]) {
        out.adj_[v].clear();
        out.alive_[v] = 0;
      }
    }
    for (Vertex v : keep) std::erase_if(out.adj_[v], [&](const auto& kv) { return !wanted[kv.first]; });
    return out;
  }

  std::vector<std::vector<Vertex>> components() const {
    std::vector<int> seen(adj_.size(), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < order(); ++s) {
      if (!alive_[s] || seen[s]) continue;
      std::vector<Vertex> comp{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (const auto& [y, mult] : adj_[comp[i]]) {
          if (!seen[y]) {
            seen[y] = 1;
            comp.push_back(y);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  // A shortest cycle as its vertex list (two vertices for a double edge).
  std::optional<std::vector<Vertex>> shortest_cycle() const {
    for (Vertex v = 0; v < order(); ++v) {
      for (const auto& [y, mult] : adj_[v]) {
        if (mult >= 2) return std::vector<Vertex>{v, y};
      }
    }
    const std::vector<Vertex> live = vertices();
    std::vector<Vertex> index(adj_.size(), -1);
    for (std::size_t i = 0; i < live.size(); ++i) index[live[i]] = static_cast<Vertex>(i);
    Graph simple(static_cast<int>(live.size()));
    for (Vertex v : live) {
      for (const auto& [y, mult] : adj_[v]) {
        if (v < y) simple.add_edge(index[v], index[y]);
      }
    }
    auto cycle = cblock::shortest_cycle(simple);
    if (!cycle) return std::nullopt;
    for (Vertex& x : *cycle) x = live[x];
    return cycle;
  }

 private:
  std::vector<std::map<Vertex, int>> adj_;
  std::vector<char> alive_;
};

// Degree <= 1: delete. Degree 2 over one double edge: the neighbor is forced.
// Degree 2 over two neighbors: bypass.
void reduce(Multigraph& m, VertexSet& chosen) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < m.order(); ++v) {
      if (!m.alive(v)) continue;
      const int deg = m.degree(v);
      if (deg <= 1) {
        m.remove(v);
        changed = true;
      } else if (deg == 2 && m.neighbors(v).size() == 1) {
        const Vertex a = m.neighbors(v).begin()->first;
        chosen.push_back(a);
        m.remove(a);
        m.remove(v);
        changed = true;
      } else if (deg == 2) {
        const Vertex a = m.neighbors(v).begin()->first;
        const Vertex b = std::next(m.neighbors(v).begin())->first;
        m.remove(v);
        m.add(a, b);
        changed = true;
      }
    }
  }
}

int cycle_packing(Multigraph m) {
  int count = 0;
  VertexSet ignored;
  reduce(m, ignored);
  while (auto cycle = m.shortest_cycle()) {
    ++count;
    for (Vertex v : *cycle) m.remove(v);
    reduce(m, ignored);
  }
  return count + static_cast<int>(ignored.size());
}

std::optional<VertexSet> fvs_minimize(const Multigraph& m, int cap);

std::optional<VertexSet> fvs_decide(Multigraph m, int budget) {
  VertexSet chosen;
  reduce(m, chosen);
  budget -= static_cast<int>(chosen.size());
  if (budget < 0) return std::nullopt;
  const auto comps = m.components();
  if (comps.empty()) return chosen;
  if (comps.size() > 1) {
    std::vector<Multigraph> parts;
    std::vector<int> bounds;
    int total = 0;
    for (const auto& c : comps) {
      parts.push_back(m.restricted(c));
      total += bounds.emplace_back(cycle_packing(parts.back()));
    }
    if (total > budget) return std::nullopt;
    int spent = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      total -= bounds[i];
      auto best = fvs_minimize(parts[i], budget - spent - total);
      if (!best) return std::nullopt;
      spent += static_cast<int>(best->size());
      chosen.insert(chosen.end(), best->begin(), best->end());
    }
    return chosen;
  }
  if (cycle_packing(m) > budget) return std::nullopt;
  auto cycle = *m.shortest_cycle();
  std::stable_sort(cycle.begin(), cycle.end(), [&](Vertex a, Vertex b) { return m.degree(a) > m.degree(b); });
  for (Vertex x : cycle) {
    Multigraph next = m;
    next.remove(x);
    if (auto rest = fvs_decide(std::move(next), budget - 1)) {
      rest->push_back(x);
      chosen.insert(chosen.end(), rest->begin(), rest->end());
      return chosen;
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> fvs_minimize(const Multigraph& m, int cap) {
  for (int b = cycle_packing(m); b <= cap; ++b) {
    if (auto found = fvs_decide(m, b)) return found;
  }
  return std::nullopt;
}

// Odd cycle transversal on induced subgraphs, vertices mapped to the parent.
int odd_cycle_packing(Graph g) {
  int count = 0;
  while (auto cycle = shortest_odd_cycle(g)) {
    ++count;
    g = remove_vertices(g, VertexSet(*cycle)).graph;
  }
  return count;
}

std::optional<VertexSet> oct_minimize(const Subgraph& s, int cap);

std::optional<VertexSet> oct_decide(const Subgraph& s, int budget) {
  VertexSet chosen;
  std::vector<Subgraph> parts;
  for (const auto& c : connected_components(s.graph)) {
    Subgraph part = induced_subgraph(s.graph, c);
    if (is_bipartite(part.graph)) continue;
    for (Vertex& v : part.to_parent) v = s.to_parent[v];
    parts.push_back(std::move(part));
  }
  if (parts.empty()) return chosen;
  if (parts.size() > 1) {
    std::vector<int> bounds;
    int total = 0;
    for (const auto& p : parts) total += bounds.emplace_back(odd_cycle_packing(p.graph));
    if (total > budget) return std::nullopt;
    int spent = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      total -= bounds[i];
      auto best = oct_minimize(parts[i], budget - spent - total);
      if (!best) return std::nullopt;
      spent += static_cast<int>(best->size());
      chosen.insert(chosen.end(), best->begin(), best->end());
    }
    return chosen;
  }
  const Subgraph& part = parts.front();
  if (budget <= 0 || odd_cycle_packing(part.graph) > budget) return std::nullopt;
  const auto cycle = *shortest_odd_cycle(part.graph);
  for (Vertex x : cycle) {
    Subgraph next = remove_vertices(part.graph, VertexSet{x});
    for (Vertex& v : next.to_parent) v = part.to_parent[v];
    if (auto rest = oct_decide(next, budget - 1)) {
      rest->push_back(part.to_parent[x]);
      return rest;
    }
  }
  return std::nullopt;
}

std::optional<VertexSet> oct_minimize(const Subgraph& s, int cap) {
  for (int b = odd_cycle_packing(s.graph); b <= cap; ++b) {
    if (auto found = oct_decide(s, b)) return found;
  }
  return std::nullopt;
}

std::optional<TauResult> finish(std::optional<VertexSet> set) {
  if (!set) return std::nullopt;
  std::sort(set->begin(), set->end());
  return TauResult{static_cast<int>(set->size()), std::move(*set)};
}

}  // namespace

std::optional<TauResult> fvs(const Graph& g, std::optional<int> budget) {
  const int cap = budget ? *budget : g.order();
  if (cap < 0) return std::nullopt;
  return finish(fvs_minimize(Multigraph(g), cap));
}

std::optional<TauResult> oct(const Graph& g, std::optional<int> budget) {
  const int cap = budget ? *budget : g.order();
  if (cap < 0) return std::nullopt;
  Subgraph whole{g, std::vector<Vertex>(static_cast<std::size_t>(g.order()))};
  std::iota(whole.to_parent.begin(), whole.to_parent.end(), 0);
  return finish(oct_minimize(whole, cap));
}

}  // namespace cblock
