#include "cblock/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "cblock/errors.hpp"

namespace cblock {

namespace {

std::string edge_text(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

// Climbs parent pointers from x and y (equal depth) to their lowest common
// ancestor and returns the closed cycle x .. lca .. y.
std::vector<Vertex> cycle_through_lca(Vertex x, Vertex y, const std::vector<Vertex>& parent,
                                      const std::vector<int>& depth) {
  std::vector<Vertex> left{x};
  std::vector<Vertex> right{y};
  while (depth[left.back()] > depth[right.back()]) left.push_back(parent[left.back()]);
  while (depth[right.back()] > depth[left.back()]) right.push_back(parent[right.back()]);
  while (left.back() != right.back()) {
    left.push_back(parent[left.back()]);
    right.push_back(parent[right.back()]);
  }
  right.pop_back();
  std::reverse(right.begin(), right.end());
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int order) {
  if (order < 0) throw DomainError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(order));
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v)) throw DomainError("edge " + edge_text(e.u, e.v) + " out of range");
    if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw DomainError("duplicate edge");
    }
  }
  edge_count_ = edges.size();
}

Graph Graph::complete(int order) {
  Graph g(order);
  for (Vertex a = 0; a < order; ++a) {
    for (Vertex b = a + 1; b < order; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph Graph::path(int order) {
  Graph g(order);
  for (Vertex a = 0; a + 1 < order; ++a) g.add_edge(a, a + 1);
  return g;
}

Graph Graph::cycle(int order) {
  if (order < 3) throw DomainError("a cycle needs at least three vertices");
  Graph g = path(order);
  g.add_edge(0, order - 1);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex leaf = 1; leaf <= leaves; ++leaf) g.add_edge(0, leaf);
  return g;
}

Graph Graph::complete_bipartite(int left, int right) {
  Graph g(left + right);
  for (Vertex a = 0; a < left; ++a) {
    for (Vertex b = 0; b < right; ++b) g.add_edge(a, left + b);
  }
  return g;
}

int Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

int Graph::min_degree() const noexcept {
  if (adjacency_.empty()) return 0;
  std::size_t best = adjacency_.front().size();
  for (const auto& list : adjacency_) best = std::min(best, list.size());
  return static_cast<int>(best);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& list = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const Vertex other = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  return std::binary_search(list.begin(), list.end(), other);
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (!contains(a) || !contains(b)) throw DomainError("edge " + edge_text(a, b) + " out of range");
  if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
  if (has_edge(a, b)) throw DomainError("duplicate edge " + edge_text(a, b));
  auto& la = adjacency_[a];
  la.insert(std::lower_bound(la.begin(), la.end(), b), b);
  auto& lb = adjacency_[b];
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  ++edge_count_;
}

bool Graph::add_edge_if_absent(Vertex a, Vertex b) {
  if (a == b || has_edge(a, b)) return false;
  add_edge(a, b);
  return true;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return order() - 1;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < order(); ++a) {
    for (Vertex b : adjacency_[a]) {
      if (a < b) out.push_back({a, b});
    }
  }
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  EdgeSet edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), edges);
}

Graph subdivide(const Graph& g) {
  Graph out(g.order());
  for (const Edge& e : g.edges()) {
    const Vertex mid = out.add_vertex();
    out.add_edge(e.u, mid);
    out.add_edge(mid, e.v);
  }
  return out;
}

ContractionResult contract(const Graph& g, std::span<const Edge> f) {
  DisjointSets sets(g.order());
  for (const Edge& e : f) {
    if (!g.has_edge(e.u, e.v)) throw DomainError("edge " + edge_text(e.u, e.v) + " is not in the graph");
    sets.unite(e.u, e.v);
  }
  ContractionResult result;
  result.vmap.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> class_id(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int root = sets.find(v);
    if (class_id[root] < 0) class_id[root] = next++;
    result.vmap[v] = class_id[root];
  }
  EdgeSet edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    const Vertex a = result.vmap[e.u];
    const Vertex b = result.vmap[e.v];
    if (a != b) edges.push_back(make_edge(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  result.quotient = Graph(next, edges);
  return result;
}

ContractionResult contract(const Graph& g, Edge e) {
  const Edge single[] = {e};
  return contract(g, single);
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  Subgraph out;
  out.to_parent.assign(keep.begin(), keep.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const Vertex v = out.to_parent[i];
    if (!g.contains(v)) throw DomainError("vertex " + std::to_string(v) + " out of range");
    index[v] = static_cast<Vertex>(i);
  }
  EdgeSet edges;
  for (Vertex v : out.to_parent) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && index[w] >= 0) edges.push_back({index[v], index[w]});
    }
  }
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

Subgraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
  std::vector<char> dropped(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : drop) {
    if (g.contains(v)) dropped[v] = 1;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet component;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

BipartitionResult bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, -1);
  Bipartition split;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (depth[s] >= 0) continue;
    depth[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (depth[y] % 2 == depth[x] % 2) {
          return OddCycle{cycle_through_lca(x, y, parent, depth)};
        }
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) (depth[v] % 2 == 0 ? split.left : split.right).push_back(v);
  return split;
}

bool is_bipartite(const Graph& g) { return std::holds_alternative<Bipartition>(bipartition(g)); }

std::optional<std::vector<Vertex>> shortest_odd_cycle(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::optional<std::vector<Vertex>> best;
  std::vector<int> depth(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(depth.begin(), depth.end(), -1);
    queue.assign(1, s);
    depth[s] = 0;
    parent[s] = -1;
    bool found = false;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
      const Vertex x = queue[head];
      if (best && 2 * depth[x] + 1 >= static_cast<int>(best->size())) break;
      for (Vertex y : g.neighbors(x)) {
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (depth[y] == depth[x]) {
          auto cycle = cycle_through_lca(x, y, parent, depth);
          if (!best || cycle.size() < best->size()) best = std::move(cycle);
          found = true;
          break;
        }
      }
    }
    if (best && best->size() == 3) break;
  }
  return best;
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::optional<std::vector<Vertex>> best;
  std::vector<int> depth(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(depth.begin(), depth.end(), -1);
    queue.assign(1, s);
    depth[s] = 0;
    parent[s] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      if (best && 2 * depth[x] + 1 >= static_cast<int>(best->size())) break;
      for (Vertex y : g.neighbors(x)) {
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x] && parent[y] != x && depth[y] >= depth[x]) {
          // Lift the deeper endpoint so both sit at the same depth.
          std::vector<Vertex> cycle;
          if (depth[y] == depth[x]) {
            cycle = cycle_through_lca(x, y, parent, depth);
          } else {
            cycle = cycle_through_lca(x, parent[y], parent, depth);
            cycle.push_back(y);
          }
          if (!best || cycle.size() < best->size()) best = std::move(cycle);
        }
      }
    }
    if (best && best->size() == 3) break;
  }
  return best;
}

bool is_star(const Graph& g) {
  if (!is_connected(g)) throw DomainError("is_star expects a connected graph");
  if (g.size() == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (static_cast<std::size_t>(g.degree(v)) == g.size()) return true;
  }
  return false;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex from, Vertex to) {
  if (!g.contains(from) || !g.contains(to)) throw DomainError("shortest_path endpoint out of range");
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
  std::deque<Vertex> queue{from};
  parent[from] = -1;
  while (!queue.empty() && parent[to] == -2) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (parent[to] == -2) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

EdgeSet bfs_spanning_forest(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> member(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : vertices) member[v] = 1;
  VertexSet order(vertices.begin(), vertices.end());
  std::sort(order.begin(), order.end());
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  EdgeSet forest;
  std::deque<Vertex> queue;
  for (Vertex s : order) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (member[y] && !seen[y]) {
          seen[y] = 1;
          forest.push_back(make_edge(x, y));
          queue.push_back(y);
        }
      }
    }
  }
  return forest;
}

VertexSet endpoints(std::span<const Edge> f) {
  VertexSet out;
  for (const Edge& e : f) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeSet edges_by_degree(const Graph& g) {
  EdgeSet out = g.edges();
  std::stable_sort(out.begin(), out.end(), [&](const Edge& a, const Edge& b) {
    return g.degree(a.u) + g.degree(a.v) > g.degree(b.u) + g.degree(b.v);
  });
  return out;
}

}  // namespace cblock
