#include "cblock/containment.hpp"

#include <algorithm>
#include <deque>

#include "cblock/errors.hpp"

namespace cblock {

namespace {

// Pattern vertices in BFS order; parent[i] is the position of an earlier
// neighbor of order[i], or -1 for the first vertex of a component.
struct PatternOrder {
  std::vector<Vertex> order;
  std::vector<int> parent;
};

PatternOrder pattern_order(const Graph& h) {
  PatternOrder out;
  std::vector<int> position(static_cast<std::size_t>(h.order()), -1);
  for (Vertex root = 0; root < h.order(); ++root) {
    if (position[root] >= 0) continue;
    position[root] = static_cast<int>(out.order.size());
    out.order.push_back(root);
    out.parent.push_back(-1);
    for (std::size_t i = out.order.size() - 1; i < out.order.size(); ++i) {
      for (Vertex y : h.neighbors(out.order[i])) {
        if (position[y] >= 0) continue;
        position[y] = static_cast<int>(out.order.size());
        out.order.push_back(y);
        out.parent.push_back(static_cast<int>(i));
      }
    }
  }
  return out;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, const Graph& h, bool induced,
                  const std::function<bool(const std::vector<Vertex>&)>& visit)
      : g_(g), h_(h), induced_(induced), visit_(visit), plan_(pattern_order(h)),
        map_(static_cast<std::size_t>(h.order()), -1), used_(static_cast<std::size_t>(g.order()), 0) {}

  bool run() { return extend(0); }

 private:
  bool fits(std::size_t idx, Vertex x) const {
    const Vertex p = plan_.order[idx];
    if (used_[x] || g_.degree(x) < h_.degree(p)) return false;
    for (std::size_t j = 0; j < idx; ++j) {
      const Vertex q = plan_.order[j];
      const bool want = h_.has_edge(p, q);
      if (want && !g_.has_edge(x, map_[q])) return false;
      if (!want && induced_ && g_.has_edge(x, map_[q])) return false;
    }
    return true;
  }

  bool place(std::size_t idx, Vertex x) {
    const Vertex p = plan_.order[idx];
    map_[p] = x;
    used_[x] = 1;
    const bool stop = extend(idx + 1);
    used_[x] = 0;
    map_[p] = -1;
    return stop;
  }

  bool extend(std::size_t idx) {
    if (idx == plan_.order.size()) return visit_(map_);
    const int parent = plan_.parent[idx];
    if (parent < 0) {
      for (Vertex x = 0; x < g_.order(); ++x) {
        if (fits(idx, x) && place(idx, x)) return true;
      }
      return false;
    }
    for (Vertex x : g_.neighbors(map_[plan_.order[parent]])) {
      if (fits(idx, x) && place(idx, x)) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  bool induced_;
  const std::function<bool(const std::vector<Vertex>&)>& visit_;
  PatternOrder plan_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

// Iteratively removes vertices of degree at most one.
Subgraph two_core(const Graph& g) {
  std::vector<int> degree(static_cast<std::size_t>(g.order()));
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < g.order(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) {
      gone[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(v)) {
      if (!gone[y] && --degree[y] <= 1) {
        gone[y] = 1;
        stack.push_back(y);
      }
    }
  }
  VertexSet drop;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (gone[v]) drop.push_back(v);
  }
  return remove_vertices(g, drop);
}

// Enumerates connected vertex sets of a fixed size, each exactly once
// (extension-by-exclusive-neighborhood scheme).
class ConnectedSets {
 public:
  ConnectedSets(const Graph& g, int size, const std::function<bool(const VertexSet&)>& visit)
      : g_(g), size_(size), visit_(visit), in_sub_(static_cast<std::size_t>(g.order()), 0),
        near_(static_cast<std::size_t>(g.order()), 0) {}

  bool run() {
    for (Vertex v = 0; v < g_.order(); ++v) {
      std::vector<Vertex> ext;
      for (Vertex w : g_.neighbors(v)) {
        if (w > v) ext.push_back(w);
      }
      sub_ = {v};
      mark(v, +1);
      const bool stop = extend(ext, v);
      mark(v, -1);
      if (stop) return true;
    }
    return false;
  }

 private:
  void mark(Vertex v, int delta) {
    in_sub_[v] = delta > 0;
    near_[v] += delta;
    for (Vertex y : g_.neighbors(v)) near_[y] += delta;
  }

  bool extend(std::vector<Vertex> ext, Vertex root) {
    if (static_cast<int>(sub_.size()) == size_) {
      VertexSet sorted = sub_;
      std::sort(sorted.begin(), sorted.end());
      return visit_(sorted);
    }
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g_.neighbors(w)) {
        if (u > root && near_[u] == 0) next.push_back(u);
      }
      sub_.push_back(w);
      mark(w, +1);
      const bool stop = extend(std::move(next), root);
      mark(w, -1);
      sub_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  int size_;
  const std::function<bool(const VertexSet&)>& visit_;
  std::vector<Vertex> sub_;
  std::vector<char> in_sub_;
  std::vector<int> near_;
};

bool connected_within(const Graph& g, const VertexSet& set) {
  if (set.empty()) return false;
  std::vector<Vertex> seen{set.front()};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (Vertex y : g.neighbors(seen[i])) {
      if (std::binary_search(set.begin(), set.end(), y) && std::find(seen.begin(), seen.end(), y) == seen.end()) {
        seen.push_back(y);
      }
    }
  }
  return seen.size() == set.size();
}

bool sets_touch(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex x : a) {
    for (Vertex y : g.neighbors(x)) {
      if (std::binary_search(b.begin(), b.end(), y)) return true;
    }
  }
  return false;
}

// Splits `u` into h.order() labeled connected branch sets covering all of u.
class BranchSetPartition {
 public:
  BranchSetPartition(const Graph& g, const Graph& h, const VertexSet& u)
      : g_(g), h_(h), u_(u), label_(u.size(), -1), count_(static_cast<std::size_t>(h.order()), 0) {}

  std::optional<MinorModel> run() {
    if (assign(0, h_.order())) return model_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t i, int empty_labels) {
    if (static_cast<int>(u_.size() - i) < empty_labels) return false;
    if (i == u_.size()) return check();
    for (int l = 0; l < h_.order(); ++l) {
      label_[i] = l;
      const int empty_after = empty_labels - (count_[l] == 0 ? 1 : 0);
      ++count_[l];
      const bool ok = assign(i + 1, empty_after);
      --count_[l];
      if (ok) return true;
    }
    label_[i] = -1;
    return false;
  }

  bool check() {
    std::vector<VertexSet> sets(static_cast<std::size_t>(h_.order()));
    for (std::size_t i = 0; i < u_.size(); ++i) sets[label_[i]].push_back(u_[i]);
    for (const auto& s : sets) {
      if (!connected_within(g_, s)) return false;
    }
    for (const Edge& e : h_.edges()) {
      if (!sets_touch(g_, sets[e.u], sets[e.v])) return false;
    }
    model_.branch_sets = std::move(sets);
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  const VertexSet& u_;
  std::vector<int> label_;
  std::vector<int> count_;
  MinorModel model_;
};

std::optional<MinorModel> find_minor(const Graph& g, const Graph& h) {
  if (h.order() == 0) return MinorModel{};
  if (!is_connected(h)) throw DomainError("minor containment needs a connected pattern");
  if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
  Subgraph host{g, {}};
  host.to_parent.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) host.to_parent[v] = v;
  if (h.min_degree() >= 2) host = two_core(g);
  const Graph& core = host.graph;
  for (int s = h.order(); s <= core.order(); ++s) {
    std::optional<MinorModel> found;
    const std::function<bool(const VertexSet&)> visit = [&](const VertexSet& u) {
      found = BranchSetPartition(core, h, u).run();
      return found.has_value();
    };
    if (ConnectedSets(core, s, visit).run()) {
      for (auto& set : found->branch_sets) {
        for (Vertex& v : set) v = host.to_parent[v];
        std::sort(set.begin(), set.end());
      }
      return found;
    }
  }
  return std::nullopt;
}

class TopologicalSearch {
 public:
  TopologicalSearch(const Graph& g, const Graph& h)
      : g_(g), h_(h), edges_(h.edges()), branch_(static_cast<std::size_t>(h.order()), -1),
        used_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<TopologicalModel> run() {
    for (int extra = 0; extra <= g_.order() - h_.order(); ++extra) {
      extra_ = extra;
      if (place(0)) return found_;
    }
    return std::nullopt;
  }

 private:
  bool place(int a) {
    if (a == h_.order()) return route(0, extra_);
    for (Vertex x = 0; x < g_.order(); ++x) {
      if (used_[x] || g_.degree(x) < h_.degree(a)) continue;
      bool ok = true;
      for (Vertex b : h_.neighbors(a)) {
        if (b < a && extra_ == 0 && !g_.has_edge(x, branch_[b])) ok = false;
      }
      if (!ok) continue;
      branch_[a] = x;
      used_[x] = 1;
      const bool stop = place(a + 1);
      used_[x] = 0;
      branch_[a] = -1;
      if (stop) return true;
    }
    return false;
  }

  bool route(std::size_t idx, int budget) {
    if (idx == edges_.size()) {
      found_ = TopologicalModel{branch_, paths_};
      return true;
    }
    const Vertex from = branch_[edges_[idx].u];
    const Vertex to = branch_[edges_[idx].v];
    std::vector<Vertex> path{from};
    return walk(idx, path, to, budget);
  }

  bool walk(std::size_t idx, std::vector<Vertex>& path, Vertex to, int budget) {
    const Vertex at = path.back();
    if (g_.has_edge(at, to)) {
      path.push_back(to);
      paths_.push_back(path);
      if (route(idx + 1, budget)) return true;
      paths_.pop_back();
      path.pop_back();
    }
    if (budget == 0) return false;
    for (Vertex y : g_.neighbors(at)) {
      if (used_[y]) continue;
      used_[y] = 1;
      path.push_back(y);
      const bool stop = walk(idx, path, to, budget - 1);
      path.pop_back();
      used_[y] = 0;
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  EdgeSet edges_;
  std::vector<Vertex> branch_;
  std::vector<char> used_;
  std::vector<std::vector<Vertex>> paths_;
  TopologicalModel found_;
  int extra_ = 0;
};

std::optional<TopologicalModel> find_topological_minor(const Graph& g, const Graph& h) {
  if (h.order() == 0) return TopologicalModel{};
  if (!is_connected(h)) throw DomainError("topological minor containment needs a connected pattern");
  if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
  if (h.min_degree() >= 2) {
    const Subgraph core = two_core(g);
    auto model = TopologicalSearch(core.graph, h).run();
    if (!model) return std::nullopt;
    for (Vertex& v : model->branch) v = core.to_parent[v];
    for (auto& path : model->paths) {
      for (Vertex& v : path) v = core.to_parent[v];
    }
    return model;
  }
  return TopologicalSearch(g, h).run();
}

}  // namespace

void for_each_embedding(const Graph& g, const Graph& h, Relation rel,
                        const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (rel != Relation::Subgraph && rel != Relation::InducedSubgraph) {
    throw DomainError("for_each_embedding: relation must be subgraph or induced subgraph");
  }
  if (h.order() > g.order()) return;
  EmbeddingSearch(g, h, rel == Relation::InducedSubgraph, visit).run();
}

std::optional<Occurrence> contains(const Graph& g, const Graph& h, Relation rel) {
  switch (rel) {
    case Relation::Subgraph:
    case Relation::InducedSubgraph: {
      std::optional<Occurrence> found;
      for_each_embedding(g, h, rel, [&](const std::vector<Vertex>& map) {
        found = Embedding{map};
        return true;
      });
      return found;
    }
    case Relation::Minor:
      if (auto m = find_minor(g, h)) return Occurrence{std::move(*m)};
      return std::nullopt;
    case Relation::TopologicalMinor:
      if (auto m = find_topological_minor(g, h)) return Occurrence{std::move(*m)};
      return std::nullopt;
  }
  return std::nullopt;
}

VertexSet occurrence_vertices(const Occurrence& occ) {
  VertexSet out;
  if (const auto* e = std::get_if<Embedding>(&occ)) {
    out = e->map;
  } else if (const auto* m = std::get_if<MinorModel>(&occ)) {
    for (const auto& s : m->branch_sets) out.insert(out.end(), s.begin(), s.end());
  } else {
    const auto& t = std::get<TopologicalModel>(occ);
    out = t.branch;
    for (const auto& p : t.paths) out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_valid_occurrence(const Graph& g, const Graph& h, Relation rel, const Occurrence& occ) {
  const int p = h.order();
  auto distinct_in_range = [&](const std::vector<Vertex>& vs) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : vs) {
      if (!g.contains(v) || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  if (const auto* e = std::get_if<Embedding>(&occ)) {
    if (rel != Relation::Subgraph && rel != Relation::InducedSubgraph) return false;
    if (static_cast<int>(e->map.size()) != p || !distinct_in_range(e->map)) return false;
    for (Vertex a = 0; a < p; ++a) {
      for (Vertex b = a + 1; b < p; ++b) {
        const bool in_h = h.has_edge(a, b);
        const bool in_g = g.has_edge(e->map[a], e->map[b]);
        if (in_h && !in_g) return false;
        if (!in_h && in_g && rel == Relation::InducedSubgraph) return false;
      }
    }
    return true;
  }
  if (const auto* m = std::get_if<MinorModel>(&occ)) {
    if (rel != Relation::Minor || static_cast<int>(m->branch_sets.size()) != p) return false;
    std::vector<Vertex> all;
    for (const auto& s : m->branch_sets) {
      if (!std::is_sorted(s.begin(), s.end()) || !connected_within(g, s)) return false;
      all.insert(all.end(), s.begin(), s.end());
    }
    if (!distinct_in_range(all)) return false;
    for (const Edge& e : h.edges()) {
      if (!sets_touch(g, m->branch_sets[e.u], m->branch_sets[e.v])) return false;
    }
    return true;
  }
  const auto& t = std::get<TopologicalModel>(occ);
  const EdgeSet edges = h.edges();
  if (rel != Relation::TopologicalMinor || static_cast<int>(t.branch.size()) != p || t.paths.size() != edges.size()) {
    return false;
  }
  std::vector<Vertex> all = t.branch;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& path = t.paths[i];
    if (path.size() < 2 || path.front() != t.branch[edges[i].u] || path.back() != t.branch[edges[i].v]) return false;
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
      if (!g.contains(path[j]) || !g.contains(path[j + 1]) || !g.has_edge(path[j], path[j + 1])) return false;
    }
    all.insert(all.end(), path.begin() + 1, path.end() - 1);
  }
  return distinct_in_range(all);
}

}  // namespace cblock
