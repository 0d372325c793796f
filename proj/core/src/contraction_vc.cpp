#include "cblock/contraction_vc.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "cblock/errors.hpp"
#include "cblock/vertex_cover.hpp"
#include "combinations.hpp"

namespace cblock {

std::string_view to_string(Trace trace) {
  switch (trace) {
    case Trace::TrivialNo: return "trivial-no";
    case Trace::BcLarge: return "bc-large";
    case Trace::SmallComponents: return "small-components";
    case Trace::Lemma3Budget: return "lemma3-budget";
    case Trace::EnumerationYes: return "enumeration-yes";
    case Trace::EnumerationNo: return "enumeration-no";
  }
  return "unknown";
}

namespace {

VertexSet unique_sorted(VertexSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

int cover_size(const Graph& g) { return vc_branching(g)->size; }

// Smallest original edge joining the classes `a` and `b` of the quotient.
Edge lift_edge(const Graph& g, const std::vector<Vertex>& vmap, Edge quotient_edge) {
  for (const Edge& e : g.edges()) {
    if (vmap[e.u] == vmap[e.v]) continue;
    if (make_edge(vmap[e.u], vmap[e.v]) == quotient_edge) return e;
  }
  throw std::logic_error("lift_edge: quotient edge has no preimage");
}

// Vertices of original components that contain an edge; used to reject
// contraction sets that collapse such a component to a single vertex.
struct CollapseGuard {
  std::vector<VertexSet> components;

  explicit CollapseGuard(const Graph& g) {
    for (auto& c : connected_components(g)) {
      if (c.size() > 1) components.push_back(std::move(c));
    }
  }

  bool collapses(const std::vector<Vertex>& vmap) const {
    for (const auto& c : components) {
      const Vertex head = vmap[c.front()];
      if (std::all_of(c.begin(), c.end(), [&](Vertex v) { return vmap[v] == head; })) return true;
    }
    return false;
  }
};

// Cover of size vc - d built from a minimum cover X: d edges of a BFS
// spanning forest of G[X]. Requires the forest to have at least d edges.
EdgeSet cover_forest_witness(const Graph& g, int d) {
  const CoverResult x = *vc_branching(g);
  EdgeSet forest = bfs_spanning_forest(g, x.cover);
  std::sort(forest.begin(), forest.end());
  if (static_cast<int>(forest.size()) < d) throw std::logic_error("cover forest too small");
  forest.resize(static_cast<std::size_t>(d));
  return forest;
}

struct ComponentInfo {
  Subgraph sub;
  int cover = 0;
};

// Components of g with their vc; vc is capped at cap + 1 (cheaper search).
std::vector<ComponentInfo> components_with_cover(const Graph& g, int cap) {
  std::vector<ComponentInfo> out;
  for (const auto& c : connected_components(g)) {
    ComponentInfo info{induced_subgraph(g, c), 0};
    const auto cover = vc_branching(info.sub.graph, cap);
    info.cover = cover ? cover->size : cap + 1;
    out.push_back(std::move(info));
  }
  return out;
}

EdgeSet to_parent(const Subgraph& sub, std::span<const Edge> f) {
  EdgeSet out;
  for (const Edge& e : f) out.push_back(make_edge(sub.to_parent[e.u], sub.to_parent[e.v]));
  return out;
}

std::optional<EdgeSet> dp_over(const std::vector<ComponentInfo>& comps, int d, BoundaryConvention convention) {
  constexpr int inf = std::numeric_limits<int>::max() / 4;
  const int p = static_cast<int>(comps.size());
  // opt[i][q] and its witness, computed lazily in q order.
  std::vector<std::vector<std::optional<EdgeSet>>> opt(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) {
    for (int q = 0; q <= d; ++q) {
      opt[i].push_back(q > comps[i].cover ? std::nullopt
                                          : component_opt_witness(comps[i].sub.graph, q, convention));
    }
  }
  auto cost = [&](int i, int q) { return opt[i][q] ? static_cast<int>(opt[i][q]->size()) : inf; };

  std::vector<std::vector<int>> dp(static_cast<std::size_t>(p + 1), std::vector<int>(static_cast<std::size_t>(d + 1), inf));
  std::vector<std::vector<int>> choice(dp.size(), std::vector<int>(static_cast<std::size_t>(d + 1), 0));
  for (int i = 0; i <= p; ++i) dp[i][0] = 0;
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= d; ++j) {
      for (int q = 0; q <= j; ++q) {
        if (dp[i - 1][j - q] >= inf || cost(i - 1, q) >= inf) continue;
        const int value = dp[i - 1][j - q] + cost(i - 1, q);
        if (value < dp[i][j]) {
          dp[i][j] = value;
          choice[i][j] = q;
        }
      }
    }
  }
  if (dp[p][d] >= inf) return std::nullopt;
  EdgeSet witness;
  for (int i = p, j = d; i > 0; --i) {
    const int q = choice[i][j];
    if (q > 0) {
      const EdgeSet part = to_parent(comps[i - 1].sub, *opt[i - 1][q]);
      witness.insert(witness.end(), part.begin(), part.end());
    }
    j -= q;
  }
  std::sort(witness.begin(), witness.end());
  return witness;
}

std::optional<int> size_of(const std::optional<EdgeSet>& f) {
  if (!f) return std::nullopt;
  return static_cast<int>(f->size());
}

}  // namespace

Decision contraction_vc_1(const Graph& g) {
  if (!is_bipartite(g)) {
    const CoverResult x = *vc_branching(g);
    std::vector<char> in_cover(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : x.cover) in_cover[v] = 1;
    for (const Edge& e : g.edges()) {
      if (in_cover[e.u] && in_cover[e.v]) return {true, EdgeSet{e}, Trace::BcLarge};
    }
    throw std::logic_error("contraction_vc_1: minimum cover of a non-bipartite graph is independent");
  }
  bool all_stars = true;
  for (const auto& c : connected_components(g)) {
    if (c.size() > 1 && !is_star(induced_subgraph(g, c).graph)) all_stars = false;
  }
  const int vc = vc_bipartite(g).size;
  for (const Edge& e : edges_by_degree(g)) {
    if (vc_after_contraction(g, e) < vc) {
      return {true, EdgeSet{e}, all_stars ? Trace::SmallComponents : Trace::EnumerationYes};
    }
  }
  return {false, std::nullopt, all_stars ? Trace::SmallComponents : Trace::EnumerationNo};
}

DropPlan two_approx_drop(const Graph& g, std::span<const Vertex> component, int d) {
  const VertexSet comp = unique_sorted(VertexSet(component.begin(), component.end()));
  const auto components = connected_components(g);
  if (std::find(components.begin(), components.end(), comp) == components.end()) {
    throw DomainError("two_approx_drop: not a connected component");
  }
  if (d < 1) throw DomainError("two_approx_drop: d must be positive");
  const int start = cover_size(induced_subgraph(g, comp).graph);
  if (start <= d) throw DomainError("two_approx_drop: component vertex cover number is at most d");

  DropPlan plan;
  plan.cover_sizes.push_back(start);
  for (int round = 0; round < d; ++round) {
    const ContractionResult q = contract(g, plan.edges);
    VertexSet image;
    for (Vertex v : comp) image.push_back(q.vmap[v]);
    image = unique_sorted(std::move(image));
    const Subgraph sub = induced_subgraph(q.quotient, image);
    const CoverResult x = *vc_branching(sub.graph);
    std::vector<char> in_cover(static_cast<std::size_t>(sub.graph.order()), 0);
    for (Vertex v : x.cover) in_cover[v] = 1;

    std::vector<Edge> path;
    for (const Edge& e : sub.graph.edges()) {
      if (in_cover[e.u] && in_cover[e.v]) {
        path.push_back(e);
        break;
      }
    }
    for (Vertex w = 0; path.empty() && w < sub.graph.order(); ++w) {
      if (in_cover[w]) continue;
      std::vector<Vertex> hits;
      for (Vertex y : sub.graph.neighbors(w)) {
        if (in_cover[y]) hits.push_back(y);
      }
      if (hits.size() >= 2) {
        path.push_back(make_edge(hits[0], w));
        path.push_back(make_edge(w, hits[1]));
      }
    }
    if (path.empty()) throw std::logic_error("two_approx_drop: no cover pair within distance two");
    for (const Edge& e : path) {
      const Edge in_quotient = make_edge(sub.to_parent[e.u], sub.to_parent[e.v]);
      plan.edges.push_back(lift_edge(g, q.vmap, in_quotient));
    }

    const ContractionResult next = contract(g, plan.edges);
    VertexSet next_image;
    for (Vertex v : comp) next_image.push_back(next.vmap[v]);
    const int now = cover_size(induced_subgraph(next.quotient, unique_sorted(std::move(next_image))).graph);
    if (now >= plan.cover_sizes.back()) throw std::logic_error("two_approx_drop: round did not lower the cover");
    plan.cover_sizes.push_back(now);
  }
  return plan;
}

std::optional<EdgeSet> component_opt_witness(const Graph& c, int d_prime, BoundaryConvention convention) {
  if (d_prime <= 0) return EdgeSet{};
  const int vc = cover_size(c);
  if (vc < d_prime) return std::nullopt;
  if (vc == d_prime) {
    if (convention == BoundaryConvention::Paper) return std::nullopt;
    if (!is_connected(c)) throw DomainError("component_opt: graph is not connected");
    VertexSet all(static_cast<std::size_t>(c.order()));
    for (Vertex v = 0; v < c.order(); ++v) all[v] = v;
    EdgeSet tree = bfs_spanning_forest(c, all);
    std::sort(tree.begin(), tree.end());
    return tree;
  }
  const EdgeSet edges = c.edges();
  const int m = static_cast<int>(edges.size());
  const int target = vc - d_prime;
  const CollapseGuard guard(c);
  for (int size = d_prime; size <= std::min(2 * d_prime, m); ++size) {
    EdgeSet found;
    const bool hit = detail::for_each_combination(m, size, [&](std::span<const int> pick) {
      EdgeSet f;
      for (int i : pick) f.push_back(edges[i]);
      const ContractionResult q = contract(c, f);
      if (convention == BoundaryConvention::Paper && guard.collapses(q.vmap)) return false;
      if (!vc_branching(q.quotient, target)) return false;
      found = std::move(f);
      return true;
    });
    if (hit) return found;
  }
  throw std::logic_error("component_opt: no set within the 2d bound");
}

std::optional<int> component_opt(const Graph& c, int d_prime, BoundaryConvention convention) {
  return size_of(component_opt_witness(c, d_prime, convention));
}

std::optional<EdgeSet> dp_min_contract_witness(const Graph& g, int d, BoundaryConvention convention) {
  if (d <= 0) return EdgeSet{};
  const auto comps = components_with_cover(g, d);
  for (const auto& info : comps) {
    if (info.cover > d) throw DomainError("dp_min_contract: a component has vertex cover number above d");
  }
  return dp_over(comps, d, convention);
}

std::optional<int> dp_min_contract(const Graph& g, int d, BoundaryConvention convention) {
  return size_of(dp_min_contract_witness(g, d, convention));
}

Decision algorithm1(const Graph& g, int k, int d, const Algorithm1Options& options) {
  if (d <= 0) return {true, EdgeSet{}, Trace::SmallComponents};
  if (k < d) return {false, std::nullopt, Trace::TrivialNo};

  const auto small_bc = bc_decide(g, d - 1, options.bc_strategy);
  if (!small_bc) return {true, cover_forest_witness(g, d), Trace::BcLarge};

  const auto comps = components_with_cover(g, d);
  const auto large = std::find_if(comps.begin(), comps.end(), [&](const ComponentInfo& c) { return c.cover > d; });
  if (large == comps.end()) {
    const auto best = dp_over(comps, d, options.convention);
    if (best && static_cast<int>(best->size()) <= k) return {true, best, Trace::SmallComponents};
    return {false, std::nullopt, Trace::SmallComponents};
  }
  if (k >= 2 * d) {
    const VertexSet& comp = large->sub.to_parent;
    EdgeSet f = two_approx_drop(g, comp, d).edges;
    std::sort(f.begin(), f.end());
    return {true, std::move(f), Trace::Lemma3Budget};
  }

  const VertexSet base_modulator = endpoints(*small_bc);
  const int vc = vc_with_modulator(g, base_modulator).size;
  const int target = vc - d;
  const EdgeSet edges = edges_by_degree(g);
  const int m = static_cast<int>(edges.size());
  const CollapseGuard guard(g);
  for (int size = d; size <= std::min(k, m); ++size) {
    EdgeSet found;
    const bool hit = detail::for_each_combination(m, size, [&](std::span<const int> pick) {
      EdgeSet f;
      for (int i : pick) f.push_back(edges[i]);
      const ContractionResult q = contract(g, f);
      if (options.convention == BoundaryConvention::Paper && guard.collapses(q.vmap)) return false;
      VertexSet modulator;
      for (Vertex v : base_modulator) modulator.push_back(q.vmap[v]);
      for (const Edge& e : f) modulator.push_back(q.vmap[e.u]);
      if (vc_with_modulator(q.quotient, unique_sorted(std::move(modulator))).size > target) return false;
      found = std::move(f);
      return true;
    });
    if (hit) return {true, std::move(found), Trace::EnumerationYes};
  }
  return {false, std::nullopt, Trace::EnumerationNo};
}

Approximation min_contract_2approx(const Graph& g, int d, BoundaryConvention convention) {
  if (d <= 0) return {0, {}, true};
  const int vc = cover_size(g);
  if (vc < d) return {std::nullopt, {}, true};
  const auto small_bc = bc_decide(g, d - 1);
  if (!small_bc) return {d, cover_forest_witness(g, d), true};
  const auto comps = components_with_cover(g, d);
  const auto large = std::find_if(comps.begin(), comps.end(), [&](const ComponentInfo& c) { return c.cover > d; });
  if (large == comps.end()) {
    auto best = dp_over(comps, d, convention);
    if (!best) return {std::nullopt, {}, true};
    const int value = static_cast<int>(best->size());
    return {value, std::move(*best), true};
  }
  EdgeSet f = two_approx_drop(g, large->sub.to_parent, d).edges;
  std::sort(f.begin(), f.end());
  const int value = static_cast<int>(f.size());
  return {value, std::move(f), false};
}

std::optional<EdgeSet> brute_min_contract_witness(const Graph& g, int d, int cap, BoundaryConvention convention) {
  if (d <= 0) return EdgeSet{};
  const int target = cover_size(g) - d;
  if (target < 0) return std::nullopt;
  const EdgeSet edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const CollapseGuard guard(g);
  for (int size = d; size <= std::min(cap, m); ++size) {
    EdgeSet found;
    const bool hit = detail::for_each_combination(m, size, [&](std::span<const int> pick) {
      EdgeSet f;
      for (int i : pick) f.push_back(edges[i]);
      const ContractionResult q = contract(g, f);
      if (convention == BoundaryConvention::Paper && guard.collapses(q.vmap)) return false;
      if (!vc_branching(q.quotient, target)) return false;
      found = std::move(f);
      return true;
    });
    if (hit) return found;
  }
  return std::nullopt;
}

std::optional<int> brute_min_contract(const Graph& g, int d, int cap, BoundaryConvention convention) {
  return size_of(brute_min_contract_witness(g, d, cap, convention));
}

}  // namespace cblock
