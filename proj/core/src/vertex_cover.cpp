#include "cblock/vertex_cover.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "bits.hpp"
#include "cblock/errors.hpp"

namespace cblock {

namespace {

template <class Bits>
class CoverSearch {
 public:
  CoverSearch(const Graph& g, int best_size) : n_(g.order()), best_size_(best_size), best_(n_) {
    adjacency_.reserve(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      Bits row(static_cast<std::size_t>(n_));
      for (Vertex w : g.neighbors(v)) row.set(w);
      adjacency_.push_back(row);
    }
  }

  void run() {
    Bits alive(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) alive.set(v);
    search(alive, Bits(static_cast<std::size_t>(n_)), 0);
  }

  bool found() const { return found_; }
  int best_size() const { return best_size_; }

  VertexSet best_cover() const {
    VertexSet out;
    best_.for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  void record(const Bits& cover, int size) {
    if (size < best_size_) {
      best_size_ = size;
      best_ = cover;
      found_ = true;
    }
  }

  void search(Bits alive, Bits cover, int size) {
    bool changed = true;
    while (changed) {
      changed = false;
      if (size >= best_size_) return;
      const int slack = best_size_ - 1 - size;
      Bits snapshot = alive;
      snapshot.for_each([&](int v) {
        if (!alive.test(v)) return;
        const Bits nb = adjacency_[v] & alive;
        const int d = nb.count();
        if (d == 0) {
          alive.reset(v);
        } else if (d == 1) {
          const int u = nb.first();
          cover.set(u);
          ++size;
          alive.reset(u);
          alive.reset(v);
          changed = true;
        } else if (d > slack) {
          cover.set(v);
          ++size;
          alive.reset(v);
          changed = true;
        }
      });
    }
    if (size >= best_size_) return;
    if (!alive.any()) {
      record(cover, size);
      return;
    }

    // Greedy maximal matching as a lower bound; also find a max-degree vertex.
    Bits unmatched = alive;
    int matching = 0;
    int pivot = -1;
    int pivot_degree = -1;
    alive.for_each([&](int v) {
      const Bits nb = adjacency_[v] & alive;
      const int d = nb.count();
      if (d > pivot_degree) {
        pivot_degree = d;
        pivot = v;
      }
      if (unmatched.test(v)) {
        const int u = (nb & unmatched).first();
        if (u >= 0) {
          unmatched.reset(u);
          unmatched.reset(v);
          ++matching;
        }
      }
    });
    if (size + matching >= best_size_) return;

    if (pivot_degree <= 2) {
      solve_cycles(alive, cover, size);
      return;
    }

    Bits with_pivot = cover;
    with_pivot.set(pivot);
    Bits rest = alive;
    rest.reset(pivot);
    search(rest, with_pivot, size + 1);

    const Bits nb = adjacency_[pivot] & alive;
    Bits with_neighbors = cover | nb;
    Bits rest2 = alive;
    rest2.subtract(nb);
    rest2.reset(pivot);
    search(rest2, with_neighbors, size + pivot_degree);
  }

  // Every alive vertex has degree exactly 2 here, so the graph is a union of
  // cycles; take every second vertex of each cycle.
  void solve_cycles(Bits alive, Bits cover, int size) {
    while (alive.any()) {
      const int start = alive.first();
      int prev = -1;
      int cur = start;
      for (int index = 0; cur >= 0; ++index) {
        if (index % 2 == 0) {
          cover.set(cur);
          ++size;
        }
        alive.reset(cur);
        int next = -1;
        (adjacency_[cur] & alive).for_each([&](int w) {
          if (next < 0 && w != prev) next = w;
        });
        prev = cur;
        cur = next;
      }
    }
    record(cover, size);
  }

  int n_;
  std::vector<Bits> adjacency_;
  int best_size_;
  Bits best_;
  bool found_ = false;
};

struct Sides {
  std::vector<char> is_left;
};

Sides sides_or_throw(const Graph& g, const char* what) {
  const auto split = bipartition(g);
  const auto* parts = std::get_if<Bipartition>(&split);
  if (!parts) throw DomainError(std::string(what) + " requires a bipartite graph");
  Sides s;
  s.is_left.assign(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : parts->left) s.is_left[v] = 1;
  return s;
}

// Kuhn's augmenting-path matching restricted to `alive` vertices.
class Matcher {
 public:
  Matcher(const Graph& g, const std::vector<char>& is_left)
      : g_(g), is_left_(is_left), mate_(static_cast<std::size_t>(g.order()), -1),
        stamp_(static_cast<std::size_t>(g.order()), 0) {}

  int run(const std::vector<char>& alive) {
    std::fill(mate_.begin(), mate_.end(), -1);
    int size = 0;
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (!alive[u] || !is_left_[u]) continue;
      ++round_;
      if (augment(u, alive)) ++size;
    }
    return size;
  }

  const std::vector<Vertex>& mate() const { return mate_; }

 private:
  bool augment(Vertex u, const std::vector<char>& alive) {
    for (Vertex w : g_.neighbors(u)) {
      if (!alive[w] || stamp_[w] == round_) continue;
      stamp_[w] = round_;
      if (mate_[w] < 0 || augment(mate_[w], alive)) {
        mate_[w] = u;
        mate_[u] = w;
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const std::vector<char>& is_left_;
  std::vector<Vertex> mate_;
  std::vector<unsigned> stamp_;
  unsigned round_ = 0;
};

// König: Z = vertices reachable from unmatched left vertices by alternating
// paths; the cover is (L \ Z) + (R & Z).
VertexSet koenig_cover(const Graph& g, const std::vector<char>& is_left, const std::vector<char>& alive,
                       const std::vector<Vertex>& mate) {
  std::vector<char> reached(static_cast<std::size_t>(g.order()), 0);
  std::deque<Vertex> queue;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (alive[u] && is_left[u] && mate[u] < 0) {
      reached[u] = 1;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!alive[y] || reached[y] || mate[x] == y) continue;
      reached[y] = 1;
      const Vertex back = mate[y];
      if (back >= 0 && !reached[back]) {
        reached[back] = 1;
        queue.push_back(back);
      }
    }
  }
  VertexSet cover;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (alive[v] && (is_left[v] ? !reached[v] : reached[v])) cover.push_back(v);
  }
  return cover;
}

}  // namespace

std::optional<CoverResult> vc_branching(const Graph& g, std::optional<int> budget) {
  if (budget && *budget < 0) return std::nullopt;
  const int initial = budget ? *budget + 1 : g.order() + 1;
  return detail::with_bits_for(g.order(), [&]<class Bits>() -> std::optional<CoverResult> {
    CoverSearch<Bits> search(g, initial);
    search.run();
    if (!search.found()) return std::nullopt;
    return CoverResult{search.best_size(), search.best_cover()};
  });
}

int vertex_cover_number(const Graph& g) { return vc_branching(g)->size; }

EdgeSet maximum_matching(const Graph& g) {
  const Sides sides = sides_or_throw(g, "maximum_matching");
  const std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  Matcher matcher(g, sides.is_left);
  matcher.run(alive);
  EdgeSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex w = matcher.mate()[v];
    if (w > v) out.push_back({v, w});
  }
  return out;
}

CoverResult vc_bipartite(const Graph& g) {
  const Sides sides = sides_or_throw(g, "vc_bipartite");
  const std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  Matcher matcher(g, sides.is_left);
  const int size = matcher.run(alive);
  VertexSet cover = koenig_cover(g, sides.is_left, alive, matcher.mate());
  return {size, std::move(cover)};
}

CoverResult vc_with_modulator(const Graph& g, std::span<const Vertex> modulator) {
  VertexSet b(modulator.begin(), modulator.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (b.size() > 30) throw DomainError("modulator too large to enumerate");
  std::vector<char> in_b(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : b) {
    if (!g.contains(v)) throw DomainError("modulator vertex out of range");
    in_b[v] = 1;
  }

  // One bipartition of g - B serves every remainder, since each is an induced
  // subgraph of g - B.
  std::vector<char> is_left(static_cast<std::size_t>(g.order()), 0);
  {
    const Subgraph rest = remove_vertices(g, b);
    const auto split = bipartition(rest.graph);
    const auto* parts = std::get_if<Bipartition>(&split);
    if (!parts) throw DomainError("vc_with_modulator: g minus the modulator is not bipartite");
    for (Vertex v : parts->left) is_left[rest.to_parent[v]] = 1;
  }

  Matcher matcher(g, is_left);
  std::vector<char> alive(static_cast<std::size_t>(g.order()));
  const auto k = b.size();
  int best = g.order() + 1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    bool feasible = true;
    for (std::size_t i = 0; i < k && feasible; ++i) {
      if (mask >> i & 1U) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!(mask >> j & 1U) && g.has_edge(b[i], b[j])) {
          feasible = false;
          break;
        }
      }
    }
    if (!feasible) continue;
    std::fill(alive.begin(), alive.end(), 1);
    int size = 0;
    for (std::size_t i = 0; i < k; ++i) {
      alive[b[i]] = 0;
      if (mask >> i & 1U) ++size;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) continue;
      for (Vertex w : g.neighbors(b[i])) {
        if (!in_b[w] && alive[w]) {
          alive[w] = 0;
          ++size;
        }
      }
    }
    if (size >= best) continue;
    size += matcher.run(alive);
    if (size < best) {
      best = size;
      best_mask = mask;
    }
  }

  // Rebuild the cover for the winning guess.
  std::fill(alive.begin(), alive.end(), 1);
  VertexSet cover;
  for (std::size_t i = 0; i < k; ++i) {
    alive[b[i]] = 0;
    if (best_mask >> i & 1U) cover.push_back(b[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (best_mask >> i & 1U) continue;
    for (Vertex w : g.neighbors(b[i])) {
      if (!in_b[w] && alive[w]) {
        alive[w] = 0;
        cover.push_back(w);
      }
    }
  }
  matcher.run(alive);
  const VertexSet rest = koenig_cover(g, is_left, alive, matcher.mate());
  cover.insert(cover.end(), rest.begin(), rest.end());
  std::sort(cover.begin(), cover.end());
  return {best, std::move(cover)};
}

int vc_after_contraction(const Graph& g, Edge e) {
  if (!is_bipartite(g)) throw DomainError("vc_after_contraction requires a bipartite graph");
  if (!g.has_edge(e.u, e.v)) throw DomainError("vc_after_contraction: edge is not in the graph");
  const ContractionResult q = contract(g, e);
  const Vertex w = q.vmap[e.u];
  const Vertex only_w[] = {w};
  const int keep_w_out = 1 + vc_bipartite(remove_vertices(q.quotient, only_w).graph).size;
  VertexSet closed(q.quotient.neighbors(w).begin(), q.quotient.neighbors(w).end());
  closed.push_back(w);
  const int take_neighbors = q.quotient.degree(w) + vc_bipartite(remove_vertices(q.quotient, closed).graph).size;
  return std::min(keep_w_out, take_neighbors);
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : cover) {
    if (g.contains(v)) in[v] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!in[e.u] && !in[e.v]) return false;
  }
  return true;
}

}  // namespace cblock
