#include "cblock/reductions.hpp"

#include <algorithm>

#include "cblock/errors.hpp"

namespace cblock {

namespace {

std::string literal_text(const Literal& l) { return std::string(l.positive ? "+" : "-") + "x" + std::to_string(l.var + 1); }

// Base graph plus the edge classes the construction builders replace.
struct BaseLayout {
  GadgetInstance inst;
  std::vector<Edge> a_edges;
  std::vector<Edge> b_edges;
  // (a-vertex, b-vertex) per literal occurrence, in clause order.
  std::vector<std::pair<Vertex, Vertex>> ab_edges;
};

BaseLayout base_layout(const CleanFormula& phi) {
  const int n = phi.variables();
  const auto& clauses = phi.clauses();
  BaseLayout out;
  GadgetInstance& inst = out.inst;

  struct Occ {
    int clause;
    std::size_t pos;
    Literal lit;
  };
  std::vector<std::vector<Occ>> by_var(static_cast<std::size_t>(n));
  for (int c = 0; c < static_cast<int>(clauses.size()); ++c) {
    for (std::size_t p = 0; p < clauses[c].size(); ++p) by_var[clauses[c][p].var].push_back({c, p, clauses[c][p]});
  }

  std::vector<std::vector<Vertex>> a_of(clauses.size());
  std::vector<std::vector<Vertex>> b_of(clauses.size());
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    a_of[c].resize(clauses[c].size());
    b_of[c].resize(clauses[c].size());
  }

  inst.roles.resize(static_cast<std::size_t>(4 * n));
  for (int x = 0; x < n; ++x) {
    const auto& occ = by_var[x];
    const int positives = static_cast<int>(std::count_if(occ.begin(), occ.end(), [](const Occ& o) { return o.lit.positive; }));
    const bool majority = positives >= 2;
    std::vector<Occ> maj;
    std::vector<Occ> minr;
    for (const Occ& o : occ) (o.lit.positive == majority ? maj : minr).push_back(o);
    const Occ slots[3] = {maj[0], minr[0], maj[1]};
    for (int k = 0; k < 3; ++k) {
      const Vertex a = 4 * x + k;
      a_of[slots[k].clause][slots[k].pos] = a;
      inst.roles[a] = RoleTag{Role::AVertex, x, slots[k].clause, slots[k].lit};
    }
    inst.roles[4 * x + 3] = RoleTag{Role::Dummy, x, -1, std::nullopt};
    for (int k = 0; k < 4; ++k) out.a_edges.push_back(make_edge(4 * x + k, 4 * x + (k + 1) % 4));
  }
  Vertex next = 4 * n;
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    for (std::size_t p = 0; p < clauses[c].size(); ++p) {
      b_of[c][p] = next++;
      inst.roles.push_back(RoleTag{Role::BVertex, clauses[c][p].var, static_cast<int>(c), clauses[c][p]});
    }
    for (std::size_t p = 0; p < clauses[c].size(); ++p) {
      for (std::size_t q = p + 1; q < clauses[c].size(); ++q) out.b_edges.push_back(make_edge(b_of[c][p], b_of[c][q]));
    }
  }
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    for (std::size_t p = 0; p < clauses[c].size(); ++p) out.ab_edges.emplace_back(a_of[c][p], b_of[c][p]);
  }

  inst.graph = Graph(next);
  for (const Edge& e : out.a_edges) inst.graph.add_edge(e.u, e.v);
  for (const Edge& e : out.b_edges) inst.graph.add_edge(e.u, e.v);
  for (const auto& [a, b] : out.ab_edges) inst.graph.add_edge(a, b);
  inst.threshold = 8 * n - phi.clause_count();
  return out;
}

// Adds a copy of h to `g` with u -> x, v -> y; the remaining vertices of h get
// fresh indices in ascending order. Returns those fresh vertices.
std::vector<Vertex> add_copy(Graph& g, const Graph& h, Vertex u, Vertex x, Vertex v, Vertex y) {
  std::vector<Vertex> map(static_cast<std::size_t>(h.order()), -1);
  std::vector<Vertex> fresh;
  map[u] = x;
  if (v >= 0) map[v] = y;
  for (Vertex w = 0; w < h.order(); ++w) {
    if (map[w] < 0) fresh.push_back(map[w] = g.add_vertex());
  }
  for (const Edge& e : h.edges()) g.add_edge(map[e.u], map[e.v]);
  return fresh;
}

bool two_connected(const Graph& h) {
  if (h.order() < 3 || !is_connected(h)) return false;
  for (Vertex w = 0; w < h.order(); ++w) {
    if (!is_connected(remove_vertices(h, VertexSet{w}).graph)) return false;
  }
  return true;
}

void push_roles(GadgetInstance& inst, std::size_t count, const RoleTag& tag) {
  for (std::size_t i = 0; i < count; ++i) inst.roles.push_back(tag);
}

}  // namespace

std::string to_string(const RoleTag& tag) {
  const std::string x = "x" + std::to_string(tag.variable + 1);
  switch (tag.role) {
    case Role::AVertex:
      return "a[" + x + ",C" + std::to_string(tag.clause + 1) + "," + literal_text(*tag.literal) + "]";
    case Role::Dummy: return "dummy[" + x + "]";
    case Role::BVertex: return "b[C" + std::to_string(tag.clause + 1) + "," + literal_text(*tag.literal) + "]";
    case Role::InternalA: return "internal-a";
    case Role::InternalB: return "internal-b";
    case Role::InternalAB: return "internal-ab";
    case Role::Base: return "base";
    case Role::PendantRoot: return "pendant-root";
    case Role::Pendant: return "pendant";
    case Role::Attached: return "attached";
  }
  return "unknown";
}

GadgetInstance build_base(const CleanFormula& phi) { return base_layout(phi).inst; }

std::optional<Edge> first_non_adjacent_pair(const Graph& h) {
  for (Vertex a = 0; a < h.order(); ++a) {
    for (Vertex b = a + 1; b < h.order(); ++b) {
      if (!h.has_edge(a, b)) return Edge{a, b};
    }
  }
  return std::nullopt;
}

GadgetInstance build_thm1(const CleanFormula& phi, const Graph& h, std::optional<Vertex> u, std::optional<Vertex> v) {
  if (!two_connected(h)) throw DomainError("replacement graph must be 2-connected");
  const auto pair = first_non_adjacent_pair(h);
  if (!pair) throw DomainError("replacement graph must not be complete");
  if (u.has_value() != v.has_value()) throw DomainError("give both u and v or neither");
  const Vertex hu = u.value_or(pair->u);
  const Vertex hv = v.value_or(pair->v);
  if (!h.contains(hu) || !h.contains(hv) || hu == hv) throw DomainError("u and v must be distinct vertices of H");
  if (h.has_edge(hu, hv)) throw DomainError("u and v must be non-adjacent in H");

  BaseLayout base = base_layout(phi);
  GadgetInstance& inst = base.inst;
  Graph g(inst.graph.order());
  for (const Edge& e : base.a_edges) {
    for (int copy = 0; copy < 2; ++copy) {
      const auto fresh = add_copy(g, h, hu, e.u, hv, e.v);
      push_roles(inst, fresh.size(), RoleTag{Role::InternalA, inst.roles[e.u].variable, -1, std::nullopt});
    }
  }
  for (const Edge& e : base.b_edges) {
    for (int copy = 0; copy < 2; ++copy) {
      const auto fresh = add_copy(g, h, hu, e.u, hv, e.v);
      push_roles(inst, fresh.size(), RoleTag{Role::InternalB, -1, inst.roles[e.u].clause, std::nullopt});
    }
  }
  std::vector<Vertex> bases;
  for (const auto& [a, b] : base.ab_edges) {
    const auto fresh = add_copy(g, h, hu, a, hv, b);
    const RoleTag& owner = inst.roles[b];
    bases.push_back(fresh.front());
    inst.roles.push_back(RoleTag{Role::Base, owner.variable, owner.clause, owner.literal});
    push_roles(inst, fresh.size() - 1, RoleTag{Role::InternalAB, owner.variable, owner.clause, owner.literal});
  }
  for (Vertex z : bases) {
    const RoleTag owner = inst.roles[z];
    const Vertex s = g.add_vertex();
    inst.roles.push_back(RoleTag{Role::PendantRoot, owner.variable, owner.clause, owner.literal});
    for (int copy = 0; copy < 2; ++copy) {
      const auto fresh = add_copy(g, h, hu, s, -1, -1);
      push_roles(inst, fresh.size(), RoleTag{Role::Pendant, owner.variable, owner.clause, owner.literal});
    }
    g.add_edge(z, s);
  }
  inst.graph = std::move(g);
  inst.meta = GadgetMeta{1, h, hu, hv, 0};
  return inst;
}

GadgetInstance build_thm2(const CleanFormula& phi, int h) {
  if (h < 3) throw DomainError("clique size must be at least 3");
  GadgetInstance inst = build_thm1(phi, subdivide(Graph::complete(h)), 0, 1);
  inst.meta.theorem = 2;
  inst.meta.parameter = h;
  return inst;
}

GadgetInstance build_thm3(const CleanFormula& phi, int i) {
  if (i < 4) throw DomainError("path order must be at least 4");
  const bool even = i % 2 == 0;
  const int replace_order = even ? i / 2 + 1 : (i + 1) / 2;
  const int attach_order = even ? i / 2 : (i + 1) / 2;

  BaseLayout base = base_layout(phi);
  GadgetInstance& inst = base.inst;
  const int base_order = inst.graph.order();
  Graph g(base_order);
  const Graph connector = Graph::path(replace_order);
  for (const Edge& e : base.a_edges) {
    const auto fresh = add_copy(g, connector, 0, e.u, replace_order - 1, e.v);
    push_roles(inst, fresh.size(), RoleTag{Role::InternalA, inst.roles[e.u].variable, -1, std::nullopt});
  }
  for (const Edge& e : base.b_edges) {
    const auto fresh = add_copy(g, connector, 0, e.u, replace_order - 1, e.v);
    push_roles(inst, fresh.size(), RoleTag{Role::InternalB, -1, inst.roles[e.u].clause, std::nullopt});
  }
  std::vector<Vertex> bases;
  for (const auto& [a, b] : base.ab_edges) {
    const Vertex z = g.add_vertex();
    g.add_edge(a, z);
    g.add_edge(z, b);
    bases.push_back(z);
    const RoleTag& owner = inst.roles[b];
    inst.roles.push_back(RoleTag{Role::Base, owner.variable, owner.clause, owner.literal});
  }
  const Graph attached = Graph::path(attach_order);
  for (Vertex x = 0; x < base_order; ++x) {
    const auto fresh = add_copy(g, attached, 0, x, -1, -1);
    push_roles(inst, fresh.size(), RoleTag{Role::Attached, inst.roles[x].variable, inst.roles[x].clause, std::nullopt});
  }
  const Graph pattern = Graph::path(i);
  for (Vertex z : bases) {
    const RoleTag owner = inst.roles[z];
    const Vertex s = g.add_vertex();
    inst.roles.push_back(RoleTag{Role::PendantRoot, owner.variable, owner.clause, owner.literal});
    for (int copy = 0; copy < 2; ++copy) {
      const auto fresh = add_copy(g, pattern, 0, s, -1, -1);
      push_roles(inst, fresh.size(), RoleTag{Role::Pendant, owner.variable, owner.clause, owner.literal});
    }
    g.add_edge(z, s);
  }
  inst.graph = std::move(g);
  inst.meta = GadgetMeta{3, pattern, 0, -1, i};
  return inst;
}

std::string serialize_roles(const GadgetInstance& inst) {
  std::string out;
  for (std::size_t v = 0; v < inst.roles.size(); ++v) out += std::to_string(v) + " " + to_string(inst.roles[v]) + "\n";
  return out;
}

}  // namespace cblock
