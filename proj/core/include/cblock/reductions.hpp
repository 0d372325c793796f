#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cblock/cnf.hpp"
#include "cblock/graph.hpp"

namespace cblock {

enum class Role {
  AVertex,      // a_{x,C,l}
  Dummy,        // a_x
  BVertex,      // b_{C,l}
  InternalA,    // internal vertex of a copy between two A-vertices
  InternalB,    // internal vertex of a copy between two B-vertices
  InternalAB,   // internal vertex of an A-B copy other than its base vertex
  Base,         // base vertex z of an A-B copy
  PendantRoot,  // vertex s = u of a pendant gadget, joined to z
  Pendant,      // other pendant gadget vertices
  Attached,     // path attached to an A or B vertex (path gadgets)
};

/// Role plus the variable/clause/literal it belongs to (-1 when not applicable).
struct RoleTag {
  Role role = Role::AVertex;
  int variable = -1;
  int clause = -1;
  std::optional<Literal> literal;
};

/// Single-token tag such as "a[x1,C2,-x1]", "dummy[x1]", "b[C3,+x2]", "base".
std::string to_string(const RoleTag& tag);

struct GadgetMeta {
  /// 0 for the bare base graph, else 1, 2 or 3.
  int theorem = 0;
  /// The replacement graph H (constructions 1 and 2).
  std::optional<Graph> pattern;
  Vertex u = -1;
  Vertex v = -1;
  /// Clique size (construction 2) or path order (construction 3).
  int parameter = 0;
};

struct GadgetInstance {
  Graph graph;
  std::vector<RoleTag> roles;
  /// 8n - m.
  int threshold = 0;
  GadgetMeta meta;
};

/// G_phi: a C4 per variable on (C1, C2, C3, dummy), a clique per clause and one
/// A-B edge per literal occurrence. A-vertices come first, grouped by variable.
GadgetInstance build_base(const CleanFormula& phi);

/// Lexicographically first non-adjacent pair of h, or nullopt if h is complete.
std::optional<Edge> first_non_adjacent_pair(const Graph& h);

/// Replaces A-A and B-B edges by two copies of H_{u,v}, A-B edges by one copy,
/// and hangs a pendant H^2_u from the base vertex of every A-B copy. When u, v
/// are omitted the first non-adjacent pair is used. Throws DomainError unless
/// h is 2-connected and not complete and u, v are distinct and non-adjacent.
GadgetInstance build_thm1(const CleanFormula& phi, const Graph& h, std::optional<Vertex> u = std::nullopt,
                          std::optional<Vertex> v = std::nullopt);

/// build_thm1 with H the once-subdivided clique K_h and (u, v) = (0, 1).
/// Throws DomainError when h < 3.
GadgetInstance build_thm2(const CleanFormula& phi, int h);

/// Path-gadget instance for P_i. Throws DomainError when i < 4.
GadgetInstance build_thm3(const CleanFormula& phi, int i);

/// One "<index> <role-tag>" line per vertex.
std::string serialize_roles(const GadgetInstance& inst);

}  // namespace cblock
