#pragma once

#include <optional>
#include <vector>

#include "cblock/graph.hpp"

namespace cblock::detail {

/// Minimum hitting set of a family of vertex sets (exact). Reduces by
/// superset removal, singleton forcing and vertex domination, splits into
/// independent parts, and branches on a smallest set. Nullopt iff the
/// minimum exceeds `budget`.
std::optional<VertexSet> min_hitting_set(std::vector<VertexSet> sets, std::optional<int> budget);

}  // namespace cblock::detail
