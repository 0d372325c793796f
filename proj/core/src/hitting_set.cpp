#include "hitting_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cblock::detail {

namespace {

using Family = std::vector<VertexSet>;

void remove_supersets(Family& sets) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  Family kept;
  for (auto& s : sets) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) {
      return std::includes(s.begin(), s.end(), k.begin(), k.end());
    });
    if (!redundant) kept.push_back(std::move(s));
  }
  sets = std::move(kept);
}

void drop_vertex(Family& sets, Vertex v) {
  for (auto& s : sets) {
    const auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v) s.erase(it);
  }
}

void take_vertex(Family& sets, Vertex v) {
  std::erase_if(sets, [&](const VertexSet& s) { return std::binary_search(s.begin(), s.end(), v); });
}

// Removes every vertex whose sets are all hit by some other vertex as well.
bool remove_dominated(Family& sets) {
  std::map<Vertex, std::vector<int>> occ;
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    for (Vertex v : sets[i]) occ[v].push_back(i);
  }
  for (const auto& [a, mine] : occ) {
    for (Vertex b : sets[mine.front()]) {
      if (b == a) continue;
      const auto& theirs = occ[b];
      if (!std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end())) continue;
      if (theirs.size() == mine.size() && b > a) continue;
      drop_vertex(sets, a);
      return true;
    }
  }
  return false;
}

// Returns false when some set became empty (nothing can hit it).
bool reduce(Family& sets, VertexSet& chosen) {
  while (true) {
    remove_supersets(sets);
    if (sets.empty()) return true;
    if (sets.front().empty()) return false;
    if (sets.front().size() == 1) {
      const Vertex v = sets.front().front();
      chosen.push_back(v);
      take_vertex(sets, v);
      continue;
    }
    if (!remove_dominated(sets)) return true;
  }
}

int packing_bound(const Family& sets) {
  std::vector<Vertex> used;
  int count = 0;
  for (const auto& s : sets) {
    if (std::any_of(s.begin(), s.end(), [&](Vertex v) { return std::find(used.begin(), used.end(), v) != used.end(); })) {
      continue;
    }
    used.insert(used.end(), s.begin(), s.end());
    ++count;
  }
  return count;
}

std::vector<Family> split(const Family& sets) {
  std::map<Vertex, int> id;
  for (const auto& s : sets) {
    for (Vertex v : s) id.try_emplace(v, static_cast<int>(id.size()));
  }
  std::vector<int> parent(id.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : sets) {
    for (Vertex v : s) parent[find(id[v])] = find(id[s.front()]);
  }
  std::map<int, Family> groups;
  for (const auto& s : sets) groups[find(id[s.front()])].push_back(s);
  std::vector<Family> out;
  for (auto& [root, family] : groups) out.push_back(std::move(family));
  return out;
}

std::optional<VertexSet> minimize(Family sets, int cap);

std::optional<VertexSet> decide(Family sets, int budget) {
  VertexSet chosen;
  if (!reduce(sets, chosen)) return std::nullopt;
  budget -= static_cast<int>(chosen.size());
  if (budget < 0) return std::nullopt;
  if (sets.empty()) return chosen;

  auto parts = split(sets);
  if (parts.size() > 1) {
    std::vector<int> bounds;
    int total = 0;
    for (const auto& part : parts) total += bounds.emplace_back(packing_bound(part));
    if (total > budget) return std::nullopt;
    int spent = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      total -= bounds[i];
      auto best = minimize(std::move(parts[i]), budget - spent - total);
      if (!best) return std::nullopt;
      spent += static_cast<int>(best->size());
      chosen.insert(chosen.end(), best->begin(), best->end());
    }
    return chosen;
  }

  if (packing_bound(sets) > budget) return std::nullopt;
  const VertexSet pivot = sets.front();
  Family branch = sets;
  for (Vertex x : pivot) {
    Family next = branch;
    take_vertex(next, x);
    if (auto rest = decide(std::move(next), budget - 1)) {
      rest->push_back(x);
      chosen.insert(chosen.end(), rest->begin(), rest->end());
      return chosen;
    }
    drop_vertex(branch, x);
  }
  return std::nullopt;
}

std::optional<VertexSet> minimize(Family sets, int cap) {
  for (int b = packing_bound(sets); b <= cap; ++b) {
    if (auto found = decide(sets, b)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<VertexSet> min_hitting_set(std::vector<VertexSet> sets, std::optional<int> budget) {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  int cap = 0;
  {
    VertexSet all;
    for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    cap = static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
  }
  if (budget) cap = std::min(cap, *budget);
  if (cap < 0) return std::nullopt;
  auto found = minimize(std::move(sets), cap);
  if (found) std::sort(found->begin(), found->end());
  return found;
}

}  // namespace cblock::detail
