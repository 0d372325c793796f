#pragma once

#include <span>
#include <vector>

namespace cblock::detail {

/// Visits every size-`k` subset of {0..n-1} in lexicographic order. `visit`
/// returns true to stop early; the function then returns true as well.
template <class Visit>
bool for_each_combination(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return false;
  std::vector<int> index(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) index[i] = i;
  while (true) {
    if (visit(std::span<const int>(index))) return true;
    int i = k - 1;
    while (i >= 0 && index[i] == n - k + i) --i;
    if (i < 0) return false;
    ++index[i];
    for (int j = i + 1; j < k; ++j) index[j] = index[j - 1] + 1;
  }
}

}  // namespace cblock::detail
