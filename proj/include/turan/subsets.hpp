#pragma once

#include <span>
#include <type_traits>
#include <vector>

namespace turan {

/// Visits every k-subset of {0, ..., n-1} in lexicographic order.
///
/// The visitor receives a span that is only valid for the duration of the
/// call. A visitor returning bool can stop the sweep early by returning
/// false; the function then returns false as well.
template <class Visitor>
bool for_each_subset(int n, int k, Visitor&& visit) {
  if (n < 0 || k < 0 || k > n) return true;
  std::vector<int> a(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) a[i] = i;
  while (true) {
    std::span<const int> view(a);
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, std::span<const int>>, bool>) {
      if (!visit(view)) return false;
    } else {
      visit(view);
    }
    int i = k - 1;
    while (i >= 0 && a[i] == n - k + i) --i;
    if (i < 0) return true;
    ++a[i];
    for (int t = i + 1; t < k; ++t) a[t] = a[t - 1] + 1;
  }
}

}  // namespace turan
