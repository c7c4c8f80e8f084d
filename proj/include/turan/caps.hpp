#pragma once

#include <cstdint>
#include <string_view>

namespace turan {

/// Enumeration limits. These are configuration so that larger machines can
/// lift them; every exhaustive routine checks its own cap before starting.
struct SizeCaps {
  /// Compositions visited by the mu/lambda oracles.
  std::uint64_t compositions = 100'000'000;
  /// k-subsets (or r-subsets) visited by streaming sweeps.
  std::uint64_t subsets = 200'000'000;
  /// Members materialized in memory by build_family and friends.
  std::uint64_t materialized = 20'000'000;

  /// Sets every cap to the same value.
  static SizeCaps uniform(std::uint64_t cap) { return {cap, cap, cap}; }
};

/// Throws GuardError when C(n, k) exceeds cap. `what` names the caller.
void require_subset_count_within(int n, int k, std::uint64_t cap,
                                 std::string_view what);

}  // namespace turan
