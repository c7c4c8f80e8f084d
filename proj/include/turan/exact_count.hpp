#pragma once

// Exact weighted counts of bounded compositions.
//
// For a vector (x_1, ..., x_k) of non-negative integers summing to s, the
// weight is x_k + 1. mu(s, k, h) sums the weight over vectors whose entries
// are all <= h; lambda(s, k, h) over vectors whose maximum is exactly h.
// With s = n - k these vectors are the cyclic gap sequences of k-subsets of
// Z_n, which is what ties the counts to the covering families.

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "turan/caps.hpp"

namespace turan {

using CountValue = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct CompositionSpace {
  int s = 0;  // sum target
  int k = 1;  // vector length
  int h = 0;  // coordinate cap

  /// Throws std::invalid_argument unless s >= 0, k >= 1 and h >= 0.
  void validate() const;
  /// True iff no vector sums to s with every entry <= h.
  bool capped_empty() const { return s > static_cast<long long>(k) * h; }
  /// True iff no vector sums to s with maximum exactly h.
  bool exact_max_empty() const { return h > s || capped_empty(); }
};

/// C(a, b), and 0 whenever b < 0, a < 0 or a < b.
CountValue binomial(long long a, long long b);

/// Number of k-subsets of an n-set, clamped to UINT64_MAX.
std::uint64_t binomial_u64_saturating(long long a, long long b);

/// Weighted count over capped vectors by exhaustive enumeration. Throws
/// GuardError when C(s+k-1, k-1) exceeds `cap`.
CountValue mu_oracle(const CompositionSpace& space,
                     std::uint64_t cap = SizeCaps{}.compositions);

/// Inclusion-exclusion closed form of the same count, exact for all inputs.
CountValue mu_closed(const CompositionSpace& space);

/// mu(s, k, h) - mu(s, k, h - 1), with mu(s, k, -1) = 0.
CountValue lambda_count(const CompositionSpace& space);

/// Weighted count over vectors with maximum exactly h, by enumeration.
CountValue lambda_oracle(const CompositionSpace& space,
                         std::uint64_t cap = SizeCaps{}.compositions);

/// Sum over h of h * lambda(n - k, k, h). Equals the sum of the largest
/// cyclic gap over all k-subsets of Z_n. Requires 1 <= k < n.
CountValue weighted_gap_sum(int n, int k);

}  // namespace turan
