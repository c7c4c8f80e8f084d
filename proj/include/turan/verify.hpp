#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "turan/caps.hpp"
#include "turan/cyclic.hpp"
#include "turan/exact_count.hpp"

namespace turan {

enum class VerifyMode { exhaustive, witness_guided };

std::string to_string(VerifyMode mode);

struct VerificationReport {
  VerifyMode mode = VerifyMode::exhaustive;
  int n = 0;
  int k = 0;
  int r = 0;
  std::uint64_t checked = 0;
  std::vector<CyclicSubset> failures;  // sorted lexicographically

  bool passed() const { return failures.empty(); }
  /// `mode=<m> n=<n> k=<k> r=<r> checked=<c> failures=<f>`
  std::string summary() const;
};

/// Checks every r-subset of Z_n for a member of the family inside it.
/// Members are indexed by their sorted elements. Throws GuardError when
/// C(n, r) exceeds caps.subsets.
VerificationReport is_turan_family(const TuranFamily& family, const SizeCaps& caps = {});

/// For every (k+1)-subset Z, checks that cover_witness(Z, j) is a k-subset
/// of Z belonging to the cyclic family for shift j.
VerificationReport witness_verify(int n, int k, int j, const SizeCaps& caps = {});

/// For each k-subset X, the number of shifts j whose family contains X.
std::map<CyclicSubset, int> occurrence_counts(int n, int k, const SizeCaps& caps = {});

/// (1/n) * sum_j |family_j|, exact.
Rational averaging_bound(int n, int k, const SizeCaps& caps = {});

/// Sum of h_X over every k-subset X of Z_n, by direct enumeration.
CountValue brute_force_gap_sum(int n, int k, const SizeCaps& caps = {});

}  // namespace turan
