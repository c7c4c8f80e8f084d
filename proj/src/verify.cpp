#include "turan/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "turan/errors.hpp"
#include "turan/subsets.hpp"

namespace turan {

std::string to_string(VerifyMode mode) {
  return mode == VerifyMode::exhaustive ? "exhaustive" : "witness-guided";
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  out << "mode=" << to_string(mode) << " n=" << n << " k=" << k << " r=" << r
      << " checked=" << checked << " failures=" << failures.size();
  return out.str();
}

namespace {

struct ElementsHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace

VerificationReport is_turan_family(const TuranFamily& family, const SizeCaps& caps) {
  const int n = family.n;
  const int k = family.k;
  const int r = family.r;
  if (n < 1 || k < 1 || r < 1 || r > n) {
    throw std::invalid_argument("is_turan_family needs 1 <= k, 1 <= r <= n");
  }
  require_subset_count_within(n, r, caps.subsets, "is_turan_family");

  std::unordered_set<std::vector<int>, ElementsHash> index;
  index.reserve(family.members.size());
  for (const auto& member : family.members) {
    if (member.modulus() != n || member.size() != static_cast<std::size_t>(k)) {
      throw std::invalid_argument("family member " + member.to_string() + " is malformed");
    }
    index.emplace(member.elements().begin(), member.elements().end());
  }

  VerificationReport report{VerifyMode::exhaustive, n, k, r, 0, {}};
  std::vector<int> candidate(static_cast<std::size_t>(k));
  for_each_subset(n, r, [&](std::span<const int> z) {
    ++report.checked;
    const bool covered = !for_each_subset(r, k, [&](std::span<const int> pick) {
      for (int i = 0; i < k; ++i) candidate[i] = z[pick[i]];
      return !index.contains(candidate);  // stop on the first hit
    });
    if (!covered) report.failures.emplace_back(n, std::vector<int>(z.begin(), z.end()));
  });
  return report;  // lexicographic sweep keeps failures sorted
}

VerificationReport witness_verify(int n, int k, int j, const SizeCaps& caps) {
  if (k < 2 || k > n - 2) throw std::invalid_argument("witness_verify needs 2 <= k <= n - 2");
  if (j < 0 || j >= n) throw std::invalid_argument("shift outside [0, n)");
  require_subset_count_within(n, k + 1, caps.subsets, "witness_verify");

  VerificationReport report{VerifyMode::witness_guided, n, k, k + 1, 0, {}};
  std::vector<int> witness;
  witness.reserve(static_cast<std::size_t>(k));
  for_each_subset(n, k + 1, [&](std::span<const int> z) {
    ++report.checked;
    // Same construction as cover_witness, on raw spans to avoid allocation.
    const int alpha = phi(n, j, z);
    const auto above = std::upper_bound(z.begin(), z.end(), alpha);
    int dropped;
    if (above != z.begin() && *(above - 1) == alpha) {
      dropped = alpha;
    } else {
      dropped = above == z.begin() ? z.back() : *(above - 1);
    }
    witness.clear();
    for (int e : z) {
      if (e != dropped) witness.push_back(e);
    }
    const bool ok = witness.size() == static_cast<std::size_t>(k) &&
                    std::includes(z.begin(), z.end(), witness.begin(), witness.end()) &&
                    in_cyclic_family(n, j, witness);
    if (!ok) report.failures.emplace_back(n, std::vector<int>(z.begin(), z.end()));
  });
  return report;
}

std::map<CyclicSubset, int> occurrence_counts(int n, int k, const SizeCaps& caps) {
  require_subset_count_within(n, k, caps.materialized, "occurrence_counts");
  std::map<CyclicSubset, int> counts;
  for_each_subset(n, k, [&](std::span<const int> x) {
    counts.emplace(CyclicSubset(n, std::vector<int>(x.begin(), x.end())), 0);
  });
  for (int j = 0; j < n; ++j) {
    for (const auto& member : build_family(n, k, j, caps).members) ++counts.at(member);
  }
  return counts;
}

Rational averaging_bound(int n, int k, const SizeCaps& caps) {
  return family_size_stats(n, k, caps).mean;
}

CountValue brute_force_gap_sum(int n, int k, const SizeCaps& caps) {
  if (k < 1 || k > n) throw std::invalid_argument("brute_force_gap_sum needs 1 <= k <= n");
  require_subset_count_within(n, k, caps.subsets, "brute_force_gap_sum");
  std::uint64_t total = 0;
  for_each_subset(n, k, [&](std::span<const int> x) {
    total += static_cast<std::uint64_t>(gap_profile(n, x).max_gap);
  });
  return CountValue(total);
}

}  // namespace turan
