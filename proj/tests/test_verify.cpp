#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

#include "turan/cyclic.hpp"
#include "turan/errors.hpp"
#include "turan/exact_count.hpp"
#include "turan/verify.hpp"

TEST_CASE("cyclic family at n = 12, k = 3 is a Turan family") {
  const auto report = turan::is_turan_family(turan::build_family(12, 3, 0));
  CHECK(report.passed());
  CHECK(report.checked == 495);
  CHECK(report.summary() == "mode=exhaustive n=12 k=3 r=4 checked=495 failures=0");
}

TEST_CASE("partition families pass the exhaustive check") {
  CHECK(turan::is_turan_family(turan::partition_family(10, 3, 5)).passed());
  CHECK(turan::is_turan_family(turan::partition_family(9, 2, 3)).passed());
}

TEST_CASE("part count rounds down") {
  // r = 6, k = 3: two parts of six cover every 6-set, three parts of four do not.
  const auto two = turan::partition_family(12, 3, 6);
  CHECK(std::get<turan::BlockPartition>(two.provenance).part_sizes == std::vector<int>{6, 6});
  CHECK(turan::is_turan_family(two).passed());

  turan::TuranFamily three{12, 3, 6, turan::BlockPartition{{4, 4, 4}}, {}};
  for (int mask = 0; mask < (1 << 12); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) != 3) continue;
    std::vector<int> xs;
    for (int i = 0; i < 12; ++i)
      if (mask >> i & 1) xs.push_back(i);
    if (xs[0] / 4 == xs[2] / 4) three.members.emplace_back(12, xs);
  }
  std::sort(three.members.begin(), three.members.end());
  CHECK(three.members.size() == 12);
  CHECK_FALSE(turan::is_turan_family(three).passed());
  CHECK(turan::is_turan_family(turan::partition_family(12, 2, 5)).passed());
}

TEST_CASE("the empty family fails on every r-subset") {
  const turan::TuranFamily empty{6, 2, 3, {}, {}};
  const auto report = turan::is_turan_family(empty);
  CHECK(report.checked == 20);
  CHECK(report.failures.size() == 20);
  CHECK(std::is_sorted(report.failures.begin(), report.failures.end()));
}

TEST_CASE("dropping a needed member produces exactly the uncovered sets") {
  auto family = turan::partition_family(9, 2, 3);
  const turan::CyclicSubset removed = family.members.front();  // {0,1}
  family.members.erase(family.members.begin());
  const auto report = turan::is_turan_family(family);
  REQUIRE_FALSE(report.passed());
  for (const auto& z : report.failures) CHECK(removed.is_subset_of(z));
}

TEST_CASE("exhaustive and witness checks agree on all small cyclic families") {
  for (int n = 4; n <= 14; ++n) {
    for (int k = 2; k <= std::min(4, n - 2); ++k) {
      for (int j = 0; j < n; ++j) {
        INFO("n=" << n << " k=" << k << " j=" << j);
        const auto exhaustive = turan::is_turan_family(turan::build_family(n, k, j));
        const auto witness = turan::witness_verify(n, k, j);
        REQUIRE(exhaustive.passed());
        REQUIRE(witness.passed());
        REQUIRE(witness.checked == exhaustive.checked);
      }
    }
  }
}

TEST_CASE("witness verification at the smallest universe and at n = 12") {
  for (int k = 2; k <= 6; ++k) {
    for (int j = 0; j < k + 2; ++j) CHECK(turan::witness_verify(k + 2, k, j).passed());
  }
  const auto report = turan::witness_verify(12, 3, 7);
  CHECK(report.passed());
  CHECK(report.mode == turan::VerifyMode::witness_guided);
  CHECK(report.summary() == "mode=witness-guided n=12 k=3 r=4 checked=495 failures=0");
}

TEST_CASE("verification guards") {
  turan::SizeCaps tiny;
  tiny.subsets = 100;
  CHECK_THROWS_AS(turan::witness_verify(12, 3, 0, tiny), turan::GuardError);
  CHECK_THROWS_AS(turan::is_turan_family(turan::build_family(12, 3, 0), tiny), turan::GuardError);
}

TEST_CASE("occurrence counts equal the largest gap") {
  const auto eight = turan::occurrence_counts(8, 2);
  CHECK(eight.size() == 28);
  for (const auto& [x, count] : eight) CHECK(count == turan::gap_profile(x).max_gap);

  for (int n = 4; n <= 16; ++n) {
    for (int k = 2; k <= std::min(4, n - 2); ++k) {
      for (const auto& [x, count] : turan::occurrence_counts(n, k)) {
        REQUIRE(count == turan::gap_profile(x).max_gap);
      }
      const turan::CyclicSubset block(n, [k] {
        std::vector<int> v(k);
        std::iota(v.begin(), v.end(), 0);
        return v;
      }());
      CHECK(turan::occurrence_counts(n, k).at(block) == n - k);
    }
  }
}

TEST_CASE("occurrence total at n = 32, k = 2") {
  long long total = 0;
  for (const auto& [x, count] : turan::occurrence_counts(32, 2)) total += count;
  CHECK(total == 11280);
  CHECK(turan::weighted_gap_sum(32, 2) == total);
}

TEST_CASE("averaging bound") {
  CHECK(turan::averaging_bound(32, 2) == turan::Rational(705, 2));
  for (int n = 3; n <= 20; ++n) {
    for (int k = 2; k <= std::min(5, n - 2); ++k) {
      const auto mean = turan::averaging_bound(n, k);
      CHECK(mean * n == turan::Rational(turan::weighted_gap_sum(n, k)));
      CHECK(turan::Rational(turan::family_size_stats(n, k).min) <= mean);
    }
  }
  // degenerate k = n - 2: every 2-gap configuration, still consistent
  const auto high = turan::averaging_bound(10, 8);
  CHECK(high * 10 == turan::Rational(turan::weighted_gap_sum(10, 8)));
}
