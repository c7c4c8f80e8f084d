#include "turan/exact_count.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

void CompositionSpace::validate() const {
  if (s < 0 || k < 1 || h < 0) {
    throw std::invalid_argument("composition space needs s >= 0, k >= 1, h >= 0 (got s=" +
                                std::to_string(s) + " k=" + std::to_string(k) +
                                " h=" + std::to_string(h) + ")");
  }
}

CountValue binomial(long long a, long long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  CountValue r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: r is C(a-b+i, i) here
  }
  return r;
}

std::uint64_t binomial_u64_saturating(long long a, long long b) {
  const CountValue c = binomial(a, b);
  if (c > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return c.convert_to<std::uint64_t>();
}

namespace {

enum class Filter { capped, exact_max };

// Walks every vector in Omega_s and accumulates x_k + 1 for those passing
// the filter. No pruning on purpose: this is the reference path.
CountValue enumerate(const CompositionSpace& space, Filter filter, std::uint64_t cap) {
  space.validate();
  const std::uint64_t total = binomial_u64_saturating(space.s + space.k - 1, space.k - 1);
  if (total > cap) {
    throw GuardError("composition enumeration of " + std::to_string(total) +
                     " vectors exceeds cap " + std::to_string(cap) +
                     "; use the closed form instead");
  }

  std::uint64_t sum = 0;
  std::vector<int> x(static_cast<std::size_t>(space.k), 0);
  auto visit = [&](auto&& self, int pos, int remaining, int running_max) -> void {
    if (pos == space.k - 1) {
      x[pos] = remaining;
      const int mx = std::max(running_max, remaining);
      const bool keep = filter == Filter::capped ? mx <= space.h : mx == space.h;
      if (keep) sum += static_cast<std::uint64_t>(remaining) + 1;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      x[pos] = v;
      self(self, pos + 1, remaining - v, std::max(running_max, v));
    }
  };
  visit(visit, 0, space.s, 0);
  return CountValue(sum);
}

}  // namespace

CountValue mu_oracle(const CompositionSpace& space, std::uint64_t cap) {
  return enumerate(space, Filter::capped, cap);
}

CountValue lambda_oracle(const CompositionSpace& space, std::uint64_t cap) {
  return enumerate(space, Filter::exact_max, cap);
}

CountValue mu_closed(const CompositionSpace& space) {
  space.validate();
  const long long s = space.s;
  const long long k = space.k;
  const long long h1 = static_cast<long long>(space.h) + 1;

  // Terms vanish through the binomial convention once the top argument
  // goes negative, so i = 0..k covers every contribution.
  CountValue total = 0;
  for (long long i = 0; i <= k; ++i) {
    const long long top = s + k - i * h1;
    CountValue term = binomial(k, i) * binomial(top, k) +
                      h1 * binomial(k - 1, i - 1) * binomial(top - 1, k - 1);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

CountValue lambda_count(const CompositionSpace& space) {
  space.validate();
  const CountValue upper = mu_closed(space);
  if (space.h == 0) return upper;
  return upper - mu_closed({space.s, space.k, space.h - 1});
}

CountValue weighted_gap_sum(int n, int k) {
  if (k < 1 || k >= n) {
    throw std::invalid_argument("weighted_gap_sum needs 1 <= k < n (got n=" +
                                std::to_string(n) + " k=" + std::to_string(k) + ")");
  }
  const int s = n - k;
  CountValue total = 0;
  CountValue previous = 0;  // mu(s, k, -1)
  for (int h = 0; h <= s; ++h) {
    CountValue current = mu_closed({s, k, h});
    total += h * (current - previous);
    previous = std::move(current);
  }
  return total;
}

}  // namespace turan
