#include "turan/caps.hpp"

#include <string>

#include "turan/errors.hpp"
#include "turan/exact_count.hpp"

namespace turan {

void require_subset_count_within(int n, int k, std::uint64_t cap,
                                 std::string_view what) {
  const std::uint64_t count = binomial_u64_saturating(n, k);
  if (count > cap) {
    throw GuardError(std::string(what) + ": C(" + std::to_string(n) + "," +
                     std::to_string(k) + ") = " + std::to_string(count) +
                     " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace turan
