#include "turan/cyclic.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "turan/errors.hpp"
#include "turan/subsets.hpp"

namespace turan {

CyclicSubset::CyclicSubset(int n, std::vector<int> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n_ < 1) throw std::invalid_argument("modulus must be positive");
  if (elements_.empty()) throw std::invalid_argument("cyclic subset must be non-empty");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int e = elements_[i];
    if (e < 0 || e >= n_) {
      throw std::invalid_argument("residue " + std::to_string(e) + " outside [0, " +
                                  std::to_string(n_) + ")");
    }
    if (i > 0 && elements_[i - 1] >= e) {
      throw std::invalid_argument("cyclic subset elements must be strictly increasing");
    }
  }
}

bool CyclicSubset::contains(int residue) const {
  return std::binary_search(elements_.begin(), elements_.end(), residue);
}

bool CyclicSubset::is_subset_of(const CyclicSubset& other) const {
  return n_ == other.n_ && std::includes(other.elements_.begin(), other.elements_.end(),
                                         elements_.begin(), elements_.end());
}

CyclicSubset CyclicSubset::without(int residue) const {
  std::vector<int> rest;
  rest.reserve(elements_.size());
  std::copy_if(elements_.begin(), elements_.end(), std::back_inserter(rest),
               [residue](int e) { return e != residue; });
  if (rest.size() + 1 != elements_.size()) {
    throw std::invalid_argument("residue " + std::to_string(residue) + " not in subset");
  }
  return CyclicSubset(n_, std::move(rest));
}

CyclicSubset CyclicSubset::translated(int t) const {
  std::vector<int> moved;
  moved.reserve(elements_.size());
  for (int e : elements_) moved.push_back(((e + t) % n_ + n_) % n_);
  std::sort(moved.begin(), moved.end());
  return CyclicSubset(n_, std::move(moved));
}

std::string CyclicSubset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

GapProfile gap_profile(int n, std::span<const int> x) {
  if (x.empty()) throw std::invalid_argument("gap profile of an empty subset");
  GapProfile profile;
  profile.gaps.reserve(x.size());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) profile.gaps.push_back(x[i + 1] - x[i] - 1);
  profile.gaps.push_back(n - x.back() + x.front() - 1);
  profile.max_gap = *std::max_element(profile.gaps.begin(), profile.gaps.end());
  return profile;
}

GapProfile gap_profile(const CyclicSubset& x) { return gap_profile(x.modulus(), x.elements()); }

int max_cyclic_gap(int n, std::span<const int> x) {
  int best = n - x.back() + x.front() - 1;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) best = std::max(best, x[i + 1] - x[i] - 1);
  return best;
}

int phi(int n, int j, std::span<const int> elements) {
  long long sum = j;
  for (int e : elements) sum += e;
  return static_cast<int>(((sum % n) + n) % n);
}

int phi(int j, const CyclicSubset& x) { return phi(x.modulus(), j, x.elements()); }

bool in_cyclic_family(int n, int j, std::span<const int> x) {
  return phi(n, j, x) < max_cyclic_gap(n, x);
}

namespace {

void require_cyclic_params(int n, int k, int j) {
  if (k < 2 || k > n - 2) {
    throw std::invalid_argument("cyclic family needs 2 <= k <= n - 2 (got n=" +
                                std::to_string(n) + " k=" + std::to_string(k) + ")");
  }
  if (j < 0 || j >= n) {
    throw std::invalid_argument("shift j=" + std::to_string(j) + " outside [0, n)");
  }
}

}  // namespace

TuranFamily build_family(int n, int k, int j, const SizeCaps& caps) {
  require_cyclic_params(n, k, j);
  require_subset_count_within(n, k, caps.materialized, "build_family");
  TuranFamily family{n, k, k + 1, CyclicShift{j}, {}};
  for_each_subset(n, k, [&](std::span<const int> x) {
    if (in_cyclic_family(n, j, x)) family.members.emplace_back(n, std::vector<int>(x.begin(), x.end()));
  });
  return family;
}

FamilySizeStats family_size_stats(int n, int k, const SizeCaps& caps) {
  // Wider than build_family: k = 1 and k = n - 1 still give well-defined sizes.
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("family_size_stats needs 1 <= k <= n - 1 (got n=" +
                                std::to_string(n) + " k=" + std::to_string(k) + ")");
  }
  require_subset_count_within(n, k, caps.subsets, "family_size_stats");

  // histogram[sum mod n][h_X]; membership only depends on that pair.
  const int gap_bound = n - k + 1;
  std::vector<std::uint64_t> histogram(static_cast<std::size_t>(n) * gap_bound, 0);
  for_each_subset(n, k, [&](std::span<const int> x) {
    const int residue = phi(n, 0, x);
    ++histogram[static_cast<std::size_t>(residue) * gap_bound + max_cyclic_gap(n, x)];
  });

  FamilySizeStats stats;
  stats.sizes.assign(static_cast<std::size_t>(n), 0);
  for (int residue = 0; residue < n; ++residue) {
    for (int h = 0; h < gap_bound; ++h) {
      const std::uint64_t count = histogram[static_cast<std::size_t>(residue) * gap_bound + h];
      if (count == 0) continue;
      for (int j = 0; j < n; ++j) {
        if ((j + residue) % n < h) stats.sizes[j] += count;
      }
    }
  }
  stats.total = std::accumulate(stats.sizes.begin(), stats.sizes.end(), std::uint64_t{0});
  const auto it = std::min_element(stats.sizes.begin(), stats.sizes.end());
  stats.min = *it;
  stats.argmin = static_cast<int>(it - stats.sizes.begin());
  stats.mean = Rational(CountValue(stats.total), CountValue(n));
  return stats;
}

CyclicSubset cover_witness(const CyclicSubset& z, int j) {
  const int n = z.modulus();
  if (z.size() < 2) throw std::invalid_argument("cover_witness needs |Z| >= 2");
  if (j < 0 || j >= n) throw std::invalid_argument("shift outside [0, n)");

  const int alpha = phi(j, z);
  if (z.contains(alpha)) return z.without(alpha);

  // alpha sits in the gap that follows the largest element below it; when
  // no element is below alpha it sits in the wrap-around gap after the last.
  const auto elems = z.elements();
  const auto above = std::upper_bound(elems.begin(), elems.end(), alpha);
  const int predecessor = above == elems.begin() ? elems.back() : *(above - 1);
  return z.without(predecessor);
}

int partition_part_count(int k, int r) {
  if (k < 2 || r <= k) {
    throw std::invalid_argument("partition construction needs k >= 2 and r > k");
  }
  return (r - 1) / (k - 1);
}

std::vector<int> partition_part_sizes(int n, int k, int r) {
  const int d = partition_part_count(k, r);
  if (n < r) throw std::invalid_argument("partition construction needs n >= r");
  std::vector<int> sizes(static_cast<std::size_t>(d), n / d);
  for (int i = 0; i < n % d; ++i) ++sizes[i];
  return sizes;
}

TuranFamily partition_family(int n, int k, int r, const SizeCaps& caps) {
  const std::vector<int> sizes = partition_part_sizes(n, k, r);
  CountValue expected = 0;
  for (int size : sizes) expected += binomial(size, k);
  if (expected > caps.materialized) {
    throw GuardError("partition_family: " + expected.str() + " members exceed cap " +
                     std::to_string(caps.materialized));
  }

  TuranFamily family{n, k, r, BlockPartition{sizes}, {}};
  int offset = 0;
  for (int size : sizes) {
    for_each_subset(size, k, [&](std::span<const int> local) {
      std::vector<int> member(local.begin(), local.end());
      for (int& e : member) e += offset;
      family.members.emplace_back(n, std::move(member));
    });
    offset += size;
  }
  return family;
}

void write_family(std::ostream& out, const TuranFamily& family) {
  out << "n=" << family.n << " k=" << family.k;
  if (const auto* shift = std::get_if<CyclicShift>(&family.provenance)) {
    out << " j=" << shift->j;
  } else {
    out << " r=" << family.r;
    if (const auto* parts = std::get_if<BlockPartition>(&family.provenance)) {
      out << " parts=";
      for (std::size_t i = 0; i < parts->part_sizes.size(); ++i) {
        out << (i ? "," : "") << parts->part_sizes[i];
      }
    }
  }
  out << " size=" << family.members.size() << '\n';
  for (const auto& member : family.members) out << member.to_string() << '\n';
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    std::size_t used = 0;
    values.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
  }
  return values;
}

}  // namespace

TuranFamily read_family(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("missing family header");

  std::map<std::string, std::string> fields;
  std::stringstream ss(header);
  std::string token;
  while (ss >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad header token '" + token + "'");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  for (const char* key : {"n", "k", "size"}) {
    if (!fields.contains(key)) throw std::invalid_argument(std::string("header lacks ") + key);
  }

  TuranFamily family;
  family.n = std::stoi(fields["n"]);
  family.k = std::stoi(fields["k"]);
  if (fields.contains("j")) {
    family.provenance = CyclicShift{std::stoi(fields["j"])};
    family.r = family.k + 1;
  } else {
    family.r = fields.contains("r") ? std::stoi(fields["r"]) : family.k + 1;
    if (fields.contains("parts")) family.provenance = BlockPartition{parse_int_list(fields["parts"])};
  }

  const std::size_t size = std::stoull(fields["size"]);
  family.members.reserve(size);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    family.members.emplace_back(family.n, parse_int_list(line));
    if (family.members.back().size() != static_cast<std::size_t>(family.k)) {
      throw std::invalid_argument("member '" + line + "' does not have k elements");
    }
  }
  if (family.members.size() != size) {
    throw std::invalid_argument("header size " + std::to_string(size) + " but " +
                                std::to_string(family.members.size()) + " members");
  }
  return family;
}

}  // namespace turan
