#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "turan/caps.hpp"
#include "turan/exact_count.hpp"

namespace turan {

/// A non-empty set of residues of Z_n, stored sorted.
class CyclicSubset {
 public:
  /// Throws std::invalid_argument unless `elements` is non-empty, strictly
  /// increasing and inside [0, n).
  CyclicSubset(int n, std::vector<int> elements);

  int modulus() const noexcept { return n_; }
  std::span<const int> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool contains(int residue) const;
  bool is_subset_of(const CyclicSubset& other) const;
  /// The subset with `residue` removed; it must be present.
  CyclicSubset without(int residue) const;
  /// Adds t to every element modulo n.
  CyclicSubset translated(int t) const;

  /// Elements joined with commas, e.g. "0,3,4".
  std::string to_string() const;

  friend bool operator==(const CyclicSubset&, const CyclicSubset&) = default;
  friend auto operator<=>(const CyclicSubset&, const CyclicSubset&) = default;

 private:
  int n_;
  std::vector<int> elements_;
};

/// Cyclic gaps of a subset: gaps[i] counts the residues strictly between
/// element i and its successor around the circle (the last entry wraps).
struct GapProfile {
  std::vector<int> gaps;
  int max_gap = 0;
};

GapProfile gap_profile(const CyclicSubset& x);
/// Same as above on raw sorted residues; throws on an empty list.
GapProfile gap_profile(int n, std::span<const int> sorted_elements);

/// Largest cyclic gap (h_X) without materializing the profile.
int max_cyclic_gap(int n, std::span<const int> sorted_elements);

/// (j + sum of elements) mod n.
int phi(int j, const CyclicSubset& x);
int phi(int n, int j, std::span<const int> elements);

struct CyclicShift {
  int j = 0;
};

struct BlockPartition {
  std::vector<int> part_sizes;
};

using FamilyProvenance = std::variant<std::monostate, CyclicShift, BlockPartition>;

struct TuranFamily {
  int n = 0;
  int k = 0;
  int r = 0;  // every r-subset must contain a member
  FamilyProvenance provenance;
  std::vector<CyclicSubset> members;
};

/// The cyclic family for shift j: all k-subsets X with phi(j, X) < h_X, in
/// lexicographic order. Requires 2 <= k <= n - 2 and 0 <= j < n.
TuranFamily build_family(int n, int k, int j, const SizeCaps& caps = {});

/// Whether X belongs to the cyclic family for shift j.
bool in_cyclic_family(int n, int j, std::span<const int> sorted_elements);

struct FamilySizeStats {
  std::vector<std::uint64_t> sizes;  // sizes[j] = |family_j|
  std::uint64_t min = 0;
  int argmin = 0;  // smallest j attaining the minimum
  std::uint64_t total = 0;
  Rational mean;
};

/// Sizes of all n cyclic families from a single sweep over k-subsets.
/// Accepts 1 <= k <= n - 1.
FamilySizeStats family_size_stats(int n, int k, const SizeCaps& caps = {});

/// A k-subset of z (|z| = k + 1) lying in the cyclic family for shift j.
CyclicSubset cover_witness(const CyclicSubset& z, int j);

/// Number of parts floor((r - 1) / (k - 1)) used by the block partition.
int partition_part_count(int k, int r);
/// Part sizes: n split into consecutive blocks, larger blocks first.
std::vector<int> partition_part_sizes(int n, int k, int r);

/// All k-subsets lying inside one block of the partition of Z_n.
/// Requires k >= 2, r > k, n >= r.
TuranFamily partition_family(int n, int k, int r, const SizeCaps& caps = {});

/// Writes the header line `n=<n> k=<k> j=<j> size=<m>` (partition families
/// use `n=<n> k=<k> r=<r> parts=<a,b,...> size=<m>`) followed by one member
/// per line as comma-separated residues.
void write_family(std::ostream& out, const TuranFamily& family);

/// Parses the format produced by write_family.
TuranFamily read_family(std::istream& in);

}  // namespace turan
