#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "partequiv/bigint.hpp"

namespace partequiv {

/// Top/bottom row sizes of a diagram over [l + k]: vertices 1..l form the top
/// (output) row and l+1..l+k the bottom (input) row.
struct ShapeSplit {
  int l = 0;
  int k = 0;
  int size() const { return l + k; }
  bool operator==(const ShapeSplit&) const = default;
};

/// A set partition of [m] = {1..m}.
///
/// Stored as its restricted growth string: label(i) is the 0-based index of the
/// block containing element i, with blocks numbered by their smallest element.
/// The blocks view is therefore always in canonical order.
class SetPartition {
 public:
  /// The empty partition of [0].
  SetPartition() = default;

  /// From blocks with 1-based elements in any order; throws std::invalid_argument
  /// unless the blocks are nonempty, disjoint and cover [m].
  static SetPartition from_blocks(int m, const std::vector<std::vector<int>>& blocks);
  /// From any labelling of positions; positions with equal labels share a block.
  static SetPartition from_labels(const std::vector<int>& labels);

  int size() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return blocks_; }
  /// 0-based block index of element i (1-based).
  int block_of(int element) const { return rgs_[static_cast<std::size_t>(element - 1)]; }
  const std::vector<int>& growth_string() const { return rgs_; }
  std::vector<std::vector<int>> blocks() const;

  /// "{1,3|2,4|5}"; the empty partition prints as "{}".
  std::string to_string() const;

  bool operator==(const SetPartition& other) const = default;
  /// Orders by m, then by restricted growth string.
  std::strong_ordering operator<=>(const SetPartition& other) const;

 private:
  std::vector<int> rgs_;
  int blocks_ = 0;
};

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// All set partitions of [m] with at most max_blocks blocks, in lexicographic
/// order of restricted growth strings. This order is the parameter numbering
/// used everywhere downstream. m = 0 yields the single empty partition.
std::vector<SetPartition> enumerate_set_partitions(int m, int max_blocks = kUnbounded);

/// Stirling number of the second kind {m over t}.
BigInt stirling2(int m, int t);
/// Bell(m), number of set partitions of [m].
BigInt bell(int m);
/// Bell(m, n), number of set partitions of [m] with at most n blocks.
BigInt restricted_bell(int m, int n);

/// Block labelling (I_pi, J_pi): position i carries the 1-based canonical index of
/// the block containing i; the first split.l positions form I, the rest J.
std::pair<std::vector<int>, std::vector<int>> block_labelling(const SetPartition& pi,
                                                               ShapeSplit split);

/// pi1 refines pi2: every block of pi1 lies inside a block of pi2.
bool refines(const SetPartition& pi1, const SetPartition& pi2);

/// Reinterprets pi under another split with the same total size. Blocks are
/// never touched; only the split changes meaning.
SetPartition refold(const SetPartition& pi, ShapeSplit from, ShapeSplit to);

}  // namespace partequiv
