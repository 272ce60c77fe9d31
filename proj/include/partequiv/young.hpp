#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "partequiv/bigint.hpp"

namespace partequiv {

/// A box of a Young frame; 1-based, rows increase downwards.
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

/// Integer partition lambda of n, stored as its weakly decreasing list of
/// positive parts. Indexes an irreducible representation of S_n.
class IntegerPartition {
 public:
  IntegerPartition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Row length, 0 for rows past the last part. Row index is 1-based.
  int row(int i) const;

  /// "(3,1,1)"
  std::string to_string() const;
  /// "(3,1^2)"; display only.
  std::string to_power_string() const;
  /// Accepts "(3,1,1)", "3,1,1" and power notation "(3,1^2)".
  static IntegerPartition parse(std::string_view text);

  bool operator==(const IntegerPartition& other) const { return parts_ == other.parts_; }
  /// Orders by n, then reverse-lexicographically so that (n) sorts first.
  std::strong_ordering operator<=>(const IntegerPartition& other) const;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order, (n) first and (1^n) last.
/// Throws std::invalid_argument for n < 1.
std::vector<IntegerPartition> enumerate_partitions(int n);

/// Number of partitions of n (p(0) = 1).
BigInt partition_count(int n);

std::vector<Box> removable_boxes(const IntegerPartition& lambda);
std::vector<Box> addable_boxes(const IntegerPartition& lambda);

/// Frame with the given box deleted / inserted. The box must be removable / addable.
IntegerPartition remove_box(const IntegerPartition& lambda, Box box);
IntegerPartition add_box(const IntegerPartition& lambda, Box box);

/// Hook length of the box (arm + leg + 1).
int hook_length(const IntegerPartition& lambda, Box box);

/// f^lambda = n! / prod of hook lengths, the dimension of the Specht module.
BigInt specht_dimension(const IntegerPartition& lambda);

/// alpha_{lambda,mu}: number of ways to reach mu from lambda by removing one box
/// and then adding one box. Throws std::invalid_argument when |lambda| != |mu|.
int remove_add_count(const IntegerPartition& lambda, const IntegerPartition& mu);

}  // namespace partequiv
