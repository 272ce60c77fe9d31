#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partequiv/equimap.hpp"

namespace partequiv {

/// Weight-sharing template: every cell holds the id of its parameter class.
class PatternMatrix {
 public:
  PatternMatrix() = default;
  /// Throws std::invalid_argument unless cells has rows*cols positive values.
  PatternMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<int> cells);
  static PatternMatrix from_rows(const std::vector<std::vector<int>>& rows);
  /// Cell value = 1 + index of the family member covering it. Throws when the
  /// family overlaps or leaves a cell uncovered.
  static PatternMatrix from_family(std::span<const BasisMatrix> family, std::uint64_t rows,
                                   std::uint64_t cols);

  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  int at(std::uint64_t r, std::uint64_t c) const { return cells_[r * cols_ + c]; }
  const std::vector<int>& cells() const { return cells_; }
  /// Number of distinct ids.
  int classes() const;

  /// Relabels ids 1, 2, ... by first occurrence in row-major order.
  PatternMatrix canonical() const;
  bool is_canonical() const { return *this == canonical(); }
  PatternMatrix transposed() const;

  std::vector<std::vector<int>> to_rows() const;
  /// One line per row, ids separated by single spaces.
  std::string to_text() const;

  bool operator==(const PatternMatrix&) const = default;

 private:
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
  std::vector<int> cells_;
};

/// First cell where a and b differ, or nullopt when equal. Shapes must agree.
std::optional<Entry> first_difference(const PatternMatrix& a, const PatternMatrix& b);

}  // namespace partequiv
