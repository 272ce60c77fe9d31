#include "partequiv/pattern.hpp"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace partequiv {

PatternMatrix::PatternMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<int> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (cells_.size() != rows * cols) throw std::invalid_argument("pattern cell count mismatch");
  for (int v : cells_) {
    if (v < 1) throw std::invalid_argument("pattern class ids must be positive");
  }
}

PatternMatrix PatternMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> cells;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != width) throw std::invalid_argument("ragged pattern rows");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return PatternMatrix(rows.size(), width, std::move(cells));
}

PatternMatrix PatternMatrix::from_family(std::span<const BasisMatrix> family, std::uint64_t rows,
                                         std::uint64_t cols) {
  std::vector<int> cells(rows * cols, 0);
  for (std::size_t b = 0; b < family.size(); ++b) {
    for (const Entry& e : family[b].entries) {
      if (e.row >= rows || e.col >= cols) throw std::invalid_argument("entry outside the grid");
      int& cell = cells[e.row * cols + e.col];
      if (cell != 0) throw std::invalid_argument("family supports overlap");
      cell = static_cast<int>(b) + 1;
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] == 0) {
      throw std::invalid_argument("cell (" + std::to_string(i / cols) + "," +
                                  std::to_string(i % cols) + ") is not covered");
    }
  }
  return PatternMatrix(rows, cols, std::move(cells));
}

int PatternMatrix::classes() const {
  return static_cast<int>(std::set<int>(cells_.begin(), cells_.end()).size());
}

PatternMatrix PatternMatrix::canonical() const {
  std::unordered_map<int, int> relabel;
  std::vector<int> cells;
  cells.reserve(cells_.size());
  for (int v : cells_) {
    auto [it, inserted] = relabel.try_emplace(v, static_cast<int>(relabel.size()) + 1);
    cells.push_back(it->second);
  }
  return PatternMatrix(rows_, cols_, std::move(cells));
}

PatternMatrix PatternMatrix::transposed() const {
  std::vector<int> cells(cells_.size());
  for (std::uint64_t r = 0; r < rows_; ++r) {
    for (std::uint64_t c = 0; c < cols_; ++c) cells[c * rows_ + r] = at(r, c);
  }
  return PatternMatrix(cols_, rows_, std::move(cells));
}

std::vector<std::vector<int>> PatternMatrix::to_rows() const {
  std::vector<std::vector<int>> out;
  for (std::uint64_t r = 0; r < rows_; ++r) {
    out.emplace_back(cells_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  return out;
}

std::string PatternMatrix::to_text() const {
  std::string out;
  for (std::uint64_t r = 0; r < rows_; ++r) {
    for (std::uint64_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(at(r, c));
    }
    out += '\n';
  }
  return out;
}

std::optional<Entry> first_difference(const PatternMatrix& a, const PatternMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("pattern shapes differ");
  }
  for (std::uint64_t r = 0; r < a.rows(); ++r) {
    for (std::uint64_t c = 0; c < a.cols(); ++c) {
      if (a.at(r, c) != b.at(r, c)) return Entry{r, c};
    }
  }
  return std::nullopt;
}

}  // namespace partequiv
