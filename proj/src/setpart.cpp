#include "partequiv/setpart.hpp"

#include <algorithm>
#include <stdexcept>

namespace partequiv {

SetPartition SetPartition::from_blocks(int m, const std::vector<std::vector<int>>& blocks) {
  if (m < 0) throw std::invalid_argument("set partition size must be nonnegative");
  std::vector<int> labels(static_cast<std::size_t>(m), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("set partition has an empty block");
    for (int element : blocks[b]) {
      if (element < 1 || element > m) {
        throw std::invalid_argument("set partition element out of range: " +
                                    std::to_string(element));
      }
      auto& slot = labels[static_cast<std::size_t>(element - 1)];
      if (slot != -1) {
        throw std::invalid_argument("set partition blocks overlap at " +
                                    std::to_string(element));
      }
      slot = static_cast<int>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
    throw std::invalid_argument("set partition blocks do not cover [m]");
  }
  return from_labels(labels);
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
  SetPartition out;
  out.rgs_.resize(labels.size());
  std::vector<std::pair<int, int>> seen;  // (label, block index)
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& entry) { return entry.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], out.blocks_++);
      out.rgs_[i] = out.blocks_ - 1;
    } else {
      out.rgs_[i] = it->second;
    }
  }
  return out;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
  for (std::size_t i = 0; i < rgs_.size(); ++i) {
    out[static_cast<std::size_t>(rgs_[i])].push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b > 0) out += '|';
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(bs[b][i]);
    }
  }
  return out + "}";
}

std::strong_ordering SetPartition::operator<=>(const SetPartition& other) const {
  if (auto c = rgs_.size() <=> other.rgs_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(rgs_.begin(), rgs_.end(), other.rgs_.begin(),
                                                other.rgs_.end());
}

std::vector<SetPartition> enumerate_set_partitions(int m, int max_blocks) {
  if (m < 0) throw std::invalid_argument("enumerate_set_partitions requires m >= 0");
  if (max_blocks < 0) throw std::invalid_argument("max_blocks must be non-negative");
  std::vector<SetPartition> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  if (max_blocks == 0) return out;
  // Restricted growth strings a with a[0] = 0 and a[i] <= max(a[0..i-1]) + 1,
  // visited in lexicographic order. prefix_max[i] = max(a[0..i]).
  std::vector<int> a(static_cast<std::size_t>(m), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(m), 0);
  const int cap = max_blocks - 1;
  while (true) {
    out.push_back(SetPartition::from_labels(a));
    int i = m - 1;
    while (i > 0) {
      int limit = std::min(prefix_max[static_cast<std::size_t>(i - 1)] + 1, cap);
      if (a[static_cast<std::size_t>(i)] < limit) break;
      --i;
    }
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < m; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

BigInt stirling2(int m, int t) {
  if (m < 0 || t < 0) return 0;
  if (t > m) return 0;
  // Row-by-row recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1).
  std::vector<BigInt> row(static_cast<std::size_t>(t) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, t); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(t)];
}

BigInt restricted_bell(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("restricted_bell requires m, n >= 0");
  if (m == 0) return 1;
  int top = std::min(m, n);
  std::vector<BigInt> row(static_cast<std::size_t>(top) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, top); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  BigInt total = 0;
  for (int j = 1; j <= top; ++j) total += row[static_cast<std::size_t>(j)];
  return total;
}

BigInt bell(int m) { return restricted_bell(m, std::max(m, 0)); }

std::pair<std::vector<int>, std::vector<int>> block_labelling(const SetPartition& pi,
                                                               ShapeSplit split) {
  if (split.l < 0 || split.k < 0 || split.size() != pi.size()) {
    throw std::invalid_argument("block_labelling: split does not match partition size");
  }
  const auto& rgs = pi.growth_string();
  std::vector<int> top, bottom;
  for (int i = 0; i < pi.size(); ++i) {
    (i < split.l ? top : bottom).push_back(rgs[static_cast<std::size_t>(i)] + 1);
  }
  return {std::move(top), std::move(bottom)};
}

bool refines(const SetPartition& pi1, const SetPartition& pi2) {
  if (pi1.size() != pi2.size()) {
    throw std::invalid_argument("refines: partitions of different ground sets");
  }
  if (pi1.block_count() < pi2.block_count()) return false;
  // pi1 refines pi2 iff the pi2 label is a function of the pi1 label.
  std::vector<int> image(static_cast<std::size_t>(pi1.block_count()), -1);
  const auto& a = pi1.growth_string();
  const auto& b = pi2.growth_string();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int& slot = image[static_cast<std::size_t>(a[i])];
    if (slot == -1) {
      slot = b[i];
    } else if (slot != b[i]) {
      return false;
    }
  }
  return true;
}

SetPartition refold(const SetPartition& pi, ShapeSplit from, ShapeSplit to) {
  if (from.l < 0 || from.k < 0 || to.l < 0 || to.k < 0) {
    throw std::invalid_argument("refold: negative row size");
  }
  if (from.size() != pi.size() || to.size() != pi.size()) {
    throw std::invalid_argument("refold: split sizes must both equal the partition size");
  }
  return pi;
}

}  // namespace partequiv
