#include "partequiv/young.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace partequiv {

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) {
      throw std::overflow_error("integer power exceeds 64 bits");
    }
    result *= base;
  }
  return result;
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int IntegerPartition::row(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

std::string IntegerPartition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::string IntegerPartition::to_power_string() const {
  std::string out = "(";
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

IntegerPartition IntegerPartition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  auto read_int = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("malformed partition: " + std::string(text));
    }
    return value;
  };
  std::string_view body = trim(text);
  std::vector<int> parts;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    auto caret = item.find('^');
    int value = read_int(item.substr(0, caret));
    int times = caret == std::string_view::npos ? 1 : read_int(item.substr(caret + 1));
    if (times < 1) throw std::invalid_argument("malformed partition: " + std::string(text));
    parts.insert(parts.end(), static_cast<std::size_t>(times), value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return IntegerPartition(std::move(parts));
}

std::strong_ordering IntegerPartition::operator<=>(const IntegerPartition& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  // Reverse lexicographic: the larger part list comes first.
  return std::lexicographical_compare_three_way(other.parts_.begin(), other.parts_.end(),
                                                parts_.begin(), parts_.end());
}

std::vector<IntegerPartition> enumerate_partitions(int n) {
  if (n < 1) {
    throw std::invalid_argument("enumerate_partitions requires n >= 1");
  }
  std::vector<IntegerPartition> out;
  std::vector<int> parts{n};
  while (true) {
    out.emplace_back(parts);
    // Next partition in reverse-lex order: find the rightmost part > 1,
    // decrement it and refill the remainder greedily with that value.
    int remainder = 0;
    while (!parts.empty() && parts.back() == 1) {
      ++remainder;
      parts.pop_back();
    }
    if (parts.empty()) break;
    int value = --parts.back();
    ++remainder;
    while (remainder > value) {
      parts.push_back(value);
      remainder -= value;
    }
    if (remainder > 0) parts.push_back(remainder);
  }
  return out;
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  // p(m) via the standard "parts at most j" table.
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int m = part; m <= n; ++m) p[m] += p[m - part];
  }
  return p[n];
}

std::vector<Box> removable_boxes(const IntegerPartition& lambda) {
  std::vector<Box> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.row(i + 1) < lambda.row(i)) out.push_back({i, lambda.row(i)});
  }
  return out;
}

std::vector<Box> addable_boxes(const IntegerPartition& lambda) {
  std::vector<Box> out;
  out.push_back({1, lambda.row(1) + 1});
  for (int i = 2; i <= lambda.length() + 1; ++i) {
    if (lambda.row(i) < lambda.row(i - 1)) out.push_back({i, lambda.row(i) + 1});
  }
  return out;
}

IntegerPartition remove_box(const IntegerPartition& lambda, Box box) {
  if (box.row < 1 || box.row > lambda.length() || lambda.row(box.row) != box.col ||
      lambda.row(box.row + 1) >= box.col) {
    throw std::invalid_argument("box is not removable from " + lambda.to_string());
  }
  std::vector<int> parts = lambda.parts();
  if (--parts[static_cast<std::size_t>(box.row - 1)] == 0) parts.pop_back();
  return IntegerPartition(std::move(parts));
}

IntegerPartition add_box(const IntegerPartition& lambda, Box box) {
  bool addable = box.row >= 1 && box.row <= lambda.length() + 1 &&
                 lambda.row(box.row) == box.col - 1 &&
                 (box.row == 1 || lambda.row(box.row - 1) >= box.col);
  if (!addable) {
    throw std::invalid_argument("box is not addable to " + lambda.to_string());
  }
  std::vector<int> parts = lambda.parts();
  if (box.row > lambda.length()) {
    parts.push_back(1);
  } else {
    ++parts[static_cast<std::size_t>(box.row - 1)];
  }
  return IntegerPartition(std::move(parts));
}

int hook_length(const IntegerPartition& lambda, Box box) {
  int arm = lambda.row(box.row) - box.col;
  int leg = 0;
  while (lambda.row(box.row + leg + 1) >= box.col) ++leg;
  return arm + leg + 1;
}

BigInt specht_dimension(const IntegerPartition& lambda) {
  BigInt factorial = 1;
  for (int i = 2; i <= lambda.n(); ++i) factorial *= i;
  BigInt hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) hooks *= hook_length(lambda, {i, j});
  }
  if (factorial % hooks != 0) {
    throw std::logic_error("hook product does not divide n! for " + lambda.to_string());
  }
  return factorial / hooks;
}

int remove_add_count(const IntegerPartition& lambda, const IntegerPartition& mu) {
  if (lambda.n() != mu.n()) {
    throw std::invalid_argument("remove_add_count: partitions of different integers");
  }
  int count = 0;
  for (Box removed : removable_boxes(lambda)) {
    IntegerPartition x = remove_box(lambda, removed);
    for (Box added : addable_boxes(x)) {
      if (add_box(x, added) == mu) ++count;
    }
  }
  return count;
}

}  // namespace partequiv
