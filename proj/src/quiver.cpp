#include "partequiv/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace partequiv {

namespace {

std::size_t find_node(const std::vector<IntegerPartition>& nodes, const IntegerPartition& lambda) {
  // nodes are sorted by IntegerPartition ordering (reverse-lex).
  auto it = std::lower_bound(nodes.begin(), nodes.end(), lambda);
  if (it == nodes.end() || *it != lambda) {
    throw std::out_of_range("partition " + lambda.to_string() + " is not a node");
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

MultiplicityVector indicator_of_trivial(int n) {
  MultiplicityVector v;
  v.n = n;
  v.nodes = enumerate_partitions(n);
  v.counts.assign(v.nodes.size(), 0);
  v.counts[0] = 1;
  return v;
}

}  // namespace

std::size_t McKayQuiver::index_of(const IntegerPartition& lambda) const {
  return find_node(nodes, lambda);
}

BigInt MultiplicityVector::at(const IntegerPartition& lambda) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), lambda);
  if (it == nodes.end() || *it != lambda) return 0;
  return counts[static_cast<std::size_t>(it - nodes.begin())];
}

BigInt MultiplicityVector::total_dimension() const {
  BigInt total = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (counts[i] != 0) total += counts[i] * specht_dimension(nodes[i]);
  }
  return total;
}

McKayQuiver build_quiver(int n) {
  if (n < 2) throw std::invalid_argument("build_quiver requires n >= 2");
  McKayQuiver q;
  q.n = n;
  q.nodes = enumerate_partitions(n);
  const std::size_t size = q.nodes.size();
  q.adjacency.assign(size, std::vector<int>(size, 0));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      q.adjacency[a][b] = remove_add_count(q.nodes[a], q.nodes[b]);
    }
  }
  return q;
}

MultiplicityVector multiplicities_via_power(const McKayQuiver& quiver, int k) {
  if (k < 0) throw std::invalid_argument("tensor power must be nonnegative");
  MultiplicityVector v = indicator_of_trivial(quiver.n);
  const std::size_t size = quiver.nodes.size();
  for (int step = 0; step < k; ++step) {
    std::vector<BigInt> next(size, 0);
    for (std::size_t a = 0; a < size; ++a) {
      if (v.counts[a] == 0) continue;
      for (std::size_t b = 0; b < size; ++b) {
        if (int alpha = quiver.adjacency[a][b]; alpha != 0) next[b] += alpha * v.counts[a];
      }
    }
    v.counts = std::move(next);
  }
  v.level = k;
  return v;
}

void for_each_bratteli_row(int n, int k, const std::function<void(const BratteliRow&)>& visit) {
  if (n < 2) throw std::invalid_argument("Bratteli diagram requires n >= 2");
  if (k < 0) throw std::invalid_argument("tensor power must be nonnegative");
  BratteliRow whole{0, indicator_of_trivial(n)};
  BratteliRow half;
  half.multiplicities.n = n - 1;
  half.multiplicities.nodes = enumerate_partitions(n - 1);
  visit(whole);
  for (int level = 0; level < k; ++level) {
    // Restriction: each lambda of n feeds every mu obtained by removing a box.
    half.twice_level = 2 * level + 1;
    half.multiplicities.level = level;
    half.multiplicities.counts.assign(half.multiplicities.nodes.size(), 0);
    const auto& upper = whole.multiplicities;
    for (std::size_t a = 0; a < upper.nodes.size(); ++a) {
      if (upper.counts[a] == 0) continue;
      for (Box box : removable_boxes(upper.nodes[a])) {
        auto mu = remove_box(upper.nodes[a], box);
        half.multiplicities.counts[find_node(half.multiplicities.nodes, mu)] += upper.counts[a];
      }
    }
    visit(half);
    // Induction: each mu of n-1 feeds every nu obtained by adding a box.
    std::vector<BigInt> next(upper.nodes.size(), 0);
    for (std::size_t a = 0; a < half.multiplicities.nodes.size(); ++a) {
      const BigInt& c = half.multiplicities.counts[a];
      if (c == 0) continue;
      for (Box box : addable_boxes(half.multiplicities.nodes[a])) {
        next[find_node(upper.nodes, add_box(half.multiplicities.nodes[a], box))] += c;
      }
    }
    whole.twice_level = 2 * (level + 1);
    whole.multiplicities.level = level + 1;
    whole.multiplicities.counts = std::move(next);
    visit(whole);
  }
}

MultiplicityVector multiplicities_via_bratteli(int n, int k) {
  MultiplicityVector out;
  for_each_bratteli_row(n, k, [&](const BratteliRow& row) {
    if (row.twice_level == 2 * k) out = row.multiplicities;
  });
  return out;
}

BigInt end_dim(int n, int k) { return hom_dim(n, k, k); }

BigInt hom_dim(int n, int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("tensor powers must be nonnegative");
  McKayQuiver q = build_quiver(n);
  MultiplicityVector mk = multiplicities_via_power(q, k);
  MultiplicityVector ml = k == l ? mk : multiplicities_via_power(q, l);
  BigInt total = 0;
  for (std::size_t i = 0; i < mk.counts.size(); ++i) total += mk.counts[i] * ml.counts[i];
  return total;
}

}  // namespace partequiv
