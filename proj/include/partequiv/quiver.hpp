#pragma once

#include <functional>
#include <vector>

#include "partequiv/bigint.hpp"
#include "partequiv/young.hpp"

namespace partequiv {

/// McKay quiver of the permutation representation M_n of S_n. Nodes are the
/// partitions of n in reverse-lexicographic order; adjacency[a][b] counts the
/// arrows between nodes a and b.
struct McKayQuiver {
  int n = 0;
  std::vector<IntegerPartition> nodes;
  std::vector<std::vector<int>> adjacency;

  /// Position of lambda in nodes; throws std::out_of_range if absent.
  std::size_t index_of(const IntegerPartition& lambda) const;
};

/// Multiplicities m_k^lambda of each irreducible in a tensor power (or, for the
/// intermediate Bratteli rows, in its restriction to S_{n-1}). counts is aligned
/// with nodes.
struct MultiplicityVector {
  int n = 0;      ///< size of the group whose irreducibles index nodes
  int level = 0;  ///< tensor power k
  std::vector<IntegerPartition> nodes;
  std::vector<BigInt> counts;

  /// Zero for partitions that do not occur.
  BigInt at(const IntegerPartition& lambda) const;
  BigInt total_dimension() const;  ///< sum of counts times f^lambda
};

/// Throws std::invalid_argument for n < 2.
McKayQuiver build_quiver(int n);

/// Walk counts from (n) via k repeated vector-matrix products.
MultiplicityVector multiplicities_via_power(const McKayQuiver& quiver, int k);

/// One row of the restriction-induction Bratteli diagram. Integer rows hold
/// partitions of n, half-integer rows partitions of n-1.
struct BratteliRow {
  int twice_level = 0;  ///< 2k for row k, 2k+1 for row k + 1/2
  MultiplicityVector multiplicities;
  bool is_half() const { return twice_level % 2 == 1; }
};

/// Streams rows 0, 1/2, 1, ..., k of the Bratteli diagram to the callback;
/// only the current pair of rows is held in memory.
void for_each_bratteli_row(int n, int k, const std::function<void(const BratteliRow&)>& visit);

/// Path counts to row k of the Bratteli diagram; equal to multiplicities_via_power.
MultiplicityVector multiplicities_via_bratteli(int n, int k);

/// dim End_{S_n}(M_n^{(x)k}) = sum over lambda of (m_k^lambda)^2.
BigInt end_dim(int n, int k);
/// dim Hom_{S_n}(M_n^{(x)k}, M_n^{(x)l}) = sum over lambda of m_k^lambda m_l^lambda.
BigInt hom_dim(int n, int k, int l);

}  // namespace partequiv
