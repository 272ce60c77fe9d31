#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partequiv/bigint.hpp"
#include "partequiv/equimap.hpp"
#include "partequiv/setpart.hpp"

namespace partequiv {

/// One symmetric group factor S_n acting on Hom(M_n^{(x)k}, M_n^{(x)l}).
/// Feature factors (d, p, q) are stored the same way with n = d, k = p, l = q;
/// the flag only records where they came from.
struct Factor {
  int n = 1;
  int k = 0;
  int l = 0;
  bool feature = false;

  ShapeSplit split() const { return {l, k}; }
  bool operator==(const Factor&) const = default;
};

/// Ordered factors of a layer equivariant to a product of symmetric groups.
/// Order is significant: the leftmost factor is the most significant index.
struct LayerSpec {
  std::vector<Factor> factors;

  /// "n:k->l" entries joined by commas; "f d:p->q" adds a feature factor after
  /// the preceding data factor. Throws std::invalid_argument on bad input.
  static LayerSpec parse(std::string_view text);
  std::string to_string() const;
  /// Throws std::invalid_argument unless every n >= 1 and k, l >= 0.
  void validate() const;

  int total_n() const;
  int total_k() const;
  int total_l() const;
  /// Grid shape of the product space; throws std::overflow_error when too large.
  std::uint64_t rows() const;
  std::uint64_t cols() const;
};

/// One set partition per factor, partition r over [l_r + k_r].
struct DiagramTuple {
  std::vector<SetPartition> components;
  std::string to_string() const;
  bool operator==(const DiagramTuple&) const = default;
};

/// prod_r Bell(l_r + k_r, n_r), feature factors included.
BigInt product_dim(const LayerSpec& spec);

/// All tuples with component r in Pi_{l_r+k_r, n_r}; rightmost factor fastest.
std::vector<DiagramTuple> enumerate_diagram_tuples(const LayerSpec& spec);

/// Kronecker product of the per-factor X_pi, leftmost factor most significant.
/// The result has k = sum k_r, l = sum l_r and n = 0 (no single n applies).
BasisMatrix product_basis_matrix(const DiagramTuple& t, const LayerSpec& spec);

/// Every product basis matrix in enumerate_diagram_tuples order, behind a cap on
/// the grid size.
std::vector<BasisMatrix> product_basis(const LayerSpec& spec,
                                       std::uint64_t cap = kDefaultEntryCap);

/// Sparse Kronecker product of 0/1 matrices, a most significant.
BasisMatrix kronecker(const BasisMatrix& a, const BasisMatrix& b);

/// Drops the demarcation lines: the tuple becomes one partition over
/// [sum (l_r + k_r)] whose top row is the concatenated top rows and whose bottom
/// row is the concatenated bottom rows.
std::pair<SetPartition, ShapeSplit> demarcation_embed(const DiagramTuple& t, const LayerSpec& spec);

/// Cell action of (sigma_1, ..., sigma_m) on the product grid.
CellAction product_action(const std::vector<Permutation>& sigmas, const LayerSpec& spec);

/// Product-group equivariance of a disjoint family on the product grid: every
/// per-factor generator (identity elsewhere), then options.trials independent
/// random tuples.
BasisEquivarianceReport verify_product_equivariance(std::span<const BasisMatrix> family,
                                                    const LayerSpec& spec,
                                                    const VerifyOptions& options = {});

/// Maps product cells into the global grid for S_{sum n_r}: factor r's values
/// are shifted by n_1 + ... + n_{r-1}. True when every cell of the product
/// matrix lands in the orbit of demarcation_embed(t).
bool embedding_contains_support(const DiagramTuple& t, const LayerSpec& spec);

}  // namespace partequiv
