#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "partequiv/bigint.hpp"
#include "partequiv/diagram.hpp"
#include "partequiv/setpart.hpp"

namespace partequiv {

/// Default refusal threshold for materialized matrix entries / cells.
inline constexpr std::uint64_t kDefaultEntryCap = 10'000'000;
/// Default seed for every randomized check.
inline constexpr std::uint64_t kDefaultSeed = 1;

/// Raised when an output would exceed the configured size cap.
class SizeCapExceeded : public std::length_error {
 public:
  SizeCapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap);
  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// Position of a nonzero cell.
struct Entry {
  std::uint64_t row = 0;
  std::uint64_t col = 0;
  auto operator<=>(const Entry&) const = default;
};

/// Sparse 0/1 matrix in Hom(M_n^{(x)k}, M_n^{(x)l}), or a Kronecker product of
/// such matrices. Entries are distinct and sorted.
struct BasisMatrix {
  int n = 0;
  int k = 0;
  int l = 0;
  std::uint64_t rows = 0;
  std::uint64_t cols = 0;
  std::vector<Entry> entries;
  /// The set partition whose orbit this matrix sums; empty for oracle output.
  std::optional<SetPartition> source;

  bool contains(Entry e) const;
  bool operator==(const BasisMatrix&) const = default;
};

/// Dense matrix with exact integer entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::uint64_t rows, std::uint64_t cols);

  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  BigInt& at(std::uint64_t r, std::uint64_t c) { return cells_[r * cols_ + c]; }
  const BigInt& at(std::uint64_t r, std::uint64_t c) const { return cells_[r * cols_ + c]; }

  static IntMatrix identity(std::uint64_t size);
  static IntMatrix from_basis(const BasisMatrix& m);
  void add_scaled(const BasisMatrix& m, const BigInt& coeff);
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix scaled(const BigInt& factor) const;
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::uint64_t rows_ = 0;
  std::uint64_t cols_ = 0;
  std::vector<BigInt> cells_;
};

/// Positions sharing a value share a block.
SetPartition kernel_partition(std::span<const int> tuple);

/// Row-major flat index of a multi-index in [n]^m: leftmost coordinate most
/// significant, 1-based coordinates, 0-based result. The empty tuple maps to 0.
std::uint64_t encode_index(std::span<const int> tuple, int n);
std::vector<int> decode_index(std::uint64_t flat, int n, int length);

/// n (n-1) ... (n-t+1).
std::uint64_t falling_factorial(int n, int t);

/// X_pi: sum of matrix units over every index tuple with kernel partition pi.
/// Enumerates injective block labellings, never the full grid. Throws
/// std::invalid_argument when pi has more than n blocks.
BasisMatrix basis_matrix(const SetPartition& pi, int n, ShapeSplit split);

/// One X_pi per pi in Pi_{l+k,n}, in canonical set partition order. workers > 1
/// builds the matrices on several threads; the order is unaffected.
std::vector<BasisMatrix> full_basis(int n, int k, int l, std::uint64_t cap = kDefaultEntryCap,
                                    unsigned workers = 1);

/// Basis of the S_n-invariant vectors of M_n^{(x)l}: full_basis(n, 0, l).
std::vector<BasisMatrix> bias_basis(int n, int l, std::uint64_t cap = kDefaultEntryCap);

/// Phi_{k,n} applied to an element of P_k(n) given in either basis.
IntMatrix phi_on_diagram(const AlgebraElement& a, int n, std::uint64_t cap = kDefaultEntryCap);

/// Phi(d_pi) read off directly: cell (I, J) is 1 iff the tuple I J is constant
/// on every block of pi. Does not go through the orbit basis.
BasisMatrix diagram_image(const SetPartition& pi, int n, ShapeSplit split,
                          std::uint64_t cap = kDefaultEntryCap);

/// dim Ker(Phi_{k,n}) = Bell(2k) minus the rank of the images of all diagram
/// basis elements. The rank is taken modulo the prime 2^31 - 1, which can only
/// undercount; callers comparing against an upper bound get an exact answer.
std::uint64_t phi_kernel_dimension(int k, int n, std::uint64_t cap = kDefaultEntryCap);
std::uint64_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows);

/// Basis of Hom_{S_n}(M_n^{(x)k} (x) C^{d_k}, M_n^{(x)l} (x) C^{d_l}); elements are
/// produced on demand. Element (pi, i, j) is X_pi (x) E_{i,j} with the feature
/// index least significant.
class FeatureBasis {
 public:
  FeatureBasis(int n, int k, int l, int d_k, int d_l, std::uint64_t cap = kDefaultEntryCap);

  std::size_t size() const;
  /// Element number index; pi varies slowest, then i in [d_l], then j in [d_k].
  BasisMatrix at(std::size_t index) const;
  /// (pi, i, j) for an element number; i and j are 1-based.
  std::tuple<const SetPartition&, int, int> label(std::size_t index) const;

 private:
  int n_, k_, l_, d_k_, d_l_;
  std::vector<SetPartition> partitions_;
};

/// Bijection of [n] given by its 1-based images.
class Permutation {
 public:
  /// Throws std::invalid_argument unless images is a bijection of [n].
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  /// Cycle (a1 a2 ... ar) on [n].
  static Permutation cycle(int n, const std::vector<int>& points);
  /// Adjacent transpositions (i i+1) followed by the n-cycle (1 2 ... n).
  static std::vector<Permutation> generators(int n);
  template <class Rng>
  static Permutation random(int n, Rng& rng);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
  const std::vector<int>& images() const { return images_; }
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// rho_k(sigma) as a map on flat indices: image[flat(I)] = flat(sigma(I)).
std::vector<std::uint64_t> permutation_tensor_matrix(const Permutation& sigma, int n, int k,
                                                     std::uint64_t cap = kDefaultEntryCap);

struct Counterexample {
  std::vector<Permutation> sigma;  ///< one permutation per group factor
  Entry cell;                      ///< a cell whose image breaks the symmetry
  std::string detail;
};

struct EquivarianceReport {
  bool passed = true;
  std::size_t permutations_checked = 0;
  std::optional<Counterexample> counterexample;
};

struct VerifyOptions {
  int trials = 50;
  std::uint64_t seed = kDefaultSeed;
};

/// Checks rho_l(sigma) M = M rho_k(sigma) on the generator set and on
/// options.trials seeded random permutations. Throws std::invalid_argument
/// when the shape is not (n^l, n^k).
EquivarianceReport verify_equivariance(const BasisMatrix& m, int n, int k, int l,
                                       const VerifyOptions& options = {});
EquivarianceReport verify_equivariance(const IntMatrix& m, int n, int k, int l,
                                       const VerifyOptions& options = {});

/// Same check for a whole family of 0/1 matrices with disjoint supports at once.
/// Reports the number of matrices that passed.
struct BasisEquivarianceReport {
  std::size_t matrices = 0;
  std::size_t passed = 0;
  std::size_t permutations_checked = 0;
  std::optional<Counterexample> counterexample;
  bool ok() const { return passed == matrices; }
};
BasisEquivarianceReport verify_basis_equivariance(std::span<const BasisMatrix> basis, int n, int k,
                                                  int l, const VerifyOptions& options = {});

/// A group element acting on the cells of a (rows x cols) grid: cell (r, c)
/// goes to (row_map[r], col_map[c]).
struct CellAction {
  std::vector<Permutation> sigma;
  std::vector<std::uint64_t> row_map;
  std::vector<std::uint64_t> col_map;
};

/// Checks that each 0/1 matrix of a disjoint family is invariant under every
/// action make(0..count-1). Actions are built one at a time.
BasisEquivarianceReport check_family_invariance(std::span<const BasisMatrix> family,
                                                std::size_t count,
                                                const std::function<CellAction(std::size_t)>& make);

/// Orbits of the group generated by adjacent transpositions and the n-cycle on
/// the full (n^l x n^k) grid, by union-find. Uses no set partitions.
std::vector<BasisMatrix> oracle_basis(int n, int k, int l, std::uint64_t cap = 1'000'000);

/// Sorted supports; two families describe the same basis iff these are equal.
std::vector<std::vector<Entry>> support_set(std::span<const BasisMatrix> family);

/// Supports pairwise disjoint and covering the whole grid.
struct TilingReport {
  bool disjoint = true;
  bool covering = true;
  std::uint64_t cells = 0;
  std::uint64_t covered = 0;
  bool ok() const { return disjoint && covering; }
};
TilingReport check_tiling(std::span<const BasisMatrix> family, std::uint64_t rows,
                          std::uint64_t cols);

// -- implementation of the template member --

template <class Rng>
Permutation Permutation::random(int n, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i) {
    auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(images));
}

}  // namespace partequiv
