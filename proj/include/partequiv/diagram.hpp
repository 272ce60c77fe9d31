#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "partequiv/bigint.hpp"
#include "partequiv/setpart.hpp"

namespace partequiv {

/// Which basis of P_k^l(n) a diagram belongs to. The structure is identical;
/// only the meaning differs (black vs white vertices).
enum class BasisKind { diagram, orbit };

const char* to_string(BasisKind kind);

/// A basis element d_pi or x_pi of P_k^l(n).
struct Diagram {
  SetPartition partition;
  ShapeSplit split;
  BasisKind kind = BasisKind::diagram;

  /// Throws std::invalid_argument when split and partition sizes disagree.
  Diagram(SetPartition partition, ShapeSplit split, BasisKind kind = BasisKind::diagram);
};

/// {1,k+1 | 2,k+2 | ... | k,2k}, the unit of P_k(n).
Diagram identity_diagram(int k);

/// Result of stacking two diagrams: d1 d2 = n^c (d1 o d2).
struct Composition {
  int removed_components = 0;  ///< c
  BigInt coefficient;          ///< n^c
  Diagram result;
};

/// Places d1 on top of d2, joins through the middle row and deletes the
/// components that live entirely in the middle. Both inputs must be square
/// diagram-basis elements with the same k.
Composition compose(const Diagram& d1, const Diagram& d2, int n);

/// Exact linear combination of basis elements of P_k(n) in one basis.
class AlgebraElement {
 public:
  using Terms = std::map<SetPartition, BigInt>;

  AlgebraElement(int k, BasisKind kind) : k_(k), kind_(kind) {}
  static AlgebraElement basis_element(const Diagram& d);

  int k() const { return k_; }
  BasisKind kind() const { return kind_; }
  const Terms& terms() const { return terms_; }

  /// Adds coeff * pi; zero results are pruned.
  void add(const SetPartition& pi, const BigInt& coeff);
  BigInt coefficient(const SetPartition& pi) const;

  bool operator==(const AlgebraElement& other) const = default;

 private:
  int k_;
  BasisKind kind_;
  Terms terms_;
};

/// Bilinear extension of compose. Both factors must be in the diagram basis.
AlgebraElement algebra_product(const AlgebraElement& a, const AlgebraElement& b, int n);

/// Change of basis between diagram and orbit bases of the partition space on [m].
///
/// Partitions are ordered by block count ascending (ties in canonical order).
/// In that order the matrix T with T[theta][pi] = 1 iff pi refines theta takes
/// diagram coordinates to orbit coordinates and is upper unitriangular.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(int m);

  int m() const { return m_; }
  std::size_t dimension() const { return order_.size(); }
  const std::vector<SetPartition>& order() const { return order_; }
  std::size_t index_of(const SetPartition& pi) const;
  /// Indices i != j with order()[i] refining order()[j]; all exceed j.
  const std::vector<std::size_t>& strict_refinements(std::size_t j) const { return finer_[j]; }
  /// T[row][col].
  int entry(std::size_t row, std::size_t col) const;

  /// x = T y.
  std::vector<BigInt> to_orbit(const std::vector<BigInt>& diagram_coords) const;
  /// y = T^{-1} x by back substitution.
  std::vector<BigInt> to_diagram(const std::vector<BigInt>& orbit_coords) const;

 private:
  int m_;
  std::vector<SetPartition> order_;
  std::map<SetPartition, std::size_t> index_;
  std::vector<std::vector<std::size_t>> finer_;
};

/// Largest m for which transition matrices are built unless overridden.
inline constexpr int kDefaultTransitionCap = 8;

/// Shared, lazily built transition matrix for [m]; safe for concurrent callers.
/// Throws std::length_error when m exceeds cap.
std::shared_ptr<const TransitionMatrix> transition_matrix(int m, int cap = kDefaultTransitionCap);

AlgebraElement transition_to_orbit(const AlgebraElement& a, int cap = kDefaultTransitionCap);
AlgebraElement transition_to_diagram(const AlgebraElement& a, int cap = kDefaultTransitionCap);

}  // namespace partequiv
