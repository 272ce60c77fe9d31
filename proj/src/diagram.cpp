#include "partequiv/diagram.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace partequiv {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

void require_square_diagram(const Diagram& d) {
  if (d.kind != BasisKind::diagram) {
    throw std::invalid_argument("composition is defined on the diagram basis only");
  }
  if (d.split.l != d.split.k) {
    throw std::invalid_argument("composition requires square diagrams (l == k)");
  }
}

}  // namespace

const char* to_string(BasisKind kind) { return kind == BasisKind::diagram ? "diagram" : "orbit"; }

Diagram::Diagram(SetPartition partition_, ShapeSplit split_, BasisKind kind_)
    : partition(std::move(partition_)), split(split_), kind(kind_) {
  if (split.l < 0 || split.k < 0 || split.size() != partition.size()) {
    throw std::invalid_argument("diagram split does not match partition size");
  }
}

Diagram identity_diagram(int k) {
  if (k < 0) throw std::invalid_argument("identity_diagram requires k >= 0");
  std::vector<int> labels(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    labels[static_cast<std::size_t>(i)] = i;
    labels[static_cast<std::size_t>(k + i)] = i;
  }
  return Diagram(SetPartition::from_labels(labels), {k, k});
}

Composition compose(const Diagram& d1, const Diagram& d2, int n) {
  require_square_diagram(d1);
  require_square_diagram(d2);
  if (d1.split.k != d2.split.k) throw std::invalid_argument("composition of different k");
  if (n < 1) throw std::invalid_argument("composition requires n >= 1");
  const int k = d1.split.k;
  // Virtual vertices: top row 0..k-1 (d1 top), middle k..2k-1 (d1 bottom =
  // d2 top), bottom 2k..3k-1 (d2 bottom).
  UnionFind uf(3 * k);
  auto join_blocks = [&](const SetPartition& pi, int offset) {
    std::vector<int> first(static_cast<std::size_t>(pi.block_count()), -1);
    for (int e = 1; e <= 2 * k; ++e) {
      int vertex = offset + e - 1;
      int& rep = first[static_cast<std::size_t>(pi.block_of(e))];
      if (rep == -1) {
        rep = vertex;
      } else {
        uf.unite(vertex, rep);
      }
    }
  };
  join_blocks(d1.partition, 0);
  join_blocks(d2.partition, k);

  std::vector<char> touches_outer(static_cast<std::size_t>(3 * k), 0);
  for (int v = 0; v < k; ++v) touches_outer[static_cast<std::size_t>(uf.find(v))] = 1;
  for (int v = 2 * k; v < 3 * k; ++v) touches_outer[static_cast<std::size_t>(uf.find(v))] = 1;
  std::vector<char> counted(static_cast<std::size_t>(3 * k), 0);
  int removed = 0;
  for (int v = k; v < 2 * k; ++v) {
    int root = uf.find(v);
    if (!touches_outer[static_cast<std::size_t>(root)] && !counted[static_cast<std::size_t>(root)]) {
      counted[static_cast<std::size_t>(root)] = 1;
      ++removed;
    }
  }

  std::vector<int> labels(static_cast<std::size_t>(2 * k));
  for (int i = 0; i < k; ++i) {
    labels[static_cast<std::size_t>(i)] = uf.find(i);
    labels[static_cast<std::size_t>(k + i)] = uf.find(2 * k + i);
  }
  return Composition{removed, ipow(BigInt(n), static_cast<unsigned>(removed)),
                     Diagram(SetPartition::from_labels(labels), {k, k})};
}

AlgebraElement AlgebraElement::basis_element(const Diagram& d) {
  if (d.split.l != d.split.k) {
    throw std::invalid_argument("algebra elements require square diagrams");
  }
  AlgebraElement a(d.split.k, d.kind);
  a.add(d.partition, 1);
  return a;
}

void AlgebraElement::add(const SetPartition& pi, const BigInt& coeff) {
  if (pi.size() != 2 * k_) {
    throw std::invalid_argument("term " + pi.to_string() + " does not belong to P_" +
                                std::to_string(k_));
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(pi, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt AlgebraElement::coefficient(const SetPartition& pi) const {
  auto it = terms_.find(pi);
  return it == terms_.end() ? BigInt(0) : it->second;
}

AlgebraElement algebra_product(const AlgebraElement& a, const AlgebraElement& b, int n) {
  if (a.kind() != BasisKind::diagram || b.kind() != BasisKind::diagram) {
    throw std::invalid_argument("algebra_product is defined on the diagram basis only");
  }
  if (a.k() != b.k()) throw std::invalid_argument("algebra_product of different k");
  AlgebraElement out(a.k(), BasisKind::diagram);
  const ShapeSplit split{a.k(), a.k()};
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      Composition c = compose(Diagram(pa, split), Diagram(pb, split), n);
      out.add(c.result.partition, ca * cb * c.coefficient);
    }
  }
  return out;
}

TransitionMatrix::TransitionMatrix(int m) : m_(m) {
  order_ = enumerate_set_partitions(m);
  std::stable_sort(order_.begin(), order_.end(), [](const SetPartition& a, const SetPartition& b) {
    return a.block_count() < b.block_count();
  });
  for (std::size_t i = 0; i < order_.size(); ++i) index_.emplace(order_[i], i);
  finer_.resize(order_.size());
  for (std::size_t j = 0; j < order_.size(); ++j) {
    for (std::size_t i = j + 1; i < order_.size(); ++i) {
      if (order_[i].block_count() > order_[j].block_count() && refines(order_[i], order_[j])) {
        finer_[j].push_back(i);
      }
    }
  }
}

std::size_t TransitionMatrix::index_of(const SetPartition& pi) const {
  auto it = index_.find(pi);
  if (it == index_.end()) throw std::out_of_range("partition not in transition matrix");
  return it->second;
}

int TransitionMatrix::entry(std::size_t row, std::size_t col) const {
  if (row == col) return 1;
  const auto& finer = finer_[row];
  return std::binary_search(finer.begin(), finer.end(), col) ? 1 : 0;
}

std::vector<BigInt> TransitionMatrix::to_orbit(const std::vector<BigInt>& y) const {
  if (y.size() != order_.size()) throw std::invalid_argument("coordinate vector size mismatch");
  std::vector<BigInt> x(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    BigInt sum = y[j];
    for (std::size_t i : finer_[j]) {
      if (!y[i].is_zero()) sum += y[i];
    }
    x[j] = std::move(sum);
  }
  return x;
}

std::vector<BigInt> TransitionMatrix::to_diagram(const std::vector<BigInt>& x) const {
  if (x.size() != order_.size()) throw std::invalid_argument("coordinate vector size mismatch");
  std::vector<BigInt> y(x.size());
  for (std::size_t j = x.size(); j-- > 0;) {
    BigInt value = x[j];
    for (std::size_t i : finer_[j]) {
      if (!y[i].is_zero()) value -= y[i];
    }
    y[j] = std::move(value);
  }
  return y;
}

std::shared_ptr<const TransitionMatrix> transition_matrix(int m, int cap) {
  if (m < 0) throw std::invalid_argument("transition_matrix requires m >= 0");
  if (m > cap) {
    throw std::length_error("transition matrix for m = " + std::to_string(m) +
                            " exceeds the cap m <= " + std::to_string(cap) + " (Bell(" +
                            std::to_string(m) + ") = " + bell(m).str() + " rows)");
  }
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const TransitionMatrix>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const TransitionMatrix>(m);
  std::lock_guard lock(mutex);
  return cache.try_emplace(m, std::move(built)).first->second;
}

namespace {

AlgebraElement change_basis(const AlgebraElement& a, BasisKind from, BasisKind to, int cap) {
  if (a.kind() != from) {
    throw std::invalid_argument(std::string("expected an element in the ") + to_string(from) +
                                " basis");
  }
  auto t = transition_matrix(2 * a.k(), cap);
  std::vector<BigInt> coords(t->dimension(), 0);
  for (const auto& [pi, c] : a.terms()) coords[t->index_of(pi)] = c;
  coords = to == BasisKind::orbit ? t->to_orbit(coords) : t->to_diagram(coords);
  AlgebraElement out(a.k(), to);
  for (std::size_t i = 0; i < coords.size(); ++i) out.add(t->order()[i], coords[i]);
  return out;
}

}  // namespace

AlgebraElement transition_to_orbit(const AlgebraElement& a, int cap) {
  return change_basis(a, BasisKind::diagram, BasisKind::orbit, cap);
}

AlgebraElement transition_to_diagram(const AlgebraElement& a, int cap) {
  return change_basis(a, BasisKind::orbit, BasisKind::diagram, cap);
}

}  // namespace partequiv
