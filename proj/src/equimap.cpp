#include "partequiv/equimap.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <thread>

namespace partequiv {

SizeCapExceeded::SizeCapExceeded(const std::string& what, std::uint64_t required,
                                 std::uint64_t cap)
    : std::length_error(what + " needs " + std::to_string(required) +
                        " entries, above the cap of " + std::to_string(cap) + " (about " +
                        std::to_string(required * 16 / (1024 * 1024)) +
                        " MiB); raise the cap to proceed"),
      required_(required),
      cap_(cap) {}

namespace {

/// n^e, or a value above cap when it does not fit in 64 bits.
std::uint64_t saturating_pow(int n, int e, std::uint64_t cap) {
  try {
    return checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(e));
  } catch (const std::overflow_error&) {
    return cap == UINT64_MAX ? cap : cap + 1;
  }
}

void require_valid_nkl(int n, int k, int l) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 0 || l < 0) throw std::invalid_argument("tensor powers must be nonnegative");
}

void require_shape(std::uint64_t rows, std::uint64_t cols, int n, int k, int l) {
  require_valid_nkl(n, k, l);
  if (rows != checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(l)) ||
      cols != checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(k))) {
    throw std::invalid_argument("matrix shape is not (n^l, n^k)");
  }
}

std::vector<Permutation> permutations_to_check(int n, const VerifyOptions& options) {
  std::vector<Permutation> perms = Permutation::generators(n);
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < options.trials; ++t) perms.push_back(Permutation::random(n, rng));
  return perms;
}

}  // namespace

bool BasisMatrix::contains(Entry e) const {
  return std::binary_search(entries.begin(), entries.end(), e);
}

IntMatrix::IntMatrix(std::uint64_t rows, std::uint64_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, BigInt(0)) {}

IntMatrix IntMatrix::identity(std::uint64_t size) {
  IntMatrix m(size, size);
  for (std::uint64_t i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_basis(const BasisMatrix& b) {
  IntMatrix m(b.rows, b.cols);
  m.add_scaled(b, 1);
  return m;
}

void IntMatrix::add_scaled(const BasisMatrix& b, const BigInt& coeff) {
  if (b.rows != rows_ || b.cols != cols_) throw std::invalid_argument("matrix shape mismatch");
  for (const Entry& e : b.entries) at(e.row, e.col) += coeff;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::uint64_t i = 0; i < rows_; ++i) {
    for (std::uint64_t j = 0; j < cols_; ++j) {
      const BigInt& a = at(i, j);
      if (a == 0) continue;
      for (std::uint64_t c = 0; c < rhs.cols_; ++c) {
        const BigInt& b = rhs.at(j, c);
        if (b != 0) out.at(i, c) += a * b;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::scaled(const BigInt& factor) const {
  IntMatrix out = *this;
  for (BigInt& cell : out.cells_) cell *= factor;
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const BigInt& c) { return c == 0; });
}

SetPartition kernel_partition(std::span<const int> tuple) {
  return SetPartition::from_labels(std::vector<int>(tuple.begin(), tuple.end()));
}

std::uint64_t encode_index(std::span<const int> tuple, int n) {
  if (n < 1) throw std::invalid_argument("encode_index requires n >= 1");
  // Validates that n^m fits before accumulating.
  checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(tuple.size()));
  std::uint64_t flat = 0;
  for (int value : tuple) {
    if (value < 1 || value > n) {
      throw std::out_of_range("index coordinate " + std::to_string(value) + " outside [1, " +
                              std::to_string(n) + "]");
    }
    flat = flat * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(value - 1);
  }
  return flat;
}

std::vector<int> decode_index(std::uint64_t flat, int n, int length) {
  if (n < 1 || length < 0) throw std::invalid_argument("decode_index: bad arguments");
  if (flat >= checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(length))) {
    throw std::out_of_range("flat index out of range");
  }
  std::vector<int> tuple(static_cast<std::size_t>(length));
  for (int i = length - 1; i >= 0; --i) {
    tuple[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::uint64_t>(n)) + 1;
    flat /= static_cast<std::uint64_t>(n);
  }
  return tuple;
}

std::uint64_t falling_factorial(int n, int t) {
  if (t < 0) throw std::invalid_argument("falling_factorial requires t >= 0");
  if (t > n) return 0;
  std::uint64_t out = 1;
  for (int i = 0; i < t; ++i) out *= static_cast<std::uint64_t>(n - i);
  return out;
}

BasisMatrix basis_matrix(const SetPartition& pi, int n, ShapeSplit split) {
  require_valid_nkl(n, split.k, split.l);
  if (split.size() != pi.size()) {
    throw std::invalid_argument("basis_matrix: partition " + pi.to_string() +
                                " is not over [l+k]");
  }
  const int t = pi.block_count();
  if (t > n) {
    throw std::invalid_argument("basis_matrix: " + pi.to_string() + " has " + std::to_string(t) +
                                " blocks, more than n = " + std::to_string(n));
  }
  BasisMatrix out;
  out.n = n;
  out.k = split.k;
  out.l = split.l;
  out.rows = checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(split.l));
  out.cols = checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(split.k));
  out.source = pi;

  // Place value each block contributes to the row / column index per unit of label.
  std::vector<std::uint64_t> row_weight(static_cast<std::size_t>(t), 0);
  std::vector<std::uint64_t> col_weight(static_cast<std::size_t>(t), 0);
  std::uint64_t place = 1;
  for (int i = split.l - 1; i >= 0; --i, place *= static_cast<std::uint64_t>(n)) {
    row_weight[static_cast<std::size_t>(pi.growth_string()[static_cast<std::size_t>(i)])] += place;
  }
  place = 1;
  for (int i = split.size() - 1; i >= split.l; --i, place *= static_cast<std::uint64_t>(n)) {
    col_weight[static_cast<std::size_t>(pi.growth_string()[static_cast<std::size_t>(i)])] += place;
  }

  out.entries.reserve(falling_factorial(n, t));
  // Depth-first over injective labellings blocks -> {0..n-1}.
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<int> label(static_cast<std::size_t>(t), -1);
  std::vector<Entry> partial(static_cast<std::size_t>(t) + 1);
  int depth = 0;
  while (depth >= 0) {
    if (depth == t) {
      out.entries.push_back(partial[static_cast<std::size_t>(t)]);
      --depth;
      continue;
    }
    auto d = static_cast<std::size_t>(depth);
    if (label[d] >= 0) used[static_cast<std::size_t>(label[d])] = 0;
    int next = label[d] + 1;
    while (next < n && used[static_cast<std::size_t>(next)]) ++next;
    if (next >= n) {
      label[d] = -1;
      --depth;
      continue;
    }
    label[d] = next;
    used[static_cast<std::size_t>(next)] = 1;
    partial[d + 1] = {partial[d].row + static_cast<std::uint64_t>(next) * row_weight[d],
                      partial[d].col + static_cast<std::uint64_t>(next) * col_weight[d]};
    ++depth;
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

std::vector<BasisMatrix> full_basis(int n, int k, int l, std::uint64_t cap, unsigned workers) {
  require_valid_nkl(n, k, l);
  std::uint64_t cells = saturating_pow(n, k + l, cap);
  if (cells > cap) {
    throw SizeCapExceeded("basis for n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                              ", l=" + std::to_string(l),
                          cells, cap);
  }
  const auto partitions = enumerate_set_partitions(k + l, n);
  std::vector<BasisMatrix> out(partitions.size());
  const ShapeSplit split{l, k};
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(partitions.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < partitions.size(); ++i) out[i] = basis_matrix(partitions[i], n, split);
    return out;
  }
  // Each worker fills a strided subset of the preallocated slots.
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < partitions.size(); i += workers) {
        out[i] = basis_matrix(partitions[i], n, split);
      }
    });
  }
  pool.clear();
  return out;
}

std::vector<BasisMatrix> bias_basis(int n, int l, std::uint64_t cap) {
  return full_basis(n, 0, l, cap);
}

IntMatrix phi_on_diagram(const AlgebraElement& a, int n, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::uint64_t cells = saturating_pow(n, 2 * a.k(), cap);
  if (cells > cap) throw SizeCapExceeded("dense image of P_" + std::to_string(a.k()), cells, cap);
  AlgebraElement orbit = a.kind() == BasisKind::orbit ? a : transition_to_orbit(a);
  const std::uint64_t size = checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(a.k()));
  IntMatrix out(size, size);
  for (const auto& [pi, coeff] : orbit.terms()) {
    if (pi.block_count() > n) continue;  // kernel of Phi
    out.add_scaled(basis_matrix(pi, n, {a.k(), a.k()}), coeff);
  }
  return out;
}

BasisMatrix diagram_image(const SetPartition& pi, int n, ShapeSplit split, std::uint64_t cap) {
  require_valid_nkl(n, split.k, split.l);
  if (split.size() != pi.size()) throw std::invalid_argument("diagram_image: size mismatch");
  const std::uint64_t cells = saturating_pow(n, split.size(), cap);
  if (cells > cap) throw SizeCapExceeded("diagram image", cells, cap);
  BasisMatrix out;
  out.n = n;
  out.k = split.k;
  out.l = split.l;
  out.rows = checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(split.l));
  out.cols = checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(split.k));
  out.source = pi;
  const auto& rgs = pi.growth_string();
  std::vector<int> seen(static_cast<std::size_t>(pi.block_count()));
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    std::vector<int> tuple = decode_index(cell, n, split.size());
    std::fill(seen.begin(), seen.end(), 0);
    bool constant = true;
    for (std::size_t i = 0; i < tuple.size() && constant; ++i) {
      int& v = seen[static_cast<std::size_t>(rgs[i])];
      if (v == 0) v = tuple[i];
      constant = v == tuple[i];
    }
    if (constant) out.entries.push_back({cell / out.cols, cell % out.cols});
  }
  return out;
}

std::uint64_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows) {
  constexpr std::uint64_t p = 2147483647;  // 2^31 - 1
  auto inverse = [](std::uint64_t a) {
    std::uint64_t result = 1, e = p - 2;
    while (e) {
      if (e & 1) result = result * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return result;
  };
  std::uint64_t rank = 0;
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    auto& pr = rows[rank];
    const std::uint64_t inv = inverse(pr[col] % p);
    for (std::size_t c = col; c < width; ++c) pr[c] = pr[c] % p * inv % p;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t f = rows[r][col] % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < width; ++c) {
        rows[r][c] = (rows[r][c] % p + p * p - f * pr[c]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::uint64_t phi_kernel_dimension(int k, int n, std::uint64_t cap) {
  require_valid_nkl(n, k, k);
  const ShapeSplit split{k, k};
  std::vector<std::vector<std::uint64_t>> rows;
  const std::uint64_t cells = saturating_pow(n, 2 * k, cap);
  if (cells > cap) throw SizeCapExceeded("kernel dimension grid", cells, cap);
  const auto partitions = enumerate_set_partitions(2 * k);
  for (const SetPartition& pi : partitions) {
    std::vector<std::uint64_t> row(cells, 0);
    const BasisMatrix image = diagram_image(pi, n, split, cap);
    for (const Entry& e : image.entries) row[e.row * image.cols + e.col] = 1;
    rows.push_back(std::move(row));
  }
  return partitions.size() - rank_mod_p(std::move(rows));
}

FeatureBasis::FeatureBasis(int n, int k, int l, int d_k, int d_l, std::uint64_t cap)
    : n_(n), k_(k), l_(l), d_k_(d_k), d_l_(d_l) {
  require_valid_nkl(n, k, l);
  if (d_k < 1 || d_l < 1) throw std::invalid_argument("feature dimensions must be positive");
  std::uint64_t cells = saturating_pow(n, k + l, cap);
  if (cells > cap) throw SizeCapExceeded("feature basis", cells, cap);
  partitions_ = enumerate_set_partitions(k + l, n);
}

std::size_t FeatureBasis::size() const {
  return partitions_.size() * static_cast<std::size_t>(d_k_) * static_cast<std::size_t>(d_l_);
}

std::tuple<const SetPartition&, int, int> FeatureBasis::label(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("feature basis index out of range");
  const std::size_t per = static_cast<std::size_t>(d_k_) * static_cast<std::size_t>(d_l_);
  const std::size_t rem = index % per;
  return {partitions_[index / per], static_cast<int>(rem / static_cast<std::size_t>(d_k_)) + 1,
          static_cast<int>(rem % static_cast<std::size_t>(d_k_)) + 1};
}

BasisMatrix FeatureBasis::at(std::size_t index) const {
  auto [pi, i, j] = label(index);
  BasisMatrix base = basis_matrix(pi, n_, {l_, k_});
  BasisMatrix out = base;
  out.rows = base.rows * static_cast<std::uint64_t>(d_l_);
  out.cols = base.cols * static_cast<std::uint64_t>(d_k_);
  for (Entry& e : out.entries) {
    e.row = e.row * static_cast<std::uint64_t>(d_l_) + static_cast<std::uint64_t>(i - 1);
    e.col = e.col * static_cast<std::uint64_t>(d_k_) + static_cast<std::uint64_t>(j - 1);
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("permutation images are not a bijection of [n]");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    int from = points[i];
    if (from < 1 || from > n) throw std::invalid_argument("cycle point out of range");
    images[static_cast<std::size_t>(from - 1)] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::generators(int n) {
  std::vector<Permutation> out;
  for (int i = 1; i < n; ++i) out.push_back(cycle(n, {i, i + 1}));
  if (n >= 3) {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    out.push_back(cycle(n, all));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

std::vector<std::uint64_t> permutation_tensor_matrix(const Permutation& sigma, int n, int k,
                                                     std::uint64_t cap) {
  if (sigma.n() != n) throw std::invalid_argument("permutation acts on the wrong set");
  if (k < 0) throw std::invalid_argument("tensor power must be nonnegative");
  std::uint64_t size = saturating_pow(n, k, cap);
  if (size > cap) throw SizeCapExceeded("tensor permutation", size, cap);
  std::vector<std::uint64_t> image{0};
  for (int step = 0; step < k; ++step) {
    std::vector<std::uint64_t> next(image.size() * static_cast<std::size_t>(n));
    for (std::size_t a = 0; a < image.size(); ++a) {
      for (int d = 0; d < n; ++d) {
        next[a * static_cast<std::size_t>(n) + static_cast<std::size_t>(d)] =
            image[a] * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(sigma(d + 1) - 1);
      }
    }
    image = std::move(next);
  }
  return image;
}

EquivarianceReport verify_equivariance(const BasisMatrix& m, int n, int k, int l,
                                       const VerifyOptions& options) {
  require_shape(m.rows, m.cols, n, k, l);
  EquivarianceReport report;
  for (const Permutation& sigma : permutations_to_check(n, options)) {
    auto row_map = permutation_tensor_matrix(sigma, n, l);
    auto col_map = permutation_tensor_matrix(sigma, n, k);
    ++report.permutations_checked;
    for (const Entry& e : m.entries) {
      if (!m.contains({row_map[e.row], col_map[e.col]})) {
        report.passed = false;
        report.counterexample =
            Counterexample{{sigma}, e, "entry (" + std::to_string(e.row) + "," +
                                           std::to_string(e.col) + ") maps outside the support"};
        return report;
      }
    }
  }
  return report;
}

EquivarianceReport verify_equivariance(const IntMatrix& m, int n, int k, int l,
                                       const VerifyOptions& options) {
  require_shape(m.rows(), m.cols(), n, k, l);
  EquivarianceReport report;
  for (const Permutation& sigma : permutations_to_check(n, options)) {
    auto row_map = permutation_tensor_matrix(sigma, n, l);
    auto col_map = permutation_tensor_matrix(sigma, n, k);
    ++report.permutations_checked;
    for (std::uint64_t r = 0; r < m.rows(); ++r) {
      for (std::uint64_t c = 0; c < m.cols(); ++c) {
        if (m.at(row_map[r], col_map[c]) != m.at(r, c)) {
          report.passed = false;
          report.counterexample = Counterexample{
              {sigma}, {r, c}, "M[sigma(I), sigma(J)] differs from M[I, J]"};
          return report;
        }
      }
    }
  }
  return report;
}

BasisEquivarianceReport check_family_invariance(std::span<const BasisMatrix> family,
                                                std::size_t count,
                                                const std::function<CellAction(std::size_t)>& make) {
  BasisEquivarianceReport report;
  report.matrices = family.size();
  if (family.empty()) return report;
  const std::uint64_t rows = family.front().rows;
  const std::uint64_t cols = family.front().cols;
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> owner(rows * cols, kNone);
  for (std::size_t b = 0; b < family.size(); ++b) {
    if (family[b].rows != rows || family[b].cols != cols) {
      throw std::invalid_argument("family members differ in shape");
    }
    for (const Entry& e : family[b].entries) {
      auto& slot = owner[e.row * cols + e.col];
      if (slot != kNone) throw std::invalid_argument("family supports overlap");
      slot = static_cast<std::uint32_t>(b);
    }
  }
  std::vector<char> failed(family.size(), 0);
  for (std::size_t a = 0; a < count; ++a) {
    CellAction act = make(a);
    if (act.row_map.size() != rows || act.col_map.size() != cols) {
      throw std::invalid_argument("action does not match the grid shape");
    }
    ++report.permutations_checked;
    for (std::size_t b = 0; b < family.size(); ++b) {
      if (failed[b]) continue;
      for (const Entry& e : family[b].entries) {
        if (owner[act.row_map[e.row] * cols + act.col_map[e.col]] != b) {
          failed[b] = 1;
          if (!report.counterexample) {
            report.counterexample = Counterexample{
                act.sigma, e, "matrix " + std::to_string(b) + " is not invariant"};
          }
          break;
        }
      }
    }
  }
  report.passed = static_cast<std::size_t>(std::count(failed.begin(), failed.end(), 0));
  return report;
}

BasisEquivarianceReport verify_basis_equivariance(std::span<const BasisMatrix> basis, int n, int k,
                                                  int l, const VerifyOptions& options) {
  for (const BasisMatrix& m : basis) require_shape(m.rows, m.cols, n, k, l);
  const auto perms = permutations_to_check(n, options);
  return check_family_invariance(basis, perms.size(), [&](std::size_t i) {
    return CellAction{{perms[i]},
                      permutation_tensor_matrix(perms[i], n, l),
                      permutation_tensor_matrix(perms[i], n, k)};
  });
}

std::vector<BasisMatrix> oracle_basis(int n, int k, int l, std::uint64_t cap) {
  require_valid_nkl(n, k, l);
  std::uint64_t cells = saturating_pow(n, k + l, cap);
  if (cells > cap) throw SizeCapExceeded("oracle grid", cells, cap);
  const std::uint64_t cols = checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(k));
  const std::uint64_t rows = cells / cols;

  std::vector<std::uint64_t> parent(cells);
  std::iota(parent.begin(), parent.end(), std::uint64_t{0});
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Permutation& g : Permutation::generators(n)) {
    auto row_map = permutation_tensor_matrix(g, n, l);
    auto col_map = permutation_tensor_matrix(g, n, k);
    for (std::uint64_t r = 0; r < rows; ++r) {
      for (std::uint64_t c = 0; c < cols; ++c) {
        std::uint64_t a = find(r * cols + c);
        std::uint64_t b = find(row_map[r] * cols + col_map[c]);
        if (a != b) parent[a] = b;
      }
    }
  }
  // Orbits listed by their first cell in row-major order.
  std::map<std::uint64_t, std::size_t> orbit_of_root;
  std::vector<BasisMatrix> out;
  for (std::uint64_t cell = 0; cell < cells; ++cell) {
    auto [it, inserted] = orbit_of_root.try_emplace(find(cell), out.size());
    if (inserted) {
      BasisMatrix m;
      m.n = n;
      m.k = k;
      m.l = l;
      m.rows = rows;
      m.cols = cols;
      out.push_back(std::move(m));
    }
    out[it->second].entries.push_back({cell / cols, cell % cols});
  }
  return out;
}

std::vector<std::vector<Entry>> support_set(std::span<const BasisMatrix> family) {
  std::vector<std::vector<Entry>> out;
  out.reserve(family.size());
  for (const BasisMatrix& m : family) {
    auto entries = m.entries;
    std::sort(entries.begin(), entries.end());
    out.push_back(std::move(entries));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TilingReport check_tiling(std::span<const BasisMatrix> family, std::uint64_t rows,
                          std::uint64_t cols) {
  TilingReport report;
  report.cells = rows * cols;
  std::vector<char> hit(report.cells, 0);
  for (const BasisMatrix& m : family) {
    for (const Entry& e : m.entries) {
      if (e.row >= rows || e.col >= cols) {
        report.covering = false;
        continue;
      }
      char& h = hit[e.row * cols + e.col];
      if (h) {
        report.disjoint = false;
      } else {
        h = 1;
        ++report.covered;
      }
    }
  }
  if (report.covered != report.cells) report.covering = false;
  return report;
}

}  // namespace partequiv
