#include "partequiv/product.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <stdexcept>

namespace partequiv {

namespace {

std::uint64_t factor_rows(const Factor& f) {
  return checked_pow(static_cast<std::uint64_t>(f.n), static_cast<unsigned>(f.l));
}
std::uint64_t factor_cols(const Factor& f) {
  return checked_pow(static_cast<std::uint64_t>(f.n), static_cast<unsigned>(f.k));
}

void require_tuple(const DiagramTuple& t, const LayerSpec& spec) {
  spec.validate();
  if (t.components.size() != spec.factors.size()) {
    throw std::invalid_argument("diagram tuple has " + std::to_string(t.components.size()) +
                                " components for " + std::to_string(spec.factors.size()) +
                                " factors");
  }
  for (std::size_t r = 0; r < t.components.size(); ++r) {
    if (t.components[r].size() != spec.factors[r].split().size()) {
      throw std::invalid_argument("component " + std::to_string(r + 1) + " has the wrong size");
    }
  }
}

// new[a * m + b] = old[a] * m + local[b]
std::vector<std::uint64_t> kron_maps(const std::vector<std::uint64_t>& outer,
                                     const std::vector<std::uint64_t>& local) {
  const std::uint64_t m = local.size();
  std::vector<std::uint64_t> out(outer.size() * m);
  for (std::size_t a = 0; a < outer.size(); ++a) {
    for (std::size_t b = 0; b < m; ++b) out[a * m + b] = outer[a] * m + local[b];
  }
  return out;
}

}  // namespace

LayerSpec LayerSpec::parse(std::string_view text) {
  static const std::regex entry(R"(\s*(f\s+)?(\d+)\s*:\s*(\d+)\s*->\s*(\d+)\s*)");
  LayerSpec spec;
  std::string s(text);
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch m;
    if (!std::regex_match(piece, m, entry)) {
      throw std::invalid_argument("cannot parse layer factor '" + piece +
                                  "'; expected n:k->l or f d:p->q");
    }
    Factor f{std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4]), m[1].matched};
    if (f.feature && spec.factors.empty()) {
      throw std::invalid_argument("feature factor '" + piece + "' has no data factor before it");
    }
    spec.factors.push_back(f);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  spec.validate();
  return spec;
}

std::string LayerSpec::to_string() const {
  std::string out;
  for (const Factor& f : factors) {
    if (!out.empty()) out += ',';
    if (f.feature) out += "f ";
    out += std::to_string(f.n) + ":" + std::to_string(f.k) + "->" + std::to_string(f.l);
  }
  return out;
}

void LayerSpec::validate() const {
  if (factors.empty()) throw std::invalid_argument("layer spec has no factors");
  for (const Factor& f : factors) {
    if (f.n < 1 || f.k < 0 || f.l < 0) {
      throw std::invalid_argument("invalid factor " + std::to_string(f.n) + ":" +
                                  std::to_string(f.k) + "->" + std::to_string(f.l));
    }
  }
}

int LayerSpec::total_n() const {
  int t = 0;
  for (const Factor& f : factors) t += f.n;
  return t;
}
int LayerSpec::total_k() const {
  int t = 0;
  for (const Factor& f : factors) t += f.k;
  return t;
}
int LayerSpec::total_l() const {
  int t = 0;
  for (const Factor& f : factors) t += f.l;
  return t;
}

std::uint64_t LayerSpec::rows() const {
  std::uint64_t out = 1;
  for (const Factor& f : factors) {
    std::uint64_t r = factor_rows(f);
    if (r != 0 && out > UINT64_MAX / r) throw std::overflow_error("product grid too large");
    out *= r;
  }
  return out;
}

std::uint64_t LayerSpec::cols() const {
  std::uint64_t out = 1;
  for (const Factor& f : factors) {
    std::uint64_t c = factor_cols(f);
    if (c != 0 && out > UINT64_MAX / c) throw std::overflow_error("product grid too large");
    out *= c;
  }
  return out;
}

std::string DiagramTuple::to_string() const {
  std::string out;
  for (const SetPartition& p : components) {
    if (!out.empty()) out += " x ";
    out += p.to_string();
  }
  return out;
}

BigInt product_dim(const LayerSpec& spec) {
  spec.validate();
  BigInt out = 1;
  for (const Factor& f : spec.factors) out *= restricted_bell(f.split().size(), f.n);
  return out;
}

std::vector<DiagramTuple> enumerate_diagram_tuples(const LayerSpec& spec) {
  spec.validate();
  std::vector<std::vector<SetPartition>> per;
  for (const Factor& f : spec.factors) per.push_back(enumerate_set_partitions(f.split().size(), f.n));
  // Odometer with the last digit moving fastest.
  std::vector<std::size_t> digit(per.size(), 0);
  std::vector<DiagramTuple> out;
  while (true) {
    DiagramTuple t;
    for (std::size_t r = 0; r < per.size(); ++r) t.components.push_back(per[r][digit[r]]);
    out.push_back(std::move(t));
    std::size_t r = per.size();
    while (r > 0 && ++digit[r - 1] == per[r - 1].size()) digit[--r] = 0;
    if (r == 0) break;
  }
  return out;
}

BasisMatrix kronecker(const BasisMatrix& a, const BasisMatrix& b) {
  BasisMatrix out;
  out.k = a.k + b.k;
  out.l = a.l + b.l;
  out.rows = a.rows * b.rows;
  out.cols = a.cols * b.cols;
  out.entries.reserve(a.entries.size() * b.entries.size());
  for (const Entry& x : a.entries) {
    for (const Entry& y : b.entries) {
      out.entries.push_back({x.row * b.rows + y.row, x.col * b.cols + y.col});
    }
  }
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

BasisMatrix product_basis_matrix(const DiagramTuple& t, const LayerSpec& spec) {
  require_tuple(t, spec);
  BasisMatrix out;
  out.rows = 1;
  out.cols = 1;
  out.entries = {{0, 0}};
  for (std::size_t r = 0; r < t.components.size(); ++r) {
    const Factor& f = spec.factors[r];
    out = kronecker(out, basis_matrix(t.components[r], f.n, f.split()));
  }
  out.n = 0;
  return out;
}

std::vector<BasisMatrix> product_basis(const LayerSpec& spec, std::uint64_t cap) {
  spec.validate();
  std::uint64_t cells = 0;
  try {
    std::uint64_t rows = spec.rows();
    std::uint64_t cols = spec.cols();
    cells = cols != 0 && rows > UINT64_MAX / cols ? UINT64_MAX : rows * cols;
  } catch (const std::overflow_error&) {
    cells = UINT64_MAX;
  }
  if (cells > cap) throw SizeCapExceeded("product basis for " + spec.to_string(), cells, cap);
  std::vector<BasisMatrix> out;
  for (const DiagramTuple& t : enumerate_diagram_tuples(spec)) {
    out.push_back(product_basis_matrix(t, spec));
  }
  return out;
}

std::pair<SetPartition, ShapeSplit> demarcation_embed(const DiagramTuple& t, const LayerSpec& spec) {
  require_tuple(t, spec);
  std::vector<int> top;
  std::vector<int> bottom;
  int offset = 0;
  for (std::size_t r = 0; r < t.components.size(); ++r) {
    const SetPartition& p = t.components[r];
    const int l = spec.factors[r].l;
    for (int e = 1; e <= p.size(); ++e) {
      (e <= l ? top : bottom).push_back(offset + p.block_of(e));
    }
    offset += p.block_count();
  }
  ShapeSplit split{static_cast<int>(top.size()), static_cast<int>(bottom.size())};
  top.insert(top.end(), bottom.begin(), bottom.end());
  return {SetPartition::from_labels(top), split};
}

CellAction product_action(const std::vector<Permutation>& sigmas, const LayerSpec& spec) {
  spec.validate();
  if (sigmas.size() != spec.factors.size()) {
    throw std::invalid_argument("one permutation per factor is required");
  }
  CellAction act{sigmas, {0}, {0}};
  for (std::size_t r = 0; r < sigmas.size(); ++r) {
    const Factor& f = spec.factors[r];
    act.row_map = kron_maps(act.row_map, permutation_tensor_matrix(sigmas[r], f.n, f.l));
    act.col_map = kron_maps(act.col_map, permutation_tensor_matrix(sigmas[r], f.n, f.k));
  }
  return act;
}

BasisEquivarianceReport verify_product_equivariance(std::span<const BasisMatrix> family,
                                                    const LayerSpec& spec,
                                                    const VerifyOptions& options) {
  spec.validate();
  for (const BasisMatrix& m : family) {
    if (m.rows != spec.rows() || m.cols != spec.cols()) {
      throw std::invalid_argument("matrix shape does not match the layer spec");
    }
  }
  std::vector<Permutation> ids;
  for (const Factor& f : spec.factors) ids.push_back(Permutation::identity(f.n));
  std::vector<std::vector<Permutation>> tuples;
  for (std::size_t r = 0; r < spec.factors.size(); ++r) {
    for (const Permutation& g : Permutation::generators(spec.factors[r].n)) {
      auto sig = ids;
      sig[r] = g;
      tuples.push_back(std::move(sig));
    }
  }
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < options.trials; ++t) {
    std::vector<Permutation> sig;
    for (const Factor& f : spec.factors) sig.push_back(Permutation::random(f.n, rng));
    tuples.push_back(std::move(sig));
  }
  return check_family_invariance(family, tuples.size(),
                                 [&](std::size_t i) { return product_action(tuples[i], spec); });
}

bool embedding_contains_support(const DiagramTuple& t, const LayerSpec& spec) {
  const auto [global, split] = demarcation_embed(t, spec);
  const BasisMatrix m = product_basis_matrix(t, spec);
  const std::size_t factors = spec.factors.size();
  std::vector<int> offset(factors, 0);
  for (std::size_t r = 1; r < factors; ++r) offset[r] = offset[r - 1] + spec.factors[r - 1].n;

  // Splits a product index into per-factor digit strings, shifted into [sum n].
  auto expand = [&](std::uint64_t flat, bool row) {
    std::vector<std::vector<int>> parts(factors);
    for (std::size_t r = factors; r-- > 0;) {
      const Factor& f = spec.factors[r];
      const std::uint64_t size = row ? factor_rows(f) : factor_cols(f);
      parts[r] = decode_index(flat % size, f.n, row ? f.l : f.k);
      for (int& v : parts[r]) v += offset[r];
      flat /= size;
    }
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
  };

  for (const Entry& e : m.entries) {
    std::vector<int> tuple = expand(e.row, true);
    std::vector<int> cols = expand(e.col, false);
    tuple.insert(tuple.end(), cols.begin(), cols.end());
    if (kernel_partition(tuple) != global) return false;
  }
  return true;
}

}  // namespace partequiv
