#include "partequiv/commands.hpp"

#include <iomanip>
#include <ostream>

#include "partequiv/io.hpp"
#include "partequiv/product.hpp"
#include "partequiv/quiver.hpp"

namespace partequiv::cli {

namespace {

void require_layer(int n, int k, int l) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (k < 0 || l < 0) throw UsageError("--k and --l are required and must be nonnegative");
}

std::uint64_t grid_cells(int n, int m, std::uint64_t cap) {
  try {
    return checked_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(m));
  } catch (const std::overflow_error&) {
    return cap == UINT64_MAX ? cap : cap + 1;
  }
}

// A report line: name, verdict, detail.
class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}
  void record(const std::string& name, bool ok, const std::string& detail) {
    out_ << std::left << std::setw(16) << name << (ok ? "PASS" : "FAIL") << "  " << detail << '\n';
    all_ok_ = all_ok_ && ok;
  }
  void skip(const std::string& name, const std::string& why) {
    out_ << std::left << std::setw(16) << name << "SKIP  " << why << '\n';
  }
  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

std::string describe(const Counterexample& c) {
  std::string sigma;
  for (const Permutation& p : c.sigma) sigma += (sigma.empty() ? "" : " x ") + p.to_string();
  return "sigma=" + sigma + " cell=(" + std::to_string(c.cell.row) + "," +
         std::to_string(c.cell.col) + ") " + c.detail;
}

Json count_json(const BigInt& c) {
  if (c >= 0 && c <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return Json(c.convert_to<std::uint64_t>());
  }
  return Json(c.str());
}

bool homomorphism_holds(int k, int n, std::string& detail) {
  const auto partitions = enumerate_set_partitions(2 * k);
  const ShapeSplit split{k, k};
  std::vector<IntMatrix> images;
  for (const SetPartition& pi : partitions) {
    images.push_back(phi_on_diagram(AlgebraElement::basis_element(Diagram(pi, split)), n));
  }
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < partitions.size(); ++a) {
    for (std::size_t b = 0; b < partitions.size(); ++b) {
      AlgebraElement ab = algebra_product(AlgebraElement::basis_element(Diagram(partitions[a], split)),
                                          AlgebraElement::basis_element(Diagram(partitions[b], split)), n);
      if (phi_on_diagram(ab, n) != images[a] * images[b]) {
        detail = "Phi(ab) != Phi(a)Phi(b) for a=" + partitions[a].to_string() +
                 " b=" + partitions[b].to_string();
        return false;
      }
      ++pairs;
    }
  }
  detail = std::to_string(pairs) + " products";
  return true;
}

int verify_single(const VerifyArgs& args, std::ostream& out) {
  const int n = args.n, k = args.k, l = args.l;
  require_layer(n, k, l);
  const std::uint64_t cells = grid_cells(n, k + l, args.cap);
  if (cells > args.cap) throw SizeCapExceeded("verification grid", cells, args.cap);
  Checklist checks(out);
  out << "layer n=" << n << " k=" << k << " l=" << l << " seed=" << args.options.seed
      << " trials=" << args.options.trials << '\n';

  const auto basis = full_basis(n, k, l, args.cap);
  const std::uint64_t rows = basis.front().rows, cols = basis.front().cols;

  std::uint64_t total = 0;
  bool sizes_ok = true;
  for (const BasisMatrix& m : basis) {
    sizes_ok = sizes_ok && m.entries.size() == falling_factorial(n, m.source->block_count());
    total += m.entries.size();
  }
  checks.record("orbit sizes", sizes_ok && total == cells,
                std::to_string(total) + " of " + std::to_string(cells) + " cells");

  TilingReport tiling = check_tiling(basis, rows, cols);
  checks.record("tiling", tiling.ok(),
                std::string(tiling.disjoint ? "disjoint" : "overlapping") + ", " +
                    std::to_string(tiling.covered) + "/" + std::to_string(tiling.cells) +
                    " covered");

  if (!tiling.disjoint) {
    checks.skip("equivariance", "supports overlap");
  } else {
    auto eq = verify_basis_equivariance(basis, n, k, l, args.options);
    checks.record("equivariance", eq.ok(),
                  std::to_string(eq.passed) + "/" + std::to_string(eq.matrices) + " matrices, " +
                      std::to_string(eq.permutations_checked) + " permutations" +
                      (eq.counterexample ? "; " + describe(*eq.counterexample) : ""));
  }

  constexpr std::uint64_t kOracleCap = 1'000'000;
  if (args.oracle || cells <= kOracleCap) {
    auto oracle = oracle_basis(n, k, l, args.oracle ? args.cap : kOracleCap);
    bool same = support_set(oracle) == support_set(basis);
    checks.record("oracle", same,
                  std::to_string(oracle.size()) + " orbits vs " + std::to_string(basis.size()) +
                      " set partitions");
  } else {
    checks.skip("oracle", "grid above 10^6 cells; pass --oracle to force");
  }

  if (k == l && k <= 2 && grid_cells(n, 2 * k, args.cap) <= 10'000) {
    std::string detail;
    bool ok = homomorphism_holds(k, n, detail);
    checks.record("homomorphism", ok, detail);
  } else {
    checks.skip("homomorphism", k == l ? "too large for the exhaustive check" : "needs k == l");
  }

  if (k == l && BigInt(grid_cells(n, 2 * k, args.cap)) * bell(2 * k) <= 5'000'000) {
    const BigInt expected = bell(2 * k) - restricted_bell(2 * k, n);
    const std::uint64_t kernel = phi_kernel_dimension(k, n);
    checks.record("kernel", BigInt(kernel) == expected,
                  "dim Ker = " + std::to_string(kernel) + ", expected " + expected.str());
  } else {
    checks.skip("kernel", k == l ? "too large for the rank computation" : "needs k == l");
  }

  const BigInt rb = restricted_bell(k + l, n);
  if (n >= 2) {
    const BigInt walks = hom_dim(n, k, l);
    checks.record("bridge", walks == rb && rb == BigInt(basis.size()),
                  "quiver " + walks.str() + ", Bell(" + std::to_string(k + l) + "," +
                      std::to_string(n) + ") " + rb.str() + ", basis " +
                      std::to_string(basis.size()));
  } else {
    checks.record("bridge", rb == BigInt(basis.size()),
                  "Bell(" + std::to_string(k + l) + ",1) " + rb.str() + " (no quiver for n=1)");
  }
  out << "classes " << basis.size() << '\n';
  return checks.all_ok() ? kOk : kVerifyFailed;
}

int verify_product(const VerifyArgs& args, std::ostream& out) {
  const LayerSpec spec = LayerSpec::parse(args.spec);
  Checklist checks(out);
  out << "spec " << spec.to_string() << " seed=" << args.options.seed
      << " trials=" << args.options.trials << '\n';
  const auto basis = product_basis(spec, args.cap);
  const BigInt dim = product_dim(spec);
  checks.record("dimension", dim == BigInt(basis.size()),
                dim.str() + " predicted, " + std::to_string(basis.size()) + " built");

  TilingReport tiling = check_tiling(basis, spec.rows(), spec.cols());
  checks.record("tiling", tiling.ok(),
                std::to_string(tiling.covered) + "/" + std::to_string(tiling.cells) + " covered");

  if (tiling.disjoint) {
    auto eq = verify_product_equivariance(basis, spec, args.options);
    checks.record("equivariance", eq.ok(),
                  std::to_string(eq.passed) + "/" + std::to_string(eq.matrices) + " matrices, " +
                      std::to_string(eq.permutations_checked) + " group elements" +
                      (eq.counterexample ? "; " + describe(*eq.counterexample) : ""));
  } else {
    checks.skip("equivariance", "supports overlap");
  }

  bool contained = true;
  for (const DiagramTuple& t : enumerate_diagram_tuples(spec)) {
    contained = contained && embedding_contains_support(t, spec);
  }
  checks.record("embedding", contained, "supports lie in the embedded global orbits");

  const BigInt bound = restricted_bell(spec.total_k() + spec.total_l(), spec.total_n());
  checks.record("subspace", dim <= bound, dim.str() + " <= " + bound.str());
  out << "classes " << basis.size() << '\n';
  return checks.all_ok() ? kOk : kVerifyFailed;
}

std::vector<BigInt> walk_counts(const McKayQuiver& q, std::size_t from, int power) {
  std::vector<BigInt> v(q.nodes.size(), 0);
  v[from] = 1;
  for (int step = 0; step < power; ++step) {
    std::vector<BigInt> next(v.size(), 0);
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a] == 0) continue;
      for (std::size_t b = 0; b < v.size(); ++b) next[b] += q.adjacency[a][b] * v[a];
    }
    v = std::move(next);
  }
  return v;
}

}  // namespace

int cmd_dims(const DimsArgs& args, std::ostream& out) {
  if (!args.spec.empty()) {
    const LayerSpec spec = LayerSpec::parse(args.spec);
    const BigInt dim = product_dim(spec);
    bool agree = true;
    out << "spec " << spec.to_string() << '\n';
    for (const Factor& f : spec.factors) {
      const BigInt rb = restricted_bell(f.k + f.l, f.n);
      out << "  " << (f.feature ? "feature " : "factor  ") << f.n << ":" << f.k << "->" << f.l
          << "  Bell(" << f.k + f.l << "," << f.n << ") = " << rb;
      if (f.n >= 2) {
        const BigInt walks = hom_dim(f.n, f.k, f.l);
        agree = agree && walks == rb;
        out << "  quiver " << walks;
      }
      out << '\n';
    }
    const BigInt bound = restricted_bell(spec.total_k() + spec.total_l(), spec.total_n());
    out << "parameters " << dim << '\n';
    out << "global     " << bound << "  (Bell(" << spec.total_k() + spec.total_l() << ","
        << spec.total_n() << "), all of S_" << spec.total_n() << ")\n";
    out << "check      " << (agree ? "agree" : "DISAGREE") << '\n';
    return agree ? kOk : kVerifyFailed;
  }
  require_layer(args.n, args.k, args.l);
  const int m = args.k + args.l;
  const BigInt rb = restricted_bell(m, args.n);
  const BigInt all = bell(m);
  out << "layer      n=" << args.n << " k=" << args.k << " l=" << args.l << '\n';
  out << "parameters " << rb << "  (Bell(" << m << "," << args.n << "))\n";
  out << "bell       " << all << '\n';
  out << "kernel     " << all - rb << '\n';
  bool agree = true;
  if (args.n >= 2) {
    const BigInt walks = hom_dim(args.n, args.k, args.l);
    agree = walks == rb;
    out << "quiver     " << walks << '\n';
  } else {
    out << "quiver     n/a (n = 1)\n";
  }
  out << "check      " << (agree ? "agree" : "DISAGREE") << '\n';
  return agree ? kOk : kVerifyFailed;
}

int cmd_basis(const BasisArgs& args, std::ostream& out) {
  require_layer(args.n, args.k, args.l);
  if (args.format != "json" && args.format != "csv" && args.format != "pattern") {
    throw UsageError("--format must be json, csv or pattern");
  }
  const auto basis = full_basis(args.n, args.k, args.l, args.cap, args.workers);
  std::vector<BasisMatrix> bias;
  if (args.bias) bias = bias_basis(args.n, args.l, args.cap);
  const std::uint64_t rows = basis.front().rows, cols = basis.front().cols;

  if (args.format == "json") {
    Json doc{{"n", args.n}, {"k", args.k}, {"l", args.l}, {"basis", Json::array()}};
    for (const BasisMatrix& m : basis) doc["basis"].push_back(to_json(m));
    if (args.bias) {
      doc["bias"] = Json::array();
      for (const BasisMatrix& m : bias) doc["bias"].push_back(to_json(m));
    }
    out << doc.dump() << '\n';
  } else if (args.format == "csv") {
    out << "kind;index;blocks;row;col\n";
    auto emit = [&](const char* kind, const std::vector<BasisMatrix>& family) {
      for (std::size_t i = 0; i < family.size(); ++i) {
        const std::string blocks = family[i].source->to_string();
        for (const Entry& e : family[i].entries) {
          out << kind << ';' << i + 1 << ';' << blocks << ';' << e.row << ';' << e.col << '\n';
        }
      }
    };
    emit("weight", basis);
    if (args.bias) emit("bias", bias);
  } else {
    const PatternMatrix weight = PatternMatrix::from_family(basis, rows, cols);
    out << "weight " << rows << "x" << cols << " classes " << weight.classes() << '\n'
        << weight.to_text();
    if (args.bias) {
      const PatternMatrix b = PatternMatrix::from_family(bias, rows, 1);
      out << "bias " << rows << "x1 classes " << b.classes() << '\n' << b.transposed().to_text();
    }
  }
  return kOk;
}

int cmd_quiver(const QuiverArgs& args, std::ostream& out) {
  if (args.n < 2) throw UsageError("--n must be at least 2");
  const McKayQuiver q = build_quiver(args.n);
  if (args.power < 0) {
    if (!args.from.empty() || !args.to.empty()) throw UsageError("--from/--to need --power");
    out << "partition";
    for (const auto& node : q.nodes) out << ';' << node.to_string();
    out << '\n';
    for (std::size_t a = 0; a < q.nodes.size(); ++a) {
      out << q.nodes[a].to_string();
      for (int alpha : q.adjacency[a]) out << ';' << alpha;
      out << '\n';
    }
    return kOk;
  }
  auto parse_node = [&](const std::string& text) {
    try {
      return q.index_of(IntegerPartition::parse(text));
    } catch (const std::exception& e) {
      throw UsageError("'" + text + "' is not a partition of " + std::to_string(args.n));
    }
  };
  const std::size_t from = args.from.empty() ? 0 : parse_node(args.from);
  const auto walks = walk_counts(q, from, args.power);
  if (!args.to.empty()) {
    out << walks[parse_node(args.to)] << '\n';
    return kOk;
  }
  out << "partition;walks\n";
  for (std::size_t b = 0; b < q.nodes.size(); ++b) out << q.nodes[b].to_string() << ';' << walks[b] << '\n';
  return kOk;
}

int cmd_bratteli(const BratteliArgs& args, std::ostream& out) {
  if (args.n < 2) throw UsageError("--n must be at least 2");
  if (args.levels < 0) throw UsageError("--levels must be nonnegative");
  for_each_bratteli_row(args.n, args.levels, [&](const BratteliRow& row) {
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    const auto& mv = row.multiplicities;
    for (std::size_t i = 0; i < mv.nodes.size(); ++i) {
      if (mv.counts[i] != 0) counts[mv.nodes[i].to_string()] = count_json(mv.counts[i]);
    }
    nlohmann::ordered_json line;
    if (row.is_half()) {
      line["level"] = row.twice_level / 2.0;
    } else {
      line["level"] = row.twice_level / 2;
    }
    line["counts"] = std::move(counts);
    out << line.dump() << '\n';
  });
  return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  if (args.options.trials < 0) throw UsageError("--trials must be nonnegative");
  if (!args.spec.empty()) {
    if (args.n >= 0 || args.k >= 0 || args.l >= 0) throw UsageError("use either --spec or --n/--k/--l");
    return verify_product(args, out);
  }
  return verify_single(args, out);
}

int cmd_appendix(const AppendixArgs& args, std::ostream& out) {
  std::vector<std::string> which;
  if (args.which == "all") {
    which = {"A", "B", "C", "D", "E"};
  } else if (args.which.size() == 1 && args.which[0] >= 'A' && args.which[0] <= 'E') {
    which = {args.which};
  } else {
    throw UsageError("appendix must be one of A, B, C, D, E or all");
  }
  bool all_ok = true;
  for (const std::string& w : which) {
    const Fixture fixture = load_fixture(args.fixtures, w);
    for (const FixturePattern& fp : fixture.patterns) {
      std::vector<BasisMatrix> family;
      std::uint64_t rows = 0, cols = 0;
      if (!fp.spec.empty()) {
        const LayerSpec spec = LayerSpec::parse(fp.spec);
        family = product_basis(spec);
        rows = spec.rows();
        cols = spec.cols();
      } else {
        family = full_basis(fp.n, fp.k, fp.l);
        rows = family.front().rows;
        cols = family.front().cols;
      }
      const PatternMatrix generated = PatternMatrix::from_family(family, rows, cols).canonical();
      const PatternMatrix expected = fp.pattern.canonical();
      out << w << ' ' << std::left << std::setw(10) << fp.name << rows << "x" << cols << " classes "
          << generated.classes() << "  ";
      if (generated.rows() != expected.rows() || generated.cols() != expected.cols()) {
        out << "FAIL shape differs from fixture " << expected.rows() << "x" << expected.cols() << '\n';
        all_ok = false;
        continue;
      }
      if (auto diff = first_difference(generated, expected)) {
        out << "FAIL first difference at (" << diff->row << "," << diff->col << "): generated "
            << generated.at(diff->row, diff->col) << ", fixture "
            << expected.at(diff->row, diff->col) << '\n';
        all_ok = false;
        continue;
      }
      out << "PASS\n";
    }
  }
  return all_ok ? kOk : kVerifyFailed;
}

int cmd_product(const ProductArgs& args, std::ostream& out) {
  const LayerSpec spec = LayerSpec::parse(args.spec);
  if (args.format != "list" && args.format != "pattern" && args.format != "json") {
    throw UsageError("--format must be list, pattern or json");
  }
  const auto basis = product_basis(spec, args.cap);
  const auto tuples = enumerate_diagram_tuples(spec);
  if (args.format == "pattern") {
    const PatternMatrix p = PatternMatrix::from_family(basis, spec.rows(), spec.cols());
    out << "weight " << p.rows() << "x" << p.cols() << " classes " << p.classes() << '\n'
        << p.to_text();
  } else if (args.format == "json") {
    Json doc{{"spec", spec.to_string()}, {"dimension", product_dim(spec).str()},
             {"basis", Json::array()}};
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Json m = to_json(basis[i]);
      m["components"] = Json::array();
      for (const SetPartition& c : tuples[i].components) m["components"].push_back(to_json(c));
      doc["basis"].push_back(std::move(m));
    }
    out << doc.dump() << '\n';
  } else {
    out << "spec " << spec.to_string() << "  grid " << spec.rows() << "x" << spec.cols()
        << "  parameters " << product_dim(spec) << '\n';
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      const auto [global, split] = demarcation_embed(tuples[i], spec);
      out << i + 1 << "  " << tuples[i].to_string() << "  ->  " << global.to_string() << " (top "
          << split.l << ", bottom " << split.k << ")  entries " << basis[i].entries.size() << '\n';
    }
  }
  return kOk;
}

int run_guarded(const std::function<int()>& command, std::ostream& err) {
  try {
    return command();
  } catch (const SizeCapExceeded& e) {
    err << "refused: " << e.what() << " (use --force or --cap)\n";
    return kSizeCap;
  } catch (const std::length_error& e) {
    err << "refused: " << e.what() << '\n';
    return kSizeCap;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "refused: " << e.what() << '\n';
    return kSizeCap;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}

}  // namespace partequiv::cli
