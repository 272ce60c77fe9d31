#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "partequiv/commands.hpp"
#include "partequiv/io.hpp"
#include "partequiv/product.hpp"
#include "partequiv/quiver.hpp"

using namespace partequiv;
namespace cmd = partequiv::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::function<int(std::ostream&)>& f) {
  std::ostringstream out, err;
  int code = cmd::run_guarded([&] { return f(out); }, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pattern canonicalization") {
  auto p = PatternMatrix::from_rows({{5, 3, 3}, {9, 5, 3}});
  auto c = p.canonical();
  CHECK(c.to_rows() == std::vector<std::vector<int>>{{1, 2, 2}, {3, 1, 2}});
  CHECK(c.canonical() == c);
  CHECK(c.classes() == 3);
  CHECK(p.transposed().transposed() == p);
  CHECK_THROWS(PatternMatrix::from_rows({{1, 2}, {3}}));
  CHECK_THROWS(PatternMatrix::from_rows({{0, 1}}));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> cells(30);
    for (int& v : cells) v = 1 + static_cast<int>(rng() % 6);
    PatternMatrix a(5, 6, cells);
    std::vector<int> perm{11, 4, 27, 2, 8, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int& v : cells) v = perm[static_cast<std::size_t>(v - 1)];
    PatternMatrix b(5, 6, cells);
    CHECK(a.canonical() == b.canonical());
    CHECK(a.canonical().is_canonical());
  }
}

TEST_CASE("patterns from families") {
  auto basis = full_basis(2, 2, 2);
  auto p = PatternMatrix::from_family(basis, 4, 4);
  CHECK(p.classes() == 8);
  for (int v : p.cells()) CHECK(v > 0);
  std::vector<BasisMatrix> partial(basis.begin(), basis.begin() + 3);
  CHECK_THROWS(PatternMatrix::from_family(partial, 4, 4));
  auto twice = basis;
  twice.push_back(basis[0]);
  CHECK_THROWS(PatternMatrix::from_family(twice, 4, 4));
  CHECK_FALSE(first_difference(p, p).has_value());
  auto q = PatternMatrix::from_rows({{1, 1}, {1, 2}});
  auto r = PatternMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK(first_difference(q, r) == Entry{1, 1});
}

TEST_CASE("json round trips") {
  for (const auto& x : full_basis(3, 2, 1)) {
    auto back = basis_matrix_from_json(Json::parse(to_json(x).dump()));
    CHECK(back == x);
  }
  auto spec = LayerSpec::parse("2:2->1,4:1->1");
  for (const auto& x : product_basis(spec)) CHECK(basis_matrix_from_json(to_json(x)) == x);

  auto j = to_json(basis_matrix(SetPartition::from_blocks(3, {{1, 2, 3}}), 2, {1, 2}));
  CHECK(j["shape"] == Json::array({2, 4}));
  CHECK(j["blocks"] == Json::parse("[[1,2,3]]"));
  CHECK(j["entries"] == Json::parse("[[0,0],[1,3]]"));

  AlgebraElement a(2, BasisKind::orbit);
  a.add(SetPartition::from_blocks(4, {{1, 3}, {2, 4}}), BigInt("123456789012345678901234567890"));
  a.add(SetPartition::from_blocks(4, {{1}, {2, 3, 4}}), -4);
  auto text = to_json(a).dump();
  CHECK(algebra_element_from_json(Json::parse(text)) == a);
  CHECK(text.find("\"basis\":\"orbit\"") != std::string::npos);

  auto p = PatternMatrix::from_rows({{1, 2}, {2, 1}});
  CHECK(pattern_from_json(to_json(p)) == p);
}

TEST_CASE("fixtures load") {
  for (std::string w : {"A", "B", "C", "D", "E"}) {
    auto f = load_fixture(PARTEQUIV_FIXTURE_DIR, w);
    CHECK(f.appendix == w);
    CHECK_FALSE(f.note.empty());
    CHECK_FALSE(f.patterns.empty());
  }
  CHECK_THROWS(load_fixture(PARTEQUIV_FIXTURE_DIR, "Z"));
}

TEST_CASE("deep sets pattern") {
  auto f = load_fixture(PARTEQUIV_FIXTURE_DIR, "deep_sets");
  auto want = f.patterns.at(0).pattern.canonical();
  auto got = PatternMatrix::from_family(full_basis(4, 1, 1), 4, 4).canonical();
  CHECK(got == want);
  CHECK(got.classes() == 2);
}

TEST_CASE("dims command") {
  auto r = run([](std::ostream& o) { return cmd::cmd_dims({2, 2, 2, ""}, o); });
  CHECK(r.code == cmd::kOk);
  CHECK(r.out.find("parameters 8") != std::string::npos);
  CHECK(r.out.find("kernel     7") != std::string::npos);

  r = run([](std::ostream& o) { return cmd::cmd_dims({6, 2, 2, ""}, o); });
  CHECK(r.out.find("parameters 15") != std::string::npos);
  CHECK(r.out.find("kernel     0") != std::string::npos);

  r = run([](std::ostream& o) { return cmd::cmd_dims({-1, -1, -1, "2:2->1,4:1->1"}, o); });
  CHECK(r.code == cmd::kOk);
  CHECK(r.out.find("parameters 8") != std::string::npos);

  r = run([](std::ostream& o) { return cmd::cmd_dims({2, -1, 2, ""}, o); });
  CHECK(r.code == cmd::kUsage);
  r = run([](std::ostream& o) { return cmd::cmd_dims({-1, -1, -1, "2:2=>1"}, o); });
  CHECK(r.code == cmd::kUsage);
}

TEST_CASE("basis command") {
  cmd::BasisArgs args;
  args.n = 4;
  args.k = 1;
  args.l = 1;
  auto r = run([&](std::ostream& o) { return cmd::cmd_basis(args, o); });
  CHECK(r.out == "weight 4x4 classes 2\n1 2 2 2\n2 1 2 2\n2 2 1 2\n2 2 2 1\n");

  args.n = 4;
  args.k = args.l = 2;
  args.bias = true;
  r = run([&](std::ostream& o) { return cmd::cmd_basis(args, o); });
  CHECK(r.out.find("weight 16x16 classes 15") != std::string::npos);
  CHECK(r.out.find("bias 16x1 classes 2") != std::string::npos);

  args.format = "json";
  r = run([&](std::ostream& o) { return cmd::cmd_basis(args, o); });
  auto doc = Json::parse(r.out);
  CHECK(doc["basis"].size() == 15);
  CHECK(doc["bias"].size() == 2);

  args.format = "csv";
  r = run([&](std::ostream& o) { return cmd::cmd_basis(args, o); });
  CHECK(r.out.rfind("kind;index;blocks;row;col\n", 0) == 0);

  args.format = "xml";
  CHECK(run([&](std::ostream& o) { return cmd::cmd_basis(args, o); }).code == cmd::kUsage);

  args.format = "pattern";
  args.n = 10;
  args.k = args.l = 4;
  r = run([&](std::ostream& o) { return cmd::cmd_basis(args, o); });
  CHECK(r.code == cmd::kSizeCap);
  CHECK(r.err.find("100000000") != std::string::npos);
}

TEST_CASE("quiver and bratteli commands") {
  auto r = run([](std::ostream& o) { return cmd::cmd_quiver({6, 4, "(6)", "(6)"}, o); });
  CHECK(r.out == "15\n");
  r = run([](std::ostream& o) { return cmd::cmd_quiver({3, -1, "", ""}, o); });
  CHECK(r.out == "partition;(3);(2,1);(1,1,1)\n(3);1;1;0\n(2,1);1;2;1\n(1,1,1);0;1;1\n");
  r = run([](std::ostream& o) { return cmd::cmd_quiver({3, 2, "(2,1)", "(9)"}, o); });
  CHECK(r.code == cmd::kUsage);
  r = run([](std::ostream& o) { return cmd::cmd_quiver({1, -1, "", ""}, o); });
  CHECK(r.code == cmd::kUsage);

  r = run([](std::ostream& o) { return cmd::cmd_bratteli({6, 2}, o); });
  REQUIRE(r.code == cmd::kOk);
  std::istringstream lines(r.out);
  std::string line, last;
  int count = 0;
  while (std::getline(lines, line)) {
    last = line;
    ++count;
  }
  CHECK(count == 5);
  auto j = Json::parse(last);
  CHECK(j["level"] == 2);
  auto walk = multiplicities_via_power(build_quiver(6), 2);
  for (std::size_t i = 0; i < walk.nodes.size(); ++i) {
    const auto key = walk.nodes[i].to_string();
    const std::uint64_t want = walk.counts[i].template convert_to<std::uint64_t>();
    CHECK(j["counts"].value(key, std::uint64_t{0}) == want);
  }
  const auto second = r.out.find('\n') + 1;
  auto half = Json::parse(r.out.substr(second, r.out.find('\n', second) - second));
  CHECK(half["level"] == 0.5);
}

TEST_CASE("verify command") {
  cmd::VerifyArgs args;
  args.n = 3;
  args.k = 2;
  args.l = 1;
  args.options.seed = 7;
  auto r = run([&](std::ostream& o) { return cmd::cmd_verify(args, o); });
  CHECK(r.code == cmd::kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);

  args.n = args.k = args.l = 2;
  args.oracle = true;
  r = run([&](std::ostream& o) { return cmd::cmd_verify(args, o); });
  CHECK(r.code == cmd::kOk);
  CHECK(r.out.find("oracle          PASS  8 orbits") != std::string::npos);
  CHECK(r.out.find("classes 8") != std::string::npos);

  cmd::VerifyArgs spec;
  spec.spec = "2:1->1,2:1->1,2:1->1";
  r = run([&](std::ostream& o) { return cmd::cmd_verify(spec, o); });
  CHECK(r.code == cmd::kOk);
  CHECK(r.out.find("classes 8") != std::string::npos);

  spec.n = 2;
  CHECK(run([&](std::ostream& o) { return cmd::cmd_verify(spec, o); }).code == cmd::kUsage);
}

TEST_CASE("appendix command") {
  cmd::AppendixArgs args;
  args.fixtures = PARTEQUIV_FIXTURE_DIR;
  auto r = run([&](std::ostream& o) { return cmd::cmd_appendix(args, o); });
  CHECK(r.code == cmd::kOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  args.which = "Q";
  CHECK(run([&](std::ostream& o) { return cmd::cmd_appendix(args, o); }).code == cmd::kUsage);
  args.which = "B";
  args.fixtures = "/nonexistent";
  CHECK(run([&](std::ostream& o) { return cmd::cmd_appendix(args, o); }).code == cmd::kUsage);
}

TEST_CASE("product command") {
  cmd::ProductArgs args;
  args.spec = "2:2->1,4:1->1";
  auto r = run([&](std::ostream& o) { return cmd::cmd_product(args, o); });
  CHECK(r.code == cmd::kOk);
  CHECK(r.out.find("parameters 8") != std::string::npos);
  args.format = "pattern";
  r = run([&](std::ostream& o) { return cmd::cmd_product(args, o); });
  CHECK(r.out.rfind("weight 8x16 classes 8", 0) == 0);
  args.format = "json";
  r = run([&](std::ostream& o) { return cmd::cmd_product(args, o); });
  CHECK(Json::parse(r.out)["basis"].size() == 8);
}
