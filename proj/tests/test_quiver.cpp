#include <catch_amalgamated.hpp>

#include "partequiv/quiver.hpp"
#include "partequiv/setpart.hpp"

using namespace partequiv;

namespace {

IntegerPartition P(std::vector<int> parts) { return IntegerPartition(std::move(parts)); }

}  // namespace

TEST_CASE("quiver for n = 3") {
  auto q = build_quiver(3);
  REQUIRE(q.nodes.size() == 3);
  std::vector<std::vector<int>> want{{1, 1, 0}, {1, 2, 1}, {0, 1, 1}};
  CHECK(q.adjacency == want);
  CHECK(q.index_of(P({2, 1})) == 1);
  CHECK_THROWS_AS(q.index_of(P({4})), std::out_of_range);
  CHECK_THROWS_AS(build_quiver(1), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and M_n tensor rule holds") {
  for (int n = 2; n <= 8; ++n) {
    auto q = build_quiver(n);
    for (std::size_t a = 0; a < q.nodes.size(); ++a) {
      BigInt row = 0;
      for (std::size_t b = 0; b < q.nodes.size(); ++b) {
        CHECK(q.adjacency[a][b] == q.adjacency[b][a]);
        row += q.adjacency[a][b] * specht_dimension(q.nodes[b]);
      }
      // S^lambda (x) M_n has dimension n f^lambda.
      CHECK(row == n * specht_dimension(q.nodes[a]));
    }
  }
}

TEST_CASE("walk counts start at the trivial node") {
  auto q = build_quiver(5);
  auto m0 = multiplicities_via_power(q, 0);
  CHECK(m0.at(P({5})) == 1);
  CHECK(m0.total_dimension() == 1);
  auto m1 = multiplicities_via_power(q, 1);
  CHECK(m1.at(P({5})) == 1);
  CHECK(m1.at(P({4, 1})) == 1);
  CHECK(m1.at(P({3, 2})) == 0);
  CHECK(m1.at(P({9})) == 0);
  CHECK_THROWS(multiplicities_via_power(q, -1));
}

TEST_CASE("quiver walks and Bratteli paths agree") {
  for (int n = 2; n <= 7; ++n) {
    auto q = build_quiver(n);
    for (int k = 0; k <= 6; ++k) {
      auto walk = multiplicities_via_power(q, k);
      auto path = multiplicities_via_bratteli(n, k);
      CHECK(walk.counts == path.counts);
      CHECK(walk.nodes == path.nodes);
      CHECK(path.level == k);
    }
  }
}

TEST_CASE("Bratteli rows alternate between n and n-1") {
  std::vector<int> twice;
  std::vector<int> sizes;
  for_each_bratteli_row(4, 2, [&](const BratteliRow& row) {
    twice.push_back(row.twice_level);
    sizes.push_back(row.multiplicities.n);
    // Row k + 1/2 is the restriction of row k, so both have dimension n^k.
    CHECK(row.multiplicities.total_dimension() ==
          ipow(BigInt(4), static_cast<unsigned>(row.twice_level / 2)));
  });
  CHECK(twice == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(sizes == std::vector<int>{4, 3, 4, 3, 4});
}

TEST_CASE("conservation: sum of m f equals n^k") {
  for (int n = 2; n <= 7; ++n) {
    auto q = build_quiver(n);
    for (int k = 0; k <= 7; ++k) {
      CHECK(multiplicities_via_power(q, k).total_dimension() == ipow(BigInt(n), static_cast<unsigned>(k)));
    }
  }
}

TEST_CASE("dimension bridge") {
  CHECK(end_dim(2, 2) == 8);
  CHECK(end_dim(6, 2) == 15);
  CHECK(hom_dim(2, 2, 1) == 4);
  CHECK(hom_dim(4, 1, 1) == 2);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k <= 5; ++k) {
      for (int l = 0; l <= 5; ++l) {
        CHECK(hom_dim(n, k, l) == restricted_bell(k + l, n));
        CHECK(hom_dim(n, k, l) == hom_dim(n, l, k));
      }
    }
  }
}
