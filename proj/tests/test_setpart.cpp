#include <catch_amalgamated.hpp>

#include <set>

#include "partequiv/setpart.hpp"

using namespace partequiv;

namespace {

SetPartition B(int m, std::vector<std::vector<int>> blocks) {
  return SetPartition::from_blocks(m, blocks);
}

// Every function [m] -> [m], canonicalized; the set of distinct results.
std::set<std::vector<int>> brute_partitions(int m) {
  std::set<std::vector<int>> out;
  std::vector<int> f(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<int> canon(f.size());
    std::vector<int> seen(static_cast<std::size_t>(m), -1);
    int next = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      int& s = seen[static_cast<std::size_t>(f[i])];
      if (s < 0) s = next++;
      canon[i] = s;
    }
    out.insert(canon);
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == m) f[i++] = 0;
    if (i == f.size()) break;
  }
  return out;
}

int blocks_of(const std::vector<int>& rgs) {
  return rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
}

}  // namespace

TEST_CASE("construction and printing") {
  auto p = B(4, {{3, 1}, {4, 2}});
  CHECK(p.to_string() == "{1,3|2,4}");
  CHECK(p.growth_string() == std::vector<int>{0, 1, 0, 1});
  CHECK(p.block_count() == 2);
  CHECK(p.block_of(4) == 1);
  CHECK(SetPartition::from_labels({7, 7, 2, 9}) == B(4, {{1, 2}, {3}, {4}}));
  CHECK(SetPartition().to_string() == "{}");

  CHECK_THROWS_AS(B(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(B(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(B(2, {{1, 2}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(B(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("enumeration matches brute force") {
  for (int m = 1; m <= 7; ++m) {
    auto brute = brute_partitions(m);
    auto all = enumerate_set_partitions(m);
    REQUIRE(all.size() == brute.size());
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::set<std::vector<int>> got;
    for (const auto& p : all) got.insert(p.growth_string());
    CHECK(got == brute);

    for (int n = 1; n <= m + 1; ++n) {
      std::size_t want = 0;
      for (const auto& rgs : brute) want += blocks_of(rgs) <= n;
      CHECK(enumerate_set_partitions(m, n).size() == want);
      CHECK(restricted_bell(m, n) == want);
    }
  }
}

TEST_CASE("small cases") {
  auto three = enumerate_set_partitions(3);
  REQUIRE(three.size() == 5);
  CHECK(three.front() == B(3, {{1, 2, 3}}));
  CHECK(three.back() == B(3, {{1}, {2}, {3}}));
  CHECK(enumerate_set_partitions(4, 2).size() == 8);
  auto empty = enumerate_set_partitions(0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].size() == 0);
  CHECK(enumerate_set_partitions(0, 0).size() == 1);
  CHECK(enumerate_set_partitions(3, 0).empty());
}

TEST_CASE("Stirling and Bell numbers") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(2, 5) == 0);
  const long bells[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int m = 0; m <= 10; ++m) CHECK(bell(m) == bells[m]);
  CHECK(bell(20) == BigInt("51724158235372"));
  CHECK(restricted_bell(0, 3) == 1);
  CHECK(restricted_bell(5, 5) == bell(5));
  CHECK(restricted_bell(5, 9) == bell(5));
  for (int m = 1; m <= 12; ++m) CHECK(restricted_bell(m, 1) == 1);
  // Bell(m, 2) = 2^(m-1)
  for (int m = 1; m <= 30; ++m) CHECK(restricted_bell(m, 2) == ipow(BigInt(2), m - 1));
}

TEST_CASE("block labelling") {
  auto p = B(8, {{1, 3}, {2, 4}, {5}, {7}, {6, 8}});
  auto [top, bottom] = block_labelling(p, {4, 4});
  CHECK(top == std::vector<int>{1, 2, 1, 2});
  CHECK(bottom == std::vector<int>{3, 4, 5, 4});
  CHECK_THROWS(block_labelling(p, {3, 3}));
}

TEST_CASE("refinement is a partial order") {
  CHECK(refines(B(4, {{1}, {2}, {3, 4}}), B(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(refines(B(4, {{1, 2}, {3, 4}}), B(4, {{1}, {2}, {3, 4}})));
  CHECK_FALSE(refines(B(3, {{1, 2}, {3}}), B(3, {{1, 3}, {2}})));
  for (int m = 1; m <= 5; ++m) {
    auto all = enumerate_set_partitions(m);
    const auto& finest = all.back();
    const auto& coarsest = all.front();
    for (const auto& a : all) {
      CHECK(refines(a, a));
      CHECK(refines(finest, a));
      CHECK(refines(a, coarsest));
      for (const auto& b : all) {
        if (refines(a, b) && refines(b, a)) CHECK(a == b);
        if (refines(a, b)) CHECK(a.block_count() >= b.block_count());
        for (const auto& c : all) {
          if (refines(a, b) && refines(b, c)) CHECK(refines(a, c));
        }
      }
    }
  }
  CHECK_THROWS(refines(B(2, {{1, 2}}), B(3, {{1, 2, 3}})));
}

TEST_CASE("refold keeps the blocks") {
  auto p = B(5, {{1, 4}, {2, 3, 5}});
  CHECK(refold(p, {2, 3}, {5, 0}) == p);
  CHECK(refold(p, {2, 3}, {0, 5}) == p);
  CHECK_THROWS(refold(p, {2, 3}, {2, 2}));
  CHECK_THROWS(refold(p, {2, 2}, {2, 3}));
}
