#include <catch_amalgamated.hpp>

#include <random>
#include <thread>

#include "partequiv/diagram.hpp"

using namespace partequiv;

namespace {

Diagram D(int k, std::vector<std::vector<int>> blocks) {
  return Diagram(SetPartition::from_blocks(2 * k, blocks), {k, k});
}

AlgebraElement E(const Diagram& d) { return AlgebraElement::basis_element(d); }

// A pair in P_10: through lines on 3..10, a cap {1,2} on top of d1 and a cup
// {11,12} under it meeting a cap {1,2} on d2 -- one closed middle loop.
std::pair<Diagram, Diagram> p10_pair() {
  std::vector<std::vector<int>> b1{{1, 2}, {11, 12}};
  std::vector<std::vector<int>> b2{{1, 2}, {11}, {12}};
  for (int i = 3; i <= 10; ++i) {
    b1.push_back({i, 10 + i});
    b2.push_back({i, 10 + i});
  }
  return {D(10, b1), D(10, b2)};
}

AlgebraElement random_element(int k, std::mt19937_64& rng) {
  auto all = enumerate_set_partitions(2 * k);
  AlgebraElement a(k, BasisKind::diagram);
  for (int t = 0; t < 3; ++t) {
    a.add(all[rng() % all.size()], static_cast<long>(rng() % 7) - 3);
  }
  return a;
}

}  // namespace

TEST_CASE("identity diagram") {
  CHECK(identity_diagram(2).partition.to_string() == "{1,3|2,4}");
  CHECK(identity_diagram(0).partition.size() == 0);
  for (const auto& pi : enumerate_set_partitions(4)) {
    Diagram d(pi, {2, 2});
    auto left = compose(identity_diagram(2), d, 5);
    auto right = compose(d, identity_diagram(2), 5);
    CHECK(left.removed_components == 0);
    CHECK(left.result.partition == pi);
    CHECK(right.result.partition == pi);
    CHECK(right.coefficient == 1);
  }
}

TEST_CASE("single block composes with itself") {
  auto d = D(2, {{1, 2, 3, 4}});
  auto c = compose(d, d, 7);
  CHECK(c.coefficient == 1);
  CHECK(c.result.partition == d.partition);
}

TEST_CASE("closed middle loops give powers of n") {
  auto [d1, d2] = p10_pair();
  auto c = compose(d1, d2, 6);
  CHECK(c.removed_components == 1);
  CHECK(c.coefficient == 6);
  std::vector<std::vector<int>> want{{1, 2}, {11}, {12}};
  for (int i = 3; i <= 10; ++i) want.push_back({i, 10 + i});
  CHECK(c.result.partition == SetPartition::from_blocks(20, want));

  auto prod = algebra_product(E(d1), E(d2), 6);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.coefficient(c.result.partition) == 6);

  // Two loops: all-singletons composed with itself in P_2.
  auto s = D(2, {{1}, {2}, {3}, {4}});
  auto c2 = compose(s, s, 3);
  CHECK(c2.removed_components == 2);
  CHECK(c2.coefficient == 9);
}

TEST_CASE("composition rejects mismatched inputs") {
  auto d = D(2, {{1, 2, 3, 4}});
  CHECK_THROWS_AS(compose(d, D(1, {{1, 2}}), 2), std::invalid_argument);
  CHECK_THROWS_AS(compose(d, d, 0), std::invalid_argument);
  Diagram orbit(d.partition, d.split, BasisKind::orbit);
  CHECK_THROWS_AS(compose(orbit, d, 2), std::invalid_argument);
  Diagram rect(SetPartition::from_blocks(3, {{1, 2, 3}}), {1, 2});
  CHECK_THROWS_AS(compose(rect, rect, 2), std::invalid_argument);
  CHECK_THROWS_AS(Diagram(d.partition, {1, 2}), std::invalid_argument);
}

TEST_CASE("removed component count is bounded by k") {
  for (int k = 1; k <= 3; ++k) {
    auto all = enumerate_set_partitions(2 * k);
    for (std::size_t a = 0; a < all.size(); a += 3) {
      for (std::size_t b = 0; b < all.size(); b += 5) {
        auto c = compose(Diagram(all[a], {k, k}), Diagram(all[b], {k, k}), 2);
        CHECK(c.removed_components >= 0);
        CHECK(c.removed_components <= k);
      }
    }
  }
}

TEST_CASE("algebra product is associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(trial % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    auto a = random_element(k, rng);
    auto b = random_element(k, rng);
    auto c = random_element(k, rng);
    CHECK(algebra_product(algebra_product(a, b, n), c, n) ==
          algebra_product(a, algebra_product(b, c, n), n));
  }
}

TEST_CASE("algebra elements prune zeros") {
  AlgebraElement a(1, BasisKind::diagram);
  auto pi = SetPartition::from_blocks(2, {{1, 2}});
  a.add(pi, 3);
  a.add(pi, -3);
  CHECK(a.terms().empty());
  CHECK_THROWS_AS(a.add(SetPartition::from_blocks(3, {{1, 2, 3}}), 1), std::invalid_argument);
  auto id = E(identity_diagram(1));
  a.add(pi, 2);
  CHECK(algebra_product(a, id, 4) == a);
}

TEST_CASE("transition matrix is unitriangular") {
  for (int m = 0; m <= 6; ++m) {
    auto t = transition_matrix(m);
    const auto& order = t->order();
    REQUIRE(order.size() == bell(m));
    for (std::size_t i = 1; i < order.size(); ++i) {
      CHECK(order[i - 1].block_count() <= order[i].block_count());
    }
    for (std::size_t r = 0; r < order.size(); ++r) {
      for (std::size_t c = 0; c < order.size(); ++c) {
        int want = r == c ? 1 : (refines(order[c], order[r]) ? 1 : 0);
        CHECK(t->entry(r, c) == want);
        if (c < r) CHECK(t->entry(r, c) == 0);
      }
    }
  }
  CHECK_THROWS_AS(transition_matrix(9), std::length_error);
  CHECK(transition_matrix(4) == transition_matrix(4));
}

TEST_CASE("diagram to orbit expansions") {
  const int k = 2;
  auto singletons = D(k, {{1}, {2}, {3}, {4}});
  auto x = transition_to_orbit(E(singletons));
  CHECK(x.kind() == BasisKind::orbit);
  CHECK(x.terms().size() == 15);
  for (const auto& [pi, c] : x.terms()) CHECK(c == 1);

  auto one = D(k, {{1, 2, 3, 4}});
  auto y = transition_to_orbit(E(one));
  REQUIRE(y.terms().size() == 1);
  CHECK(y.coefficient(one.partition) == 1);

  for (const auto& pi : enumerate_set_partitions(4)) {
    auto d = E(Diagram(pi, {k, k}));
    CHECK(transition_to_diagram(transition_to_orbit(d)) == d);
    auto o = E(Diagram(pi, {k, k}, BasisKind::orbit));
    CHECK(transition_to_orbit(transition_to_diagram(o)) == o);
  }
  CHECK_THROWS(transition_to_diagram(E(one)));
}

TEST_CASE("transition cache is safe under concurrent use") {
  std::vector<std::shared_ptr<const TransitionMatrix>> got(4);
  {
    std::vector<std::jthread> pool;
    for (int i = 0; i < 4; ++i) pool.emplace_back([&, i] { got[static_cast<std::size_t>(i)] = transition_matrix(5); });
  }
  for (const auto& g : got) CHECK(g == got[0]);
}
