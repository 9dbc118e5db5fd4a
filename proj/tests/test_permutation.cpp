#include <doctest.h>

#include <set>

#include "modsub/permutation.hpp"
#include "test_support.hpp"

using namespace modsub;
using modsub::test::images_of;
using modsub::test::random_permutation;

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<point_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);
}

TEST_CASE("compose applies the right factor first") {
  const auto sigma = parse_cycles("(0 4 2)(1 5)", 6);
  CHECK(compose(Permutation::identity(6), sigma) == sigma);
  CHECK(compose(sigma, Permutation::identity(6)) == sigma);

  const auto p = parse_cycles("(0 1)(2 3)(4 5)");
  const auto q = parse_cycles("(0 1 2)(3 4 5)");
  const auto r = compose(p, q);
  // q then p by hand: 0->1->0, 1->2->3, 2->0->1, 3->4->5, 4->5->4, 5->3->2.
  CHECK(images_of(r) == std::vector<point_t>{0, 3, 1, 5, 4, 2});
  CHECK(to_cycle_string(r) == "(1 3 5 2)");
  CHECK(cycle_type(r) == std::vector<std::uint32_t>{4, 1, 1});

  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(5)).is_identity());
  CHECK(inverse(parse_cycles("(0 1 2)(3 4 5)")) == parse_cycles("(0 2 1)(3 5 4)"));
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_permutation(9);
    CHECK(inverse(inverse(s)) == s);
    CHECK(compose(s, inverse(s)).is_identity());
    CHECK(compose(inverse(s), s).is_identity());
  }
}

TEST_CASE("cycle_type and fixed_points") {
  CHECK(cycle_type(Permutation::identity(6)) == std::vector<std::uint32_t>(6, 1));
  CHECK(cycle_type(parse_cycles("(0 1)(2 3)(4 5)")) == std::vector<std::uint32_t>{2, 2, 2});

  CHECK(fixed_points(Permutation::identity(6)).size() == 6);
  CHECK(fixed_points(parse_cycles("(0 1)(2 3)(4 5)")).empty());
  CHECK(fixed_points(parse_cycles("(0 1 2)", 6)) == std::vector<point_t>{3, 4, 5});
  CHECK(power(parse_cycles("(0 1 2)(3 4)"), 6).is_identity());
}

TEST_CASE("is_transitive") {
  CHECK(is_transitive(parse_cycles("(0 1)"), Permutation::identity(2)));
  CHECK_FALSE(is_transitive(parse_cycles("(0 1)(2 3)"), parse_cycles("(0 1)(2 3)")));
  CHECK(is_transitive(parse_cycles("(0 3)(1 5)(2 4)"), parse_cycles("(0 1 2)(3 4 5)")));
  CHECK(is_transitive(Permutation::identity(1), Permutation::identity(1)));
  CHECK_THROWS_AS(is_transitive(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("cycle notation parsing") {
  CHECK(parse_cycles("(0 1)(2 3)(4 5)") == Permutation({1, 0, 3, 2, 5, 4}));
  CHECK(parse_cycles(" (0,1) ( 2 3 ) ", 5) == Permutation({1, 0, 3, 2, 4}));
  CHECK(parse_cycles("()", 3).is_identity());
  CHECK(parse_cycles("", 2).is_identity());
  CHECK(to_cycle_string(Permutation::identity(4)) == "()");
  CHECK(to_cycle_string(parse_cycles("(3 4)(0 2 1)")) == "(0 2 1)(3 4)");

  CHECK_THROWS_AS(parse_cycles("(0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("0 1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 x)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 7)", 4), std::invalid_argument);
}

TEST_CASE("cycle notation round-trips random permutations") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_permutation(1 + trial % 17);
    CHECK(parse_cycles(to_cycle_string(s), s.degree()) == s);
  }
}

TEST_CASE("properties on random permutations") {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const auto p = random_permutation(n);
    const auto q = random_permutation(n);
    const auto r = random_permutation(n);
    CHECK(cycle_type(inverse(p)) == cycle_type(p));
    CHECK(cycle_type(compose(p, q)) == cycle_type(compose(q, p)));
    CHECK(compose(p, compose(q, r)) == compose(compose(p, q), r));

    const auto ct = cycle_type(p);
    CHECK(std::count(ct.begin(), ct.end(), 1u) == static_cast<std::ptrdiff_t>(fixed_points(p).size()));
    CHECK(std::accumulate(ct.begin(), ct.end(), 0u) == n);
    CHECK(cycle_count(p) == ct.size());
  }
}
