#include <doctest.h>

#include <set>

#include "modsub/canonical.hpp"
#include "test_support.hpp"

using namespace modsub;
using namespace modsub::test;

TEST_CASE("key width") {
  CHECK(key_width(1) == 1);
  CHECK(key_width(256) == 1);
  CHECK(key_width(257) == 2);
  CHECK(key_width(65537) == 3);
}

TEST_CASE("hex round trip") {
  const auto key = encode_labeling(gamma0_4_pair());
  CHECK(key.hex() == "010003020504" "010200040503");
  CHECK(CanonicalKey::from_hex(key.hex()) == key);
  CHECK_THROWS_AS(CanonicalKey::from_hex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(CanonicalKey::from_hex("zz"), std::invalid_argument);
}

TEST_CASE("relabeling maps base to zero and yields an equivalent pair") {
  const auto pair = gamma0_4_pair();
  for (point_t b = 0; b < pair.mu(); ++b) {
    const auto form = canonical_form(pair, b);
    CHECK(form.relabeling(b) == 0);
    const auto relabeled = canonical_pair(pair, b);
    CHECK(encode_labeling(relabeled) == form.key);
    CHECK(cusp_split(relabeled) == cusp_split(pair));
  }
  CHECK_THROWS_AS(canonical_form(pair, 6), std::out_of_range);
}

TEST_CASE("normal subgroup: every base gives the same key") {
  const auto pair = gamma2_pair();
  const auto min = minimal_key(pair);
  CHECK(min.multiplicity == 6);
  for (point_t b = 0; b < 6; ++b) CHECK(canonical_form(pair, b).key == min.key);
}

TEST_CASE("non-normal subgroup: one key per conjugate") {
  const auto pair = gamma0_4_pair();
  std::set<CanonicalKey> keys;
  for (point_t b = 0; b < 6; ++b) keys.insert(canonical_form(pair, b).key);
  CHECK(keys.size() == 3);
  CHECK(minimal_key(pair).multiplicity == 2);
}

TEST_CASE("keys are conjugation invariants") {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t mu = 6 * (1 + trial % 5);
    const auto pair = random_torsion_free_pair(mu);
    const auto lambda = random_permutation(mu);
    const auto moved = conjugate(pair, lambda);
    for (point_t b = 0; b < mu; b += 3) {
      CHECK(canonical_form(moved, lambda(b)).key == canonical_form(pair, b).key);
    }
    const auto a = minimal_key(pair);
    const auto c = minimal_key(moved);
    CHECK(a.key == c.key);
    CHECK(a.multiplicity == c.multiplicity);
    CHECK(mu % a.multiplicity == 0);

    // Equal keys at two bases means an automorphism carries one to the other.
    std::vector<std::uint8_t> scratch_key;
    KeyScratch scratch;
    scratch.key_at(pair, a.base, scratch_key);
    CHECK(CanonicalKey(scratch_key) == a.key);
  }
}

TEST_CASE("minimal labeling") {
  const auto pair = gamma0_4_pair();
  const auto min = minimal_key(pair);
  const auto best = canonical_pair(pair, min.base);
  CHECK(is_minimal_labeling(best));
  CHECK(encode_labeling(best) == min.key);

  bool some_base_not_minimal = false;
  for (point_t b = 0; b < 6; ++b) {
    if (!is_minimal_labeling(canonical_pair(pair, b))) some_base_not_minimal = true;
  }
  CHECK(some_base_not_minimal);
  // An arbitrary labeling is not the BFS labeling from 0.
  CHECK_FALSE(is_minimal_labeling(conjugate(best, parse_cycles("(1 5)", 6))));
}
