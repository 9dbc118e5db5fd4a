#ifndef MODSUB_TEST_SUPPORT_HPP
#define MODSUB_TEST_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "modsub/coset_pair.hpp"
#include "modsub/permutation.hpp"

namespace modsub::test {

inline std::mt19937& rng() {
  static std::mt19937 gen(20261015u);
  return gen;
}

inline Permutation random_permutation(std::size_t n) {
  std::vector<point_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng());
  return Permutation(std::move(images));
}

/// Product of disjoint cycles of length `len` over a random partition of the
/// points; n must be a multiple of len.
inline Permutation random_regular(std::size_t n, std::size_t len) {
  std::vector<point_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng());
  std::vector<point_t> images(n);
  for (std::size_t i = 0; i < n; i += len) {
    for (std::size_t k = 0; k < len; ++k) images[order[i + k]] = order[i + (k + 1) % len];
  }
  return Permutation(std::move(images));
}

/// Random transitive torsion-free pair of index n (6 | n).
inline CosetPair random_torsion_free_pair(std::size_t n) {
  for (;;) {
    Permutation phi = random_regular(n, 2);
    Permutation psi = random_regular(n, 3);
    if (is_transitive(phi, psi)) return CosetPair::validate(std::move(phi), std::move(psi));
  }
}

// Images as a plain vector, for readable comparisons.
inline std::vector<point_t> images_of(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

// The two index-6 pairs used throughout: normal Gamma(2) and Gamma_0(4).
inline CosetPair gamma2_pair() {
  return CosetPair::validate(parse_cycles("(0 3)(1 5)(2 4)"), parse_cycles("(0 1 2)(3 4 5)"));
}
inline CosetPair gamma0_4_pair() {
  return CosetPair::validate(parse_cycles("(0 1)(2 3)(4 5)"), parse_cycles("(0 1 2)(3 4 5)"));
}

}  // namespace modsub::test

#endif  // MODSUB_TEST_SUPPORT_HPP
