#ifndef MODSUB_COUNTING_HPP
#define MODSUB_COUNTING_HPP

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace modsub {

/// Exact nonnegative count.
using BigCount = boost::multiprecision::cpp_int;

/// A counting formula produced a non-integer. For the subgroup formulas this
/// signals a transcription bug; the experimental general-map recursion raises
/// it for some n.
class NonIntegralResult : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

std::uint64_t totient(std::uint64_t n);

/// n! from a shared memo table (exact).
BigCount factorial(std::uint64_t n);

/// Rooted planar maps with n edges: 2 * 3^n * (2n)! / (n! (n+2)!).
BigCount tutte_rooted_all(std::uint64_t n);

/// Rooted planar trivalent maps with `edges` edges (2p vertices, 3p edges).
/// Zero unless 3 | edges; one for edges == 0.
BigCount mullin_rooted_trivalent(std::int64_t edges);

/// mullin_rooted_trivalent(3p), parameterized by half the vertex count.
BigCount mullin_vertex_form(std::uint64_t p);

/// Torsion-free genus-zero subgroups of index mu. N(0) = 1, N(mu) = 0 for
/// mu < 0 or 6 not dividing mu.
BigCount n_rooted(std::int64_t mu);

/// Conjugacy classes of torsion-free genus-zero subgroups of index mu.
/// Zero unless 6 | mu and mu > 0. Throws NonIntegralResult if the exact
/// rational evaluation is not an integer.
BigCount n_classes(std::int64_t mu);

/// Unrooted planar maps with n edges via the general-map Liskovets recursion
/// exactly as it is usually transcribed. EXPERIMENTAL: yields 5 for n = 2
/// where there are 4 such maps, and is non-integral for n = 4.
/// Throws NonIntegralResult when the value is not an integer.
BigCount liskovets_unrooted_all(std::uint64_t n);

/// Known number of unrooted planar maps with two edges (the four pictured
/// maps), kept next to the experimental recursion for comparison.
inline constexpr std::uint64_t kUnrootedMapsWithTwoEdges = 4;

}  // namespace modsub

#endif  // MODSUB_COUNTING_HPP
