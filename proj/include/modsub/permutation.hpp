#ifndef MODSUB_PERMUTATION_HPP
#define MODSUB_PERMUTATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace modsub {

/// A point of the permuted set {0, ..., n-1}.
using point_t = std::uint32_t;

/// Bijection on {0, ..., n-1} stored as a dense image array.
///
/// Composition convention used throughout the project: compose(p, q) applies
/// q first, then p, i.e. compose(p, q)(i) == p(q(i)).
class Permutation {
public:
  /// Throws std::invalid_argument unless `images` is a bijection of length >= 1.
  explicit Permutation(std::vector<point_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  point_t operator()(point_t i) const { return images_[i]; }
  std::span<const point_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct trusted_t {};
  Permutation(std::vector<point_t> images, trusted_t) : images_(std::move(images)) {}

  std::vector<point_t> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
};

/// r(i) = p(q(i)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// p^k for k >= 0.
Permutation power(const Permutation& p, unsigned k);

/// Disjoint cycles, each starting at its smallest point, ordered by that point.
/// Fixed points are included as 1-cycles.
std::vector<std::vector<point_t>> cycles(const Permutation& p);

/// Cycle lengths sorted descending; they sum to the degree.
std::vector<std::uint32_t> cycle_type(const Permutation& p);

std::size_t cycle_count(const Permutation& p);

/// Points i with p(i) == i, ascending.
std::vector<point_t> fixed_points(const Permutation& p);

/// True iff <p, q> has a single orbit on {0, ..., n-1}.
/// Throws std::invalid_argument on degree mismatch.
bool is_transitive(const Permutation& p, const Permutation& q);

/// Parses cycle notation such as "(0 1)(2 3)(4 5)". Singleton cycles may be
/// omitted. When `degree` is absent it is inferred as max point + 1.
/// Commas are accepted as separators. Throws std::invalid_argument on
/// malformed input, repeated points, or points outside the degree.
Permutation parse_cycles(std::string_view text, std::optional<std::size_t> degree = std::nullopt);

/// Cycle notation with 1-cycles omitted; the identity prints as "()".
std::string to_cycle_string(const Permutation& p);

}  // namespace modsub

#endif  // MODSUB_PERMUTATION_HPP
