#ifndef MODSUB_COSET_PAIR_HPP
#define MODSUB_COSET_PAIR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modsub/permutation.hpp"

namespace modsub {

enum class PairError { DegreeMismatch, NotInvolution, NotOrderThree, NotTransitive };

const char* to_string(PairError e) noexcept;

class InvalidPair : public std::invalid_argument {
public:
  explicit InvalidPair(PairError reason);
  PairError reason() const noexcept { return reason_; }

private:
  PairError reason_;
};

/// Transitive pair (phi, psi) with phi^2 = psi^3 = 1 on mu cosets. Point 0 is
/// the coset of the subgroup itself, so a CosetPair doubles as a rooted class
/// representative.
class CosetPair {
public:
  /// Throws InvalidPair. Checks run in the order degree, phi, psi, transitivity.
  static CosetPair validate(Permutation phi, Permutation psi);

  /// Non-throwing form of validate.
  static std::optional<PairError> check(const Permutation& phi, const Permutation& psi);

  std::size_t mu() const noexcept { return phi_.degree(); }
  const Permutation& phi() const noexcept { return phi_; }
  const Permutation& psi() const noexcept { return psi_; }

  friend bool operator==(const CosetPair&, const CosetPair&) = default;

private:
  CosetPair(Permutation phi, Permutation psi) : phi_(std::move(phi)), psi_(std::move(psi)) {}

  Permutation phi_;
  Permutation psi_;
};

/// (mu; g, e2, e3, h).
struct Signature {
  std::uint32_t mu = 0;
  std::uint32_t g = 0;
  std::uint32_t e2 = 0;
  std::uint32_t e3 = 0;
  std::uint32_t h = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Cusp widths of a subgroup, sorted descending.
class CuspSplit {
public:
  CuspSplit() = default;
  /// Sorts the input; throws std::invalid_argument on a zero width.
  explicit CuspSplit(std::vector<std::uint32_t> widths);

  const std::vector<std::uint32_t>& widths() const noexcept { return widths_; }
  std::size_t size() const noexcept { return widths_.size(); }
  std::uint64_t sum() const noexcept;

  /// "14-1-1-1-1" style.
  std::string to_string() const;
  static CuspSplit parse(const std::string& text);

  friend bool operator==(const CuspSplit&, const CuspSplit&) = default;
  friend auto operator<=>(const CuspSplit&, const CuspSplit&) = default;

private:
  std::vector<std::uint32_t> widths_;
};

/// Raised when the genus computed from the index formula is not a
/// nonnegative integer; this can only mean a bug upstream.
class NonIntegralGenus : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

Signature signature(const CosetPair& pair);
CuspSplit cusp_split(const CosetPair& pair);

/// Genus from 12g = 12 + mu - 3 e2 - 4 e3 - 6 h, exactly.
std::uint32_t genus_from(std::uint64_t mu, std::uint64_t e2, std::uint64_t e3, std::uint64_t h);

bool is_torsion_free(const CosetPair& pair);
bool is_genus(const CosetPair& pair, std::uint32_t g);

/// Orientation reversal: (phi, psi^-1).
CosetPair mirror(const CosetPair& pair);

/// (lambda phi lambda^-1, lambda psi lambda^-1): relabels point x as lambda(x).
CosetPair conjugate(const CosetPair& pair, const Permutation& lambda);

}  // namespace modsub

#endif  // MODSUB_COSET_PAIR_HPP
