#ifndef MODSUB_CANONICAL_HPP
#define MODSUB_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modsub/coset_pair.hpp"

namespace modsub {

/// Byte string identifying a labeled pair: relabeled phi images followed by
/// relabeled psi images, each image as a fixed-width big-endian integer.
/// Byte order therefore agrees with the order of the image sequences.
class CanonicalKey {
public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  bool empty() const noexcept { return bytes_.empty(); }

  std::string hex() const;
  static CanonicalKey from_hex(std::string_view hex);

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

private:
  std::vector<std::uint8_t> bytes_;
};

/// Bytes per encoded image for degree mu.
std::size_t key_width(std::size_t mu) noexcept;

/// Encodes the pair's own labeling (no relabeling).
CanonicalKey encode_labeling(const CosetPair& pair);

struct CanonicalForm {
  CanonicalKey key;
  /// Maps each original point to its canonical label; relabeling(base) == 0.
  Permutation relabeling;
};

/// Breadth-first relabeling from `base`: labels are handed out in discovery
/// order while applying phi, psi, psi^2 to already-labeled points in label
/// order. Two pairs are conjugate by some lambda with lambda(b1) = b2 iff
/// their keys at b1 and b2 coincide. Throws std::out_of_range for a bad base.
CanonicalForm canonical_form(const CosetPair& pair, point_t base);

/// The pair relabeled by canonical_form(pair, base).
CosetPair canonical_pair(const CosetPair& pair, point_t base);

/// Reusable buffers for repeated key computation over many bases.
class KeyScratch {
public:
  /// Writes the key at `base` into `out` (resized as needed).
  void key_at(const CosetPair& pair, point_t base, std::vector<std::uint8_t>& out);

private:
  std::vector<std::int64_t> label_;
  std::vector<point_t> order_;
  std::vector<point_t> psi_inv_;
};

struct MinimalKey {
  CanonicalKey key;
  /// Smallest base achieving the key.
  point_t base = 0;
  /// Number of bases achieving the key: the order of the automorphism group.
  std::uint32_t multiplicity = 0;
};

/// Minimum key over all mu bases.
MinimalKey minimal_key(const CosetPair& pair);

/// True iff the pair is labeled canonically from base 0 and no other base
/// gives a smaller key. Stops at the first smaller key.
bool is_minimal_labeling(const CosetPair& pair);

}  // namespace modsub

#endif  // MODSUB_CANONICAL_HPP
