#include "modsub/canonical.hpp"

#include <stdexcept>

namespace modsub {

namespace {

void put(std::vector<std::uint8_t>& out, std::size_t at, std::size_t width, std::uint64_t value) {
  for (std::size_t b = 0; b < width; ++b) {
    out[at + b] = static_cast<std::uint8_t>(value >> (8 * (width - 1 - b)));
  }
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Fills label (original -> canonical) and order (canonical -> original).
void relabel(const CosetPair& pair, point_t base, std::span<const point_t> psi_inv,
             std::vector<std::int64_t>& label, std::vector<point_t>& order) {
  const std::size_t mu = pair.mu();
  label.assign(mu, -1);
  order.clear();
  order.reserve(mu);
  label[base] = 0;
  order.push_back(base);
  for (std::size_t next = 0; next < order.size(); ++next) {
    const point_t x = order[next];
    for (point_t y : {pair.phi()(x), pair.psi()(x), psi_inv[x]}) {
      if (label[y] < 0) {
        label[y] = static_cast<std::int64_t>(order.size());
        order.push_back(y);
      }
    }
  }
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("canonical key: odd hex length");
  std::vector<std::uint8_t> bytes(hex.size() / 2);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const int hi = hex_digit(hex[2 * i]);
    const int lo = hex_digit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw std::invalid_argument("canonical key: bad hex digit");
    bytes[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return CanonicalKey(std::move(bytes));
}

std::size_t key_width(std::size_t mu) noexcept {
  std::size_t width = 1;
  for (std::uint64_t top = mu > 0 ? mu - 1 : 0; top > 0xff; top >>= 8) ++width;
  return width;
}

CanonicalKey encode_labeling(const CosetPair& pair) {
  const std::size_t mu = pair.mu();
  const std::size_t w = key_width(mu);
  std::vector<std::uint8_t> bytes(2 * mu * w);
  for (point_t i = 0; i < mu; ++i) {
    put(bytes, i * w, w, pair.phi()(i));
    put(bytes, (mu + i) * w, w, pair.psi()(i));
  }
  return CanonicalKey(std::move(bytes));
}

CanonicalForm canonical_form(const CosetPair& pair, point_t base) {
  if (base >= pair.mu()) throw std::out_of_range("canonical_form: base out of range");
  const Permutation psi_inv = inverse(pair.psi());
  std::vector<std::int64_t> label;
  std::vector<point_t> order;
  relabel(pair, base, psi_inv.images(), label, order);

  std::vector<point_t> images(pair.mu());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<point_t>(label[i]);
  Permutation relabeling(std::move(images));
  CosetPair relabeled = conjugate(pair, relabeling);
  return CanonicalForm{encode_labeling(relabeled), std::move(relabeling)};
}

CosetPair canonical_pair(const CosetPair& pair, point_t base) {
  return conjugate(pair, canonical_form(pair, base).relabeling);
}

void KeyScratch::key_at(const CosetPair& pair, point_t base, std::vector<std::uint8_t>& out) {
  const std::size_t mu = pair.mu();
  if (base >= mu) throw std::out_of_range("key_at: base out of range");
  if (psi_inv_.size() != mu) psi_inv_.resize(mu);
  for (point_t i = 0; i < mu; ++i) psi_inv_[pair.psi()(i)] = i;
  relabel(pair, base, psi_inv_, label_, order_);

  const std::size_t w = key_width(mu);
  out.resize(2 * mu * w);
  for (std::size_t c = 0; c < mu; ++c) {
    const point_t x = order_[c];
    put(out, c * w, w, static_cast<std::uint64_t>(label_[pair.phi()(x)]));
    put(out, (mu + c) * w, w, static_cast<std::uint64_t>(label_[pair.psi()(x)]));
  }
}

MinimalKey minimal_key(const CosetPair& pair) {
  KeyScratch scratch;
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> current;
  MinimalKey result;
  for (point_t base = 0; base < pair.mu(); ++base) {
    scratch.key_at(pair, base, current);
    if (base == 0 || current < best) {
      best.swap(current);
      result.base = base;
      result.multiplicity = 1;
    } else if (current == best) {
      ++result.multiplicity;
    }
  }
  result.key = CanonicalKey(std::move(best));
  return result;
}

bool is_minimal_labeling(const CosetPair& pair) {
  const CanonicalKey own = encode_labeling(pair);
  KeyScratch scratch;
  std::vector<std::uint8_t> current;
  scratch.key_at(pair, 0, current);
  if (current != own.bytes()) return false;
  for (point_t base = 1; base < pair.mu(); ++base) {
    scratch.key_at(pair, base, current);
    if (current < own.bytes()) return false;
  }
  return true;
}

}  // namespace modsub
