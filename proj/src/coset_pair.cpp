#include "modsub/coset_pair.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace modsub {

const char* to_string(PairError e) noexcept {
  switch (e) {
    case PairError::DegreeMismatch: return "DegreeMismatch";
    case PairError::NotInvolution: return "NotInvolution";
    case PairError::NotOrderThree: return "NotOrderThree";
    case PairError::NotTransitive: return "NotTransitive";
  }
  return "Unknown";
}

InvalidPair::InvalidPair(PairError reason)
    : std::invalid_argument(std::string("invalid coset pair: ") + to_string(reason)), reason_(reason) {}

std::optional<PairError> CosetPair::check(const Permutation& phi, const Permutation& psi) {
  if (phi.degree() != psi.degree()) return PairError::DegreeMismatch;
  for (point_t i = 0; i < phi.degree(); ++i) {
    if (phi(phi(i)) != i) return PairError::NotInvolution;
  }
  for (point_t i = 0; i < psi.degree(); ++i) {
    if (psi(psi(psi(i))) != i) return PairError::NotOrderThree;
  }
  if (!is_transitive(phi, psi)) return PairError::NotTransitive;
  return std::nullopt;
}

CosetPair CosetPair::validate(Permutation phi, Permutation psi) {
  if (auto err = check(phi, psi)) throw InvalidPair(*err);
  return CosetPair(std::move(phi), std::move(psi));
}

CuspSplit::CuspSplit(std::vector<std::uint32_t> widths) : widths_(std::move(widths)) {
  if (std::find(widths_.begin(), widths_.end(), 0u) != widths_.end()) {
    throw std::invalid_argument("cusp widths must be positive");
  }
  std::sort(widths_.begin(), widths_.end(), std::greater<>());
}

std::uint64_t CuspSplit::sum() const noexcept {
  return std::accumulate(widths_.begin(), widths_.end(), std::uint64_t{0});
}

std::string CuspSplit::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < widths_.size(); ++i) {
    if (i) out << '-';
    out << widths_[i];
  }
  return out.str();
}

CuspSplit CuspSplit::parse(const std::string& text) {
  std::vector<std::uint32_t> widths;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find_first_of("-, ", pos);
    if (next == std::string::npos) next = text.size();
    std::string token = text.substr(pos, next - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("cusp split: malformed \"" + text + "\"");
    }
    widths.push_back(static_cast<std::uint32_t>(std::stoul(token)));
    pos = next + 1;
  }
  return CuspSplit(std::move(widths));
}

std::uint32_t genus_from(std::uint64_t mu, std::uint64_t e2, std::uint64_t e3, std::uint64_t h) {
  const std::int64_t twelve_g = 12 + static_cast<std::int64_t>(mu) - 3 * static_cast<std::int64_t>(e2) -
                                4 * static_cast<std::int64_t>(e3) - 6 * static_cast<std::int64_t>(h);
  if (twelve_g < 0 || twelve_g % 12 != 0) {
    std::ostringstream msg;
    msg << "non-integral genus: 12g = " << twelve_g << " for (mu=" << mu << ", e2=" << e2 << ", e3=" << e3
        << ", h=" << h << ")";
    throw NonIntegralGenus(msg.str());
  }
  return static_cast<std::uint32_t>(twelve_g / 12);
}

Signature signature(const CosetPair& pair) {
  Signature s;
  s.mu = static_cast<std::uint32_t>(pair.mu());
  s.e2 = static_cast<std::uint32_t>(fixed_points(pair.phi()).size());
  s.e3 = static_cast<std::uint32_t>(fixed_points(pair.psi()).size());
  s.h = static_cast<std::uint32_t>(cycle_count(compose(pair.phi(), pair.psi())));
  s.g = genus_from(s.mu, s.e2, s.e3, s.h);
  return s;
}

CuspSplit cusp_split(const CosetPair& pair) {
  return CuspSplit(cycle_type(compose(pair.phi(), pair.psi())));
}

bool is_torsion_free(const CosetPair& pair) {
  return fixed_points(pair.phi()).empty() && fixed_points(pair.psi()).empty();
}

bool is_genus(const CosetPair& pair, std::uint32_t g) { return signature(pair).g == g; }

CosetPair mirror(const CosetPair& pair) { return CosetPair::validate(pair.phi(), inverse(pair.psi())); }

CosetPair conjugate(const CosetPair& pair, const Permutation& lambda) {
  const Permutation lambda_inv = inverse(lambda);
  return CosetPair::validate(compose(lambda, compose(pair.phi(), lambda_inv)),
                             compose(lambda, compose(pair.psi(), lambda_inv)));
}

}  // namespace modsub
