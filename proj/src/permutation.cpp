#include "modsub/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace modsub {

Permutation::Permutation(std::vector<point_t> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw std::invalid_argument("permutation degree must be at least 1");
  }
  std::vector<bool> seen(images_.size(), false);
  for (point_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) {
    throw std::invalid_argument("permutation degree must be at least 1");
  }
  std::vector<point_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    images[i] = static_cast<point_t>(i);
  }
  return Permutation(std::move(images), trusted_t{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<point_t> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = p.images_[q.images_[i]];
  }
  return Permutation(std::move(r), Permutation::trusted_t{});
}

Permutation inverse(const Permutation& p) {
  std::vector<point_t> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[p.images_[i]] = static_cast<point_t>(i);
  }
  return Permutation(std::move(r), Permutation::trusted_t{});
}

Permutation power(const Permutation& p, unsigned k) {
  Permutation result = Permutation::identity(p.degree());
  for (unsigned i = 0; i < k; ++i) {
    result = compose(p, result);
  }
  return result;
}

std::vector<std::vector<point_t>> cycles(const Permutation& p) {
  std::vector<std::vector<point_t>> out;
  std::vector<bool> seen(p.degree(), false);
  for (point_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    auto& cyc = out.emplace_back();
    for (point_t x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      cyc.push_back(x);
    }
  }
  return out;
}

std::vector<std::uint32_t> cycle_type(const Permutation& p) {
  std::vector<std::uint32_t> parts;
  std::vector<bool> seen(p.degree(), false);
  for (point_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::uint32_t len = 0;
    for (point_t x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

std::size_t cycle_count(const Permutation& p) {
  std::size_t count = 0;
  std::vector<bool> seen(p.degree(), false);
  for (point_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (point_t x = start; !seen[x]; x = p(x)) seen[x] = true;
  }
  return count;
}

std::vector<point_t> fixed_points(const Permutation& p) {
  std::vector<point_t> out;
  for (point_t i = 0; i < p.degree(); ++i) {
    if (p(i) == i) out.push_back(i);
  }
  return out;
}

bool is_transitive(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("is_transitive: degree mismatch");
  }
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  std::vector<point_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    point_t x = stack.back();
    stack.pop_back();
    // Orbits of a finite group are closed under inverses, so forward edges suffice.
    for (point_t y : {p(x), q(x)}) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

Permutation parse_cycles(std::string_view text, std::optional<std::size_t> degree) {
  std::vector<std::vector<std::size_t>> parsed;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw std::invalid_argument("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    }
    ++pos;
    auto& cyc = parsed.emplace_back();
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw std::invalid_argument("cycle notation: unexpected character '" + std::string(1, text[pos]) + "'");
      }
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 0x7fffffffu) throw std::invalid_argument("cycle notation: point out of range");
        ++pos;
      }
      cyc.push_back(value);
    }
    skip_ws();
  }

  std::size_t max_point = 0;
  bool any = false;
  for (const auto& cyc : parsed) {
    for (std::size_t v : cyc) {
      max_point = std::max(max_point, v);
      any = true;
    }
  }
  const std::size_t n = degree.value_or(any ? max_point + 1 : 1);
  if (any && max_point >= n) {
    throw std::invalid_argument("cycle notation: point " + std::to_string(max_point) +
                                " exceeds degree " + std::to_string(n));
  }
  if (n == 0) throw std::invalid_argument("permutation degree must be at least 1");

  std::vector<point_t> images(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<point_t>(i);
  for (const auto& cyc : parsed) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (used[cyc[k]]) {
        throw std::invalid_argument("cycle notation: point " + std::to_string(cyc[k]) + " repeated");
      }
      used[cyc[k]] = true;
      images[cyc[k]] = static_cast<point_t>(cyc[(k + 1) % cyc.size()]);
    }
  }
  return Permutation(std::move(images));
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  bool any = false;
  for (const auto& cyc : cycles(p)) {
    if (cyc.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out << ' ';
      out << cyc[k];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

}  // namespace modsub
