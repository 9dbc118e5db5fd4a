#include "modsub/counting.hpp"

#include <mutex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace modsub {

namespace {

using Rational = boost::multiprecision::cpp_rational;

class FactorialTable {
public:
  BigCount get(std::uint64_t n) {
    std::lock_guard lock(mutex_);
    while (table_.size() <= n) {
      table_.push_back(table_.back() * table_.size());
    }
    return table_[n];
  }

private:
  std::mutex mutex_;
  std::vector<BigCount> table_{BigCount(1)};
};

FactorialTable& factorials() {
  static FactorialTable table;
  return table;
}

BigCount exact_quotient(const BigCount& num, const BigCount& den, const char* what) {
  if (num % den != 0) throw NonIntegralResult(std::string(what) + ": inexact division");
  return num / den;
}

BigCount to_integer(const Rational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw NonIntegralResult(std::string(what) + ": non-integral value " + r.str());
  }
  return boost::multiprecision::numerator(r);
}

BigCount pow_int(std::uint64_t base, std::uint64_t exp) { return boost::multiprecision::pow(BigCount(base), exp); }

}  // namespace

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient: n must be positive");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

BigCount factorial(std::uint64_t n) { return factorials().get(n); }

BigCount tutte_rooted_all(std::uint64_t n) {
  const BigCount num = 2 * pow_int(3, n) * factorial(2 * n);
  return exact_quotient(num, factorial(n) * factorial(n + 2), "tutte_rooted_all");
}

BigCount mullin_rooted_trivalent(std::int64_t edges) {
  if (edges < 0 || edges % 3 != 0) return 0;
  if (edges == 0) return 1;
  const auto p = static_cast<std::uint64_t>(edges / 3);
  if (p % 2 == 0) {
    const BigCount num = factorial(3 * p / 2) * pow_int(2, 3 * p);
    return exact_quotient(num, factorial(p + 1) * factorial((p + 2) / 2), "mullin_rooted_trivalent");
  }
  const BigCount num = 3 * factorial(3 * p + 1) * factorial((p + 1) / 2) * pow_int(2, p);
  const BigCount den = factorial((3 * p + 3) / 2) * factorial(p + 2) * factorial(p);
  return exact_quotient(num, den, "mullin_rooted_trivalent");
}

BigCount mullin_vertex_form(std::uint64_t p) {
  if (p == 0) throw std::invalid_argument("mullin_vertex_form: p must be positive");
  return mullin_rooted_trivalent(static_cast<std::int64_t>(3 * p));
}

BigCount n_rooted(std::int64_t mu) {
  if (mu < 0) return 0;
  if (mu == 0) return 1;
  if (mu % 6 != 0) return 0;
  // A trivalent map on mu darts has mu / 2 edges.
  return mullin_rooted_trivalent(mu / 2);
}

BigCount n_classes(std::int64_t mu) {
  if (mu <= 0 || mu % 6 != 0) return 0;
  if (mu == 6) return 2;

  const std::int64_t k = mu / 6;
  BigCount divisor_sum = 0;
  for (std::int64_t t = 1; t < k; ++t) {
    if (k % t != 0) continue;
    divisor_sum += BigCount(totient(static_cast<std::uint64_t>(k / t))) * (t + 2) * (t + 1) * n_rooted(6 * t);
  }
  Rational total = (Rational(n_rooted(mu)) + Rational(divisor_sum) / 2) / mu;

  switch (mu % 18) {
    case 6:
      total += Rational(2, 3) * (k - 2) * Rational(n_rooted(mu / 3 - 8));
      break;
    case 12:
      total += Rational(2, 3) * (Rational(mu, 18) + Rational(4, 3)) * Rational(n_rooted(mu / 3 - 4));
      break;
    default:
      break;
  }
  if (mu % 4 != 0) {
    total += Rational(1, 4) * (k + 3) * Rational(n_rooted(mu / 2 - 3));
  } else {
    total += Rational(1, 4) * (mu / 2 - 2) * Rational(n_rooted(mu / 2 - 6));
  }
  return to_integer(total, "n_classes");
}

BigCount liskovets_unrooted_all(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("liskovets_unrooted_all: n must be positive");
  BigCount bracket = tutte_rooted_all(n);
  for (std::uint64_t t = 1; t < n; ++t) {
    if (n % t != 0) continue;
    bracket += BigCount(totient(n / t)) * (t + 2) * (t + 1) * tutte_rooted_all(t);
  }
  Rational total = Rational(bracket) / (2 * n);
  const auto signed_n = static_cast<std::int64_t>(n);
  if (n % 2 == 1) {
    total += Rational(signed_n + 3, 4) * Rational(tutte_rooted_all((n - 1) / 2));
  } else {
    total += Rational(signed_n - 3, 4) * Rational(tutte_rooted_all((n - 2) / 2));
  }
  return to_integer(total, "liskovets_unrooted_all");
}

}  // namespace modsub
