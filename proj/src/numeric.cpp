#include "pathforge/numeric.hpp"

#include <stdexcept>

namespace pathforge {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    // result holds binom(n - k + j - 1, j - 1); the product is divisible by j.
    result *= n - k + j;
    result /= j;
  }
  return result;
}

BigInt catalan(std::int64_t k) {
  if (k < 0) throw std::domain_error("catalan: k must be nonnegative");
  return binomial(2 * k, k) / (k + 1);
}

BigInt narayana(std::int64_t k, std::int64_t r) {
  if (k < 1) throw std::domain_error("narayana: k must be at least 1");
  if (r < 0 || r >= k) {
    throw std::domain_error("narayana: r must satisfy 0 <= r <= k-1 (k=" + std::to_string(k) +
                            ", r=" + std::to_string(r) + ")");
  }
  return binomial(k, r) * binomial(k - 1, r) / (r + 1);
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
}

}  // namespace pathforge
