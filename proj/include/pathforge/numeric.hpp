#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient by the multiplicative formula; every intermediate
// division is exact. Returns 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// C_k = binom(2k, k) / (k + 1).
BigInt catalan(std::int64_t k);

// N_{k,r} = binom(k, r) binom(k-1, r) / (r + 1), defined for k >= 1 and
// 0 <= r <= k-1. Throws std::domain_error outside that range.
BigInt narayana(std::int64_t k, std::int64_t r);

// "107/25", or "16" when the denominator is 1.
std::string to_string(const Rational& value);
Rational parse_rational(std::string_view text);

}  // namespace pathforge
