#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "pathforge/gamma_poly.hpp"
#include "pathforge/numeric.hpp"

using namespace pathforge;

TEST_CASE("catalan values") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(6) == 132);
  // C_6 / C_3^2 - 1 = 107/25
  CHECK(Rational(catalan(6), catalan(3) * catalan(3)) - 1 == Rational(107, 25));
}

TEST_CASE("catalan agrees with a Pascal-triangle oracle up to C_40") {
  for (int k = 0; k <= 40; ++k) {
    CAPTURE(k);
    CHECK(catalan(k).str() == oracle::to_string(oracle::catalan(k)));
  }
  CHECK(catalan(40).str() == "2622127042276492108820");
}

TEST_CASE("binomial edge cases") {
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(80, 40).str() == "107507208733336176461620");
}

TEST_CASE("narayana values and domain") {
  CHECK(narayana(3, 0) == 1);
  CHECK(narayana(3, 1) == 3);
  // 50 alternating Motzkin paths of length 12 have exactly 2 rises.
  long long two_rises = 0;
  for (const auto& s : oracle::brute_force_paths(6, true)) two_rises += oracle::stats(s).rises == 2;
  CHECK(two_rises == 50);
  CHECK(narayana(6, 2) == two_rises);
  CHECK_THROWS_AS(narayana(3, 3), std::domain_error);
  CHECK_THROWS_AS(narayana(3, -1), std::domain_error);
  CHECK_THROWS_AS(narayana(0, 0), std::domain_error);
}

TEST_CASE("narayana rows sum to catalan numbers") {
  for (int k = 1; k <= 20; ++k) {
    BigInt sum = 0;
    for (int r = 0; r < k; ++r) sum += narayana(k, r);
    CHECK(sum == catalan(k));
  }
}

TEST_CASE("narayana polynomial") {
  CHECK(narayana_poly(1) == GammaPoly({1}));
  CHECK(narayana_poly(3) == GammaPoly({1, 3, 1}));
  CHECK(narayana_poly(6) == GammaPoly({1, 15, 50, 50, 15, 1}));
  // N_6 - N_3^2 is the worked numerator of identity 3 at k = 3.
  CHECK(narayana_poly(6) - narayana_poly(3) * narayana_poly(3) == GammaPoly({0, 9, 39, 44, 14, 1}));
  for (int k = 1; k <= 12; ++k) {
    const auto p = narayana_poly(k);
    REQUIRE(p.degree() == std::size_t(k - 1));
    for (int r = 0; r < k; ++r) CHECK(p.coefficient(r) == p.coefficient(k - 1 - r));
    CHECK(p.evaluate(1) == Rational(catalan(k)));
  }
  CHECK_THROWS_AS(narayana_poly(0), std::domain_error);
}

TEST_CASE("GammaPoly canonical form and arithmetic") {
  const GammaPoly zero;
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree().has_value());
  CHECK(GammaPoly({1, 2, 0, 0}).coefficients().size() == 2);
  CHECK(GammaPoly({0, 0}) == zero);

  const GammaPoly p({1, 3, 1});
  CHECK(p * p == GammaPoly({1, 6, 11, 6, 1}));
  CHECK(p + zero == p);
  CHECK(p - p == zero);
  CHECK((p * BigInt(0)).is_zero());
  CHECK(p * BigInt(-2) == GammaPoly({-2, -6, -2}));
  CHECK(p.evaluate(1) == 5);
  CHECK(p.evaluate(Rational(1, 2)) == Rational(11, 4));
  CHECK(GammaPoly::monomial(3, 2) == GammaPoly({0, 0, 3}));

  GammaPoly acc;
  acc.add_term(4, 3);
  acc.add_term(-4, 3);
  CHECK(acc.is_zero());
}

TEST_CASE("GammaPoly text and JSON") {
  CHECK(GammaPoly({0, 9, 39, 44, 14, 1}).to_string() == "9γ + 39γ^2 + 44γ^3 + 14γ^4 + γ^5");
  CHECK(GammaPoly({-1, 0, -2}).to_string() == "-1 - 2γ^2");
  CHECK(GammaPoly().to_string() == "0");

  const GammaPoly big({BigInt("123456789012345678901234567890"), 0, 7});
  const auto j = big.to_json();
  CHECK(j.dump() == R"(["123456789012345678901234567890","0","7"])");
  CHECK(GammaPoly::from_json(j) == big);
  CHECK(GammaPoly::from_json(nlohmann::json::array()) == GammaPoly());
  CHECK_THROWS_AS(GammaPoly::from_json(nlohmann::json::parse("[1,2]")), std::invalid_argument);
  CHECK_THROWS_AS(GammaPoly::from_json(nlohmann::json::parse(R"(["x"])")), std::invalid_argument);
}

TEST_CASE("GammaPoly ring axioms on random polynomials") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> coeff(-20, 20), len(0, 6);
  auto random_poly = [&] {
    std::vector<BigInt> c(static_cast<std::size_t>(len(rng)));
    for (auto& x : c) x = coeff(rng);
    return GammaPoly(std::move(c));
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const Rational x(coeff(rng), 7);
    CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    if (!a.is_zero() && !b.is_zero()) CHECK(*(a * b).degree() == *a.degree() + *b.degree());
  }
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(107, 25)) == "107/25");
  CHECK(to_string(Rational(32, 2)) == "16");
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(parse_rational("429/25") == Rational(429, 25));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}
