#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pathforge/numeric.hpp"

namespace pathforge {

/// Dense polynomial in gamma with exact integer coefficients, lowest power
/// first. Always canonical: the last stored coefficient is nonzero, and the
/// zero polynomial stores nothing.
class GammaPoly {
 public:
  GammaPoly() = default;
  explicit GammaPoly(std::vector<BigInt> coefficients);

  static GammaPoly constant(BigInt value);
  static GammaPoly monomial(BigInt coefficient, std::size_t power);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t power) const;

  /// std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  Rational evaluate(const Rational& gamma) const;

  GammaPoly& operator+=(const GammaPoly& other);
  GammaPoly& operator-=(const GammaPoly& other);
  GammaPoly& operator*=(const GammaPoly& other);
  GammaPoly& operator*=(const BigInt& scalar);

  /// Adds coefficient * gamma^power in place.
  void add_term(const BigInt& coefficient, std::size_t power);

  friend GammaPoly operator+(GammaPoly a, const GammaPoly& b) { return a += b; }
  friend GammaPoly operator-(GammaPoly a, const GammaPoly& b) { return a -= b; }
  friend GammaPoly operator*(GammaPoly a, const GammaPoly& b) { return a *= b; }
  friend GammaPoly operator*(GammaPoly a, const BigInt& s) { return a *= s; }
  friend GammaPoly operator*(const BigInt& s, GammaPoly a) { return a *= s; }
  friend bool operator==(const GammaPoly&, const GammaPoly&) = default;

  /// Human-readable form, e.g. "9γ + 39γ^2 + 44γ^3".
  std::string to_string() const;

  /// JSON array of decimal coefficient strings, lowest power first.
  nlohmann::json to_json() const;
  static GammaPoly from_json(const nlohmann::json& j);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// sum_{r=0}^{k-1} N_{k,r} gamma^r, from the closed form.
GammaPoly narayana_poly(std::int64_t k);

}  // namespace pathforge
