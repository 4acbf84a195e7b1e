#include "pathforge/gamma_poly.hpp"

#include <stdexcept>

namespace pathforge {

GammaPoly::GammaPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

GammaPoly GammaPoly::constant(BigInt value) { return GammaPoly(std::vector<BigInt>{std::move(value)}); }

GammaPoly GammaPoly::monomial(BigInt coefficient, std::size_t power) {
  std::vector<BigInt> c(power + 1);
  c[power] = std::move(coefficient);
  return GammaPoly(std::move(c));
}

BigInt GammaPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

std::optional<std::size_t> GammaPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational GammaPoly::evaluate(const Rational& gamma) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * gamma + Rational(*it);
  return acc;
}

void GammaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void GammaPoly::add_term(const BigInt& coefficient, std::size_t power) {
  if (coefficient == 0) return;
  if (coeffs_.size() <= power) coeffs_.resize(power + 1);
  coeffs_[power] += coefficient;
  trim();
}

GammaPoly& GammaPoly::operator+=(const GammaPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

GammaPoly& GammaPoly::operator-=(const GammaPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

GammaPoly& GammaPoly::operator*=(const GammaPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> product(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

GammaPoly& GammaPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

std::string GammaPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    const BigInt& c = coeffs_[p];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (p == 0 || mag != 1) out += mag.str();
    if (p >= 1) out += "γ";
    if (p >= 2) out += "^" + std::to_string(p);
  }
  return out;
}

nlohmann::json GammaPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.str());
  return arr;
}

GammaPoly GammaPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("GammaPoly JSON must be an array of decimal strings");
  std::vector<BigInt> c;
  c.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("GammaPoly coefficient must be a decimal string");
    try {
      c.emplace_back(e.get<std::string>());
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("GammaPoly coefficient is not an integer: " + e.get<std::string>());
    }
  }
  return GammaPoly(std::move(c));
}

GammaPoly narayana_poly(std::int64_t k) {
  if (k < 1) throw std::domain_error("narayana_poly: k must be at least 1");
  std::vector<BigInt> c;
  c.reserve(static_cast<std::size_t>(k));
  for (std::int64_t r = 0; r < k; ++r) c.push_back(narayana(k, r));
  return GammaPoly(std::move(c));
}

}  // namespace pathforge
