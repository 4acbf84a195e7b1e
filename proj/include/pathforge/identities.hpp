#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pathforge/gamma_poly.hpp"
#include "pathforge/numeric.hpp"

namespace pathforge {

using IdentityValue = std::variant<Rational, GammaPoly>;

std::string to_string(const IdentityValue& v);
nlohmann::json to_json(const IdentityValue& v);

/// Which path set the right-hand side of identity 4 or 5 ranges over:
/// half-length k, or k-1.
enum class RhsIndex { K, KMinus1 };

std::string_view to_string(RhsIndex r);
RhsIndex parse_rhs_index(std::string_view text);

/// Conventions under which identities 4 and 5 are expected to hold; these
/// are the ones reproducing the worked k = 3 values (16 and 3γ + 3γ²).
inline constexpr RhsIndex kThm4Expected = RhsIndex::KMinus1;
inline constexpr RhsIndex kThm5Expected = RhsIndex::K;

struct IdentityReport {
  int id = 0;
  int k = 0;
  IdentityValue lhs;
  IdentityValue rhs;
  bool equal = false;
  std::optional<RhsIndex> rhs_index;  // identities 4 and 5 only
  bool expected_equal = true;         // false for the non-default rhs variant

  IdentityValue difference() const;
  bool failed() const { return expected_equal && !equal; }
};

nlohmann::json to_json(const IdentityReport& r);

/// Identity 1: sum over D_k^2 of sum_i R_i(p1) R_i(p2), divided by |D_k|^2,
/// against C_{2k}/C_k^2 - 1.
IdentityReport verify_thm1(int k);
/// Identity 2: the same with vertex vectors, against C_{2k+1}/C_k^2.
IdentityReport verify_thm2(int k);
/// Identity 3, cleared of the N_k(γ)^2 denominator:
/// sum over AM_k^2 of γ^{r1+r2}(sum R_i R_i + γ sum L_i L_i)
/// against N_{2k}(γ) - N_k(γ)^2.
IdentityReport verify_thm3(int k);
/// Identity 4: sum over D_k of sum_i (R_i/2)(2i+3-R_i) against the sum over
/// D_{k} or D_{k-1} of sum_{i<k} binom(V_i+1, 2).
IdentityReport verify_thm4(int k, RhsIndex rhs);
/// Identity 5: sum over AM_k of γ^r (sum (i+1)R_i + γ sum i L_i) against the
/// sum over AM_k or AM_{k-1} of γ^r (sum binom(R_i,2) + γ sum binom(L_i,2)).
IdentityReport verify_thm5(int k, RhsIndex rhs);

/// Both rhs variants of identity 4 or 5, expected convention first.
std::vector<IdentityReport> verify_both(int id, int k);

/// The left side of identities 1 and 2 as an integer double sum (before
/// dividing by |D_k|^2); this is the size of the bijection domain.
BigInt thm1_pair_sum(int k);
BigInt thm2_pair_sum(int k);
GammaPoly thm3_pair_sum(int k);

struct SweepReport {
  std::vector<IdentityReport> rows;
  bool partial = false;  // the time budget ran out before k_max
  /// Every row expected to be equal is equal.
  bool holds() const;
};

struct SweepOptions {
  /// Forces the rhs variant marked as expected for identities 4 and 5; the
  /// other variant is still reported.
  std::optional<RhsIndex> rhs_index;
  /// Wall-clock budget in seconds; <= 0 means unlimited.
  double budget_seconds = 0;
};

/// Runs the given identities for k = 1..k_max (identities 4 and 5 start at
/// k = 2). Stops early and flags the report as partial if the budget is
/// exceeded.
SweepReport sweep(const std::vector<int>& ids, int k_max, const SweepOptions& options = {});

}  // namespace pathforge
