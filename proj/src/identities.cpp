#include "pathforge/identities.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "pathforge/parallel.hpp"
#include "pathforge/stats.hpp"

namespace pathforge {

std::string to_string(const IdentityValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  return std::get<GammaPoly>(v).to_string();
}

nlohmann::json to_json(const IdentityValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_string(*r);
  return std::get<GammaPoly>(v).to_json();
}

std::string_view to_string(RhsIndex r) { return r == RhsIndex::K ? "k" : "k-1"; }

RhsIndex parse_rhs_index(std::string_view text) {
  if (text == "k") return RhsIndex::K;
  if (text == "k-1") return RhsIndex::KMinus1;
  throw std::invalid_argument("unknown rhs index '" + std::string(text) + "' (expected k or k-1)");
}

IdentityValue IdentityReport::difference() const {
  if (const auto* l = std::get_if<Rational>(&lhs)) return Rational(*l - std::get<Rational>(rhs));
  return std::get<GammaPoly>(lhs) - std::get<GammaPoly>(rhs);
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j{{"id", r.id}, {"k", r.k}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"equal", r.equal}};
  if (r.rhs_index) {
    j["rhs_index"] = std::string(to_string(*r.rhs_index));
    j["expected"] = r.expected_equal;
  }
  if (!r.equal) j["difference"] = to_json(r.difference());
  return j;
}

namespace {

void require_k(int k, int min, const char* what) {
  if (k < min) throw std::invalid_argument(std::string(what) + " requires k >= " + std::to_string(min));
}

// Per-altitude totals of R and V over D_k, plus the path count.
struct DyckTotals {
  std::int64_t count = 0;
  std::vector<std::int64_t> rises, vertices;
};

DyckTotals dyck_totals(int k) {
  const auto n = static_cast<std::size_t>(k);
  auto make = [n] { return DyckTotals{0, std::vector<std::int64_t>(n), std::vector<std::int64_t>(n + 1)}; };
  auto fold = [n](DyckTotals& acc, const Path& p) {
    const auto s = compute_stats(p);
    acc.count += 1;
    for (std::size_t i = 0; i < n; ++i) acc.rises[i] += s.rises[i];
    for (std::size_t i = 0; i <= n; ++i) acc.vertices[i] += s.vertices[i];
  };
  auto merge = [n](DyckTotals& acc, const DyckTotals& part) {
    acc.count += part.count;
    for (std::size_t i = 0; i < n; ++i) acc.rises[i] += part.rises[i];
    for (std::size_t i = 0; i <= n; ++i) acc.vertices[i] += part.vertices[i];
  };
  return fold_paths<DyckTotals>(PathKind::Dyck, k, make, fold, merge);
}

// Table of gamma-weighted per-altitude totals: cell [i][r] sums the statistic
// at altitude i over paths with r rises.
using WeightTable = std::vector<std::vector<std::int64_t>>;

struct MotzkinTotals {
  std::vector<std::int64_t> count;  // by rise count
  WeightTable rises, even_levels;
};

MotzkinTotals motzkin_totals(int k) {
  const auto n = static_cast<std::size_t>(k);
  auto make = [n] {
    return MotzkinTotals{std::vector<std::int64_t>(n + 1), WeightTable(n, std::vector<std::int64_t>(n + 1)),
                         WeightTable(n, std::vector<std::int64_t>(n + 1))};
  };
  auto fold = [n](MotzkinTotals& acc, const Path& p) {
    const auto s = compute_stats(p);
    const auto r = static_cast<std::size_t>(s.total_rises);
    acc.count[r] += 1;
    for (std::size_t i = 0; i < n; ++i) {
      acc.rises[i][r] += s.rises[i];
      acc.even_levels[i][r] += s.even_levels[i];
    }
  };
  auto merge = [n](MotzkinTotals& acc, const MotzkinTotals& part) {
    for (std::size_t r = 0; r <= n; ++r) {
      acc.count[r] += part.count[r];
      for (std::size_t i = 0; i < n; ++i) {
        acc.rises[i][r] += part.rises[i][r];
        acc.even_levels[i][r] += part.even_levels[i][r];
      }
    }
  };
  return fold_paths<MotzkinTotals>(PathKind::AltMotzkin, k, make, fold, merge);
}

GammaPoly row_poly(const std::vector<std::int64_t>& row) {
  std::vector<BigInt> c(row.begin(), row.end());
  return GammaPoly(std::move(c));
}

BigInt sum_of_squares(const std::vector<std::int64_t>& v) {
  BigInt total = 0;
  for (auto x : v) total += BigInt(x) * x;
  return total;
}

IdentityReport make_report(int id, int k, IdentityValue lhs, IdentityValue rhs) {
  IdentityReport r;
  r.id = id;
  r.k = k;
  r.equal = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

BigInt thm1_pair_sum(int k) {
  require_k(k, 1, "identity 1");
  return sum_of_squares(dyck_totals(k).rises);
}

BigInt thm2_pair_sum(int k) {
  require_k(k, 1, "identity 2");
  return sum_of_squares(dyck_totals(k).vertices);
}

GammaPoly thm3_pair_sum(int k) {
  require_k(k, 1, "identity 3");
  const auto t = motzkin_totals(k);
  GammaPoly rises, levels;
  for (const auto& row : t.rises) {
    const auto p = row_poly(row);
    rises += p * p;
  }
  for (const auto& row : t.even_levels) {
    const auto p = row_poly(row);
    levels += p * p;
  }
  return rises + GammaPoly::monomial(1, 1) * levels;
}

IdentityReport verify_thm1(int k) {
  require_k(k, 1, "identity 1");
  const auto t = dyck_totals(k);
  const BigInt count2 = BigInt(t.count) * t.count;
  const Rational lhs(sum_of_squares(t.rises), count2);
  const BigInt ck = catalan(k);
  const Rational rhs = Rational(catalan(2 * k), ck * ck) - 1;
  return make_report(1, k, lhs, rhs);
}

IdentityReport verify_thm2(int k) {
  require_k(k, 1, "identity 2");
  const auto t = dyck_totals(k);
  const BigInt count2 = BigInt(t.count) * t.count;
  const Rational lhs(sum_of_squares(t.vertices), count2);
  const BigInt ck = catalan(k);
  const Rational rhs(catalan(2 * k + 1), ck * ck);
  return make_report(2, k, lhs, rhs);
}

IdentityReport verify_thm3(int k) {
  const GammaPoly lhs = thm3_pair_sum(k);
  const GammaPoly nk = narayana_poly(k);
  const GammaPoly rhs = narayana_poly(2 * k) - nk * nk;
  return make_report(3, k, lhs, rhs);
}

IdentityReport verify_thm4(int k, RhsIndex rhs_index) {
  require_k(k, 2, "identity 4");
  Rational lhs = 0;
  for_each_path(PathKind::Dyck, k, [&](const Path& p) {
    const auto s = compute_stats(p);
    for (std::size_t i = 0; i < s.rises.size(); ++i) {
      const std::int64_t r = s.rises[i];
      lhs += Rational(r, 2) * (2 * static_cast<std::int64_t>(i) + 3 - r);
    }
  });
  const int m = rhs_index == RhsIndex::K ? k : k - 1;
  BigInt rhs = 0;
  for_each_path(PathKind::Dyck, m, [&](const Path& p) {
    const auto s = compute_stats(p);
    for (std::size_t i = 0; i < static_cast<std::size_t>(k) && i < s.vertices.size(); ++i) {
      rhs += choose2(s.vertices[i] + 1);
    }
  });
  auto report = make_report(4, k, lhs, Rational(rhs));
  report.rhs_index = rhs_index;
  report.expected_equal = rhs_index == kThm4Expected;
  return report;
}

IdentityReport verify_thm5(int k, RhsIndex rhs_index) {
  require_k(k, 2, "identity 5");
  const auto n = static_cast<std::size_t>(k);
  std::vector<BigInt> lhs(n + 2);
  for_each_path(PathKind::AltMotzkin, k, [&](const Path& p) {
    const auto s = compute_stats(p);
    const auto r = static_cast<std::size_t>(s.total_rises);
    for (std::size_t i = 0; i < n; ++i) {
      lhs[r] += static_cast<std::int64_t>(i + 1) * s.rises[i];
      lhs[r + 1] += static_cast<std::int64_t>(i) * s.even_levels[i];
    }
  });
  const int m = rhs_index == RhsIndex::K ? k : k - 1;
  std::vector<BigInt> rhs(n + 2);
  for_each_path(PathKind::AltMotzkin, m, [&](const Path& p) {
    const auto s = compute_stats(p);
    const auto r = static_cast<std::size_t>(s.total_rises);
    for (std::size_t i = 0; i < n && i < s.rises.size(); ++i) {
      rhs[r] += choose2(s.rises[i]);
      rhs[r + 1] += choose2(s.even_levels[i]);
    }
  });
  auto report = make_report(5, k, GammaPoly(std::move(lhs)), GammaPoly(std::move(rhs)));
  report.rhs_index = rhs_index;
  report.expected_equal = rhs_index == kThm5Expected;
  return report;
}

std::vector<IdentityReport> verify_both(int id, int k) {
  if (id == 4) return {verify_thm4(k, kThm4Expected), verify_thm4(k, kThm4Expected == RhsIndex::K ? RhsIndex::KMinus1 : RhsIndex::K)};
  if (id == 5) return {verify_thm5(k, kThm5Expected), verify_thm5(k, kThm5Expected == RhsIndex::K ? RhsIndex::KMinus1 : RhsIndex::K)};
  throw std::invalid_argument("only identities 4 and 5 have rhs variants");
}

bool SweepReport::holds() const {
  for (const auto& r : rows) {
    if (r.failed()) return false;
  }
  return !partial;
}

SweepReport sweep(const std::vector<int>& ids, int k_max, const SweepOptions& options) {
  for (int id : ids) {
    if (id < 1 || id > 5) throw std::invalid_argument("identity id must be 1..5, got " + std::to_string(id));
  }
  const auto start = std::chrono::steady_clock::now();
  auto over_budget = [&] {
    if (options.budget_seconds <= 0) return false;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() > options.budget_seconds;
  };
  SweepReport report;
  for (int id : ids) {
    for (int k = 1; k <= k_max; ++k) {
      if (over_budget()) {
        report.partial = true;
        return report;
      }
      switch (id) {
        case 1: report.rows.push_back(verify_thm1(k)); break;
        case 2: report.rows.push_back(verify_thm2(k)); break;
        case 3: report.rows.push_back(verify_thm3(k)); break;
        default: {
          if (k < 2) break;
          auto both = verify_both(id, k);
          if (options.rhs_index) {
            for (auto& r : both) r.expected_equal = r.rhs_index == options.rhs_index;
            std::stable_partition(both.begin(), both.end(), [](const auto& r) { return r.expected_equal; });
          }
          for (auto& r : both) report.rows.push_back(std::move(r));
        }
      }
    }
  }
  return report;
}

}  // namespace pathforge
