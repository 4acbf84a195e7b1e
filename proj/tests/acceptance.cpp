// Acceptance suite: one PASS/FAIL line per criterion, with its wall time
// checked against the allowed limit. Exits nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "pathforge/bijections.hpp"
#include "pathforge/enumerate.hpp"
#include "pathforge/identities.hpp"
#include "pathforge/moments.hpp"
#include "pathforge/stats.hpp"

using namespace pathforge;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

Rational rat(const IdentityValue& v) { return std::get<Rational>(v); }
GammaPoly poly(const IdentityValue& v) { return std::get<GammaPoly>(v); }

Outcome identity_1_at_3() {
  const auto r = verify_thm1(3);
  const Rational closed = Rational(catalan(6)) / Rational(catalan(3) * catalan(3)) - 1;
  return {r.equal && rat(r.lhs) == Rational(107, 25) && rat(r.lhs) == closed, "lhs " + to_string(r.lhs)};
}

Outcome identity_2_at_3() {
  const auto r = verify_thm2(3);
  const Rational closed = Rational(catalan(7)) / Rational(catalan(3) * catalan(3));
  return {r.equal && rat(r.lhs) == Rational(429, 25) && rat(r.lhs) == closed, "lhs " + to_string(r.lhs)};
}

Outcome identity_3_at_3() {
  const auto r = verify_thm3(3);
  const GammaPoly golden({0, 9, 39, 44, 14, 1});
  const auto closed = narayana_poly(6) - narayana_poly(3) * narayana_poly(3);
  return {r.equal && poly(r.lhs) == golden && closed == golden, "numerator " + to_string(r.lhs)};
}

Outcome sweep_rows(const std::vector<int>& ids, int k_max) {
  const auto report = sweep(ids, k_max);
  std::size_t expected_rows = 0;
  for (const auto& row : report.rows) expected_rows += row.expected_equal;
  return {report.holds() && !report.partial, std::to_string(expected_rows) + " expected-equal rows, all equal: " +
                                                  (report.holds() ? "yes" : "no")};
}

Outcome identity_4_at_3() {
  const auto good = verify_thm4(3, RhsIndex::KMinus1);
  const auto other = verify_thm4(3, RhsIndex::K);
  return {good.equal && rat(good.lhs) == 16 && rat(good.rhs) == 16 && !other.equal,
          "lhs " + to_string(good.lhs) + ", rhs over k-1 " + to_string(good.rhs) + ", rhs over k " +
              to_string(other.rhs)};
}

Outcome identity_5_at_3() {
  const auto good = verify_thm5(3, RhsIndex::K);
  const auto other = verify_thm5(3, RhsIndex::KMinus1);
  const GammaPoly golden({0, 3, 3});
  return {good.equal && poly(good.lhs) == golden && poly(good.rhs) == golden && !other.equal,
          "both sides " + to_string(good.lhs) + ", rhs over k-1 " + to_string(other.rhs)};
}

Outcome bijections_exhaustive() {
  std::ostringstream detail;
  bool ok = true;
  std::vector<GammaPoly> split_weight(5);  // C and D output weights by k
  for (auto c : {Construction::A, Construction::B, Construction::C, Construction::D}) {
    for (int k = 1; k <= 4; ++k) {
      std::set<std::string> outputs;
      GammaPoly weight;
      std::size_t inputs = 0;
      for_each_input(c, k, [&](const FiveTuple& t) {
        ++inputs;
        const auto mid = construct(t);
        ok &= in_image(c, mid.path) && invert(c, mid.path) == t;
        ok &= outputs.insert(mid.path.render()).second;
        weight.add_term(1, static_cast<std::size_t>(mid.path.rise_count()));
      });
      std::size_t image = 0;
      const int half = c == Construction::B ? 2 * k + 1 : 2 * k;
      for_each_path(kind_of(c), half, [&](const Path& p) {
        if (!in_image(c, p)) return;
        ++image;
        ok &= construct(invert(c, p)).path == p;
      });
      ok &= image == outputs.size();
      if (c == Construction::A) ok &= BigInt(inputs) == catalan(2 * k) - catalan(k) * catalan(k);
      if (c == Construction::B) ok &= BigInt(inputs) == catalan(2 * k + 1);
      if (c != Construction::A && c != Construction::B) split_weight[k] += weight;
      if (k == 4) detail << to_string(c) << ":" << inputs << " ";
    }
  }
  // The C and D images together carry the whole weight N_2k - N_k^2.
  for (int k = 1; k <= 4; ++k) ok &= split_weight[k] == narayana_poly(2 * k) - narayana_poly(k) * narayana_poly(k);
  detail << "inputs at k=4";
  return {ok, detail.str()};
}

Outcome enumeration_counts() {
  bool ok = true;
  for (int k = 0; k <= 10; ++k) {
    std::size_t n = 0;
    for_each_path(PathKind::Dyck, k, [&](const Path&) { ++n; });
    ok &= BigInt(n) == catalan(k);
  }
  for (int k = 1; k <= 8; ++k) {
    GammaPoly w;
    for_each_path(PathKind::AltMotzkin, k, [&](const Path& p) { w.add_term(1, p.rise_count()); });
    ok &= w == narayana_poly(k);
  }
  std::size_t checked = 0;
  for (int k = 0; k <= 6; ++k) {
    for_each_path(PathKind::AltMotzkin, k, [&](const Path& p) {
      ok &= check_level_parity(p).ok();
      ++checked;
    });
  }
  return {ok, "parity checked on " + std::to_string(checked) + " paths"};
}

Outcome monte_carlo() {
  const auto wigner = wigner_moment(4, 2000, 20, 2024);
  const auto wishart = wishart_moment(2, 2000, 1000, 20, 2024);
  const auto again = wishart_moment(2, 2000, 1000, 20, 2024);
  std::ostringstream detail;
  detail << "wigner " << wigner.estimate << " (z " << wigner.z_score() << "), wishart " << wishart.estimate << " (z "
         << wishart.z_score() << ")";
  return {wigner.target_exact == 2 && wigner.z_score() <= 4 && wishart.target_exact == Rational(3, 2) &&
              wishart.z_score() <= 4 && again.estimate == wishart.estimate,
          detail.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"identity 1 at k=3 equals 107/25", 1, identity_1_at_3},
      {"identity 2 at k=3 equals 429/25", 1, identity_2_at_3},
      {"identity 3 at k=3 numerator", 1, identity_3_at_3},
      {"identities 1-3 for k=1..6", 30, [] { return sweep_rows({1, 2, 3}, 6); }},
      {"identity 4 at k=3 equals 16 over k-1", 1, identity_4_at_3},
      {"identity 5 at k=3 equals 3g+3g^2 over k", 1, identity_5_at_3},
      {"identities 4-5 for k=2..6", 30, [] { return sweep_rows({4, 5}, 6); }},
      {"bijections A-D exhaustive for k<=4", 120, bijections_exhaustive},
      {"enumeration counts and level parity", 60, enumeration_counts},
      {"Monte Carlo moments within 4 SE", 120, monte_carlo},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << outcome.detail << "; " << seconds << " s"
              << (in_time ? "" : ", over the time limit") << "]\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
