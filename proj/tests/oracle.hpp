#pragma once

// Independent reference computations for the test suites. Nothing here goes
// through the library's enumeration, statistics or bijection code.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using u128 = unsigned __int128;

inline std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

/// Pascal's triangle up to row `rows`.
inline std::vector<std::vector<u128>> pascal(int rows) {
  std::vector<std::vector<u128>> t(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, 1);
    for (int j = 1; j < n; ++j) t[n][j] = t[n - 1][j - 1] + t[n - 1][j];
  }
  return t;
}

/// C_k = binom(2k,k) - binom(2k,k+1).
inline u128 catalan(int k) {
  const auto t = pascal(2 * k);
  return k == 0 ? 1 : t[2 * k][k] - t[2 * k][k + 1];
}

/// Checks a step string directly: never below zero, ends at zero, and the
/// kind-specific step rules (1-indexed parity for alternating Motzkin).
inline bool valid(const std::string& s, bool motzkin) {
  int h = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const bool even = (j + 1) % 2 == 0;
    if (s[j] == 'U') {
      if (motzkin && !even) return false;
      ++h;
    } else if (s[j] == 'D') {
      if (motzkin && even) return false;
      if (--h < 0) return false;
    } else if (s[j] == 'L') {
      if (!motzkin) return false;
    } else {
      return false;
    }
  }
  return h == 0;
}

/// Every string over the step alphabet of length 2k that is a valid path,
/// by exhaustive generation (3^(2k) or 2^(2k) candidates).
inline std::vector<std::string> brute_force_paths(int k, bool motzkin) {
  const std::string alphabet = motzkin ? "UDL" : "UD";
  const std::size_t len = static_cast<std::size_t>(2 * k);
  std::vector<std::string> out;
  std::string cur(len, 'U');
  std::vector<std::size_t> digit(len, 0);
  while (true) {
    for (std::size_t j = 0; j < len; ++j) cur[j] = alphabet[digit[j]];
    if (valid(cur, motzkin)) out.push_back(cur);
    std::size_t j = len;
    while (j > 0) {
      --j;
      if (++digit[j] < alphabet.size()) break;
      digit[j] = 0;
      if (j == 0) return out;
    }
    if (len == 0) return out;
  }
}

struct Stats {
  std::vector<long long> r, v, l;
  int rises = 0;
};

/// Recount of R, V, L from the string alone.
inline Stats stats(const std::string& s) {
  const int k = static_cast<int>(s.size() / 2);
  Stats st{std::vector<long long>(k), std::vector<long long>(k + 1), std::vector<long long>(k), 0};
  int h = 0;
  st.v[0] = 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == 'U') {
      st.r[h]++;
      st.rises++;
      h++;
    } else if (s[j] == 'D') {
      h--;
    } else if ((j + 1) % 2 == 0) {
      st.l[h]++;
    }
    st.v[h]++;
  }
  return st;
}

/// Polynomial in gamma as a dense coefficient vector (lowest power first).
using Poly = std::vector<long long>;

inline void add_to(Poly& p, std::size_t power, long long c) {
  if (p.size() <= power) p.resize(power + 1, 0);
  p[power] += c;
}

inline Poly trimmed(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// Naive pairwise double sum over (p1, p2) of sum_i X_i(p1) X_i(p2).
template <class Get>
long long pairwise_sum(const std::vector<std::string>& paths, Get get) {
  long long total = 0;
  for (const auto& a : paths) {
    const auto sa = get(stats(a));
    for (const auto& b : paths) {
      const auto sb = get(stats(b));
      for (std::size_t i = 0; i < sa.size(); ++i) total += sa[i] * sb[i];
    }
  }
  return total;
}

/// sum over AM_k^2 of gamma^{r1+r2} (sum R R + gamma sum L L), pairwise.
inline Poly pairwise_thm3(const std::vector<std::string>& paths) {
  Poly out;
  for (const auto& a : paths) {
    const auto sa = stats(a);
    for (const auto& b : paths) {
      const auto sb = stats(b);
      long long rr = 0, ll = 0;
      for (std::size_t i = 0; i < sa.r.size(); ++i) {
        rr += sa.r[i] * sb.r[i];
        ll += sa.l[i] * sb.l[i];
      }
      add_to(out, sa.rises + sb.rises, rr);
      add_to(out, sa.rises + sb.rises + 1, ll);
    }
  }
  return trimmed(out);
}

/// tr(A^k) as the sum over closed index sequences i_0, i_1, ..., i_k = i_0
/// of a_{i0 i1} a_{i1 i2} ... a_{i(k-1) i0}.
inline double index_walk_trace(const Eigen::MatrixXd& a, int k) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> idx(k, 0);
  double total = 0;
  while (true) {
    double term = 1;
    for (int j = 0; j < k; ++j) term *= a(idx[j], idx[(j + 1) % k]);
    total += term;
    int j = k - 1;
    while (j >= 0 && ++idx[j] == n) idx[j--] = 0;
    if (j < 0) break;
  }
  return total;
}

}  // namespace oracle
