#include "pathforge/stats.hpp"

#include <sstream>
#include <stdexcept>

#include "pathforge/enumerate.hpp"

namespace pathforge {

AltitudeStats compute_stats(const Path& path) {
  const auto k = static_cast<std::size_t>(path.half_length());
  AltitudeStats s;
  s.rises.assign(k, 0);
  s.vertices.assign(k + 1, 0);
  s.even_levels.assign(k, 0);
  int altitude = 0;
  s.vertices[0] += 1;
  for (std::size_t j = 0; j < path.length(); ++j) {
    switch (path[j]) {
      case Step::Rise:
        s.rises[altitude] += 1;
        s.total_rises += 1;
        ++altitude;
        break;
      case Step::Fall:
        --altitude;
        break;
      case Step::Level:
        if (is_even_step(j)) s.even_levels[altitude] += 1;
        break;
    }
    s.vertices[altitude] += 1;
  }
  return s;
}

LevelParityReport check_level_parity(const Path& path) {
  if (path.kind() != PathKind::AltMotzkin) {
    throw std::invalid_argument("level parity check requires an alternating Motzkin path");
  }
  const auto k = static_cast<std::size_t>(path.half_length());
  LevelParityReport report;
  report.entries.resize(k);
  for (std::size_t i = 0; i < k; ++i) report.entries[i].altitude = static_cast<int>(i);
  int altitude = 0;
  for (std::size_t j = 0; j < path.length(); ++j) {
    if (path[j] == Step::Level) {
      auto& e = report.entries.at(static_cast<std::size_t>(altitude));
      e.total += 1;
      if (is_even_step(j)) e.even_indexed += 1;
    }
    altitude += delta(path[j]);
  }
  for (const auto& e : report.entries) {
    if (e.total % 2 != 0 || 2 * e.even_indexed != e.total) report.violations.push_back(e.altitude);
  }
  return report;
}

ExpectationVectors::Values ExpectationVectors::at(const Rational& gamma) const {
  const Rational norm = normalizer.evaluate(gamma);
  if (norm == 0) throw std::domain_error("expectation normalizer vanishes at this gamma");
  auto eval = [&](const std::vector<GammaPoly>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.evaluate(gamma) / norm);
    return out;
  };
  return Values{eval(rises), eval(vertices), eval(even_levels)};
}

ExpectationVectors expectation_vectors(int k, PathKind kind, Weighting weighting) {
  if (k < 1) throw std::invalid_argument("expectation vectors require k >= 1");
  const auto n = static_cast<std::size_t>(k);
  // Counts indexed [altitude][weight power].
  using Table = std::vector<std::vector<BigInt>>;
  const std::size_t powers = weighting == Weighting::RiseWeighted ? n + 1 : 1;
  Table r(n, std::vector<BigInt>(powers)), v(n + 1, std::vector<BigInt>(powers)), l(n, std::vector<BigInt>(powers));
  std::vector<BigInt> norm(powers);
  for_each_path(kind, k, [&](const Path& p) {
    const auto s = compute_stats(p);
    const std::size_t w = weighting == Weighting::RiseWeighted ? static_cast<std::size_t>(s.total_rises) : 0;
    norm[w] += 1;
    for (std::size_t i = 0; i < n; ++i) {
      r[i][w] += s.rises[i];
      l[i][w] += s.even_levels[i];
    }
    for (std::size_t i = 0; i <= n; ++i) v[i][w] += s.vertices[i];
  });
  auto to_polys = [](const Table& t) {
    std::vector<GammaPoly> out;
    out.reserve(t.size());
    for (const auto& row : t) out.emplace_back(row);
    return out;
  };
  return ExpectationVectors{to_polys(r), to_polys(v), to_polys(l), GammaPoly(norm)};
}

std::string stats_csv_header() { return "kind,k,path,R,V,L,r"; }

std::string stats_csv_row(const Path& path, const AltitudeStats& stats) {
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ';';
      out += std::to_string(v[i]);
    }
    return out;
  };
  std::ostringstream os;
  os << to_string(path.kind()) << ',' << path.half_length() << ',' << path.render() << ',' << join(stats.rises) << ','
     << join(stats.vertices) << ',' << join(stats.even_levels) << ',' << stats.total_rises;
  return os.str();
}

}  // namespace pathforge
