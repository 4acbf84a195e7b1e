#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathforge/gamma_poly.hpp"
#include "pathforge/path.hpp"

namespace pathforge {

/// Altitude statistics of a path of length 2k. The vectors have fixed
/// lengths k, k+1 and k regardless of trailing zeros.
struct AltitudeStats {
  std::vector<std::int64_t> rises;        // R_i: rises from altitude i to i+1
  std::vector<std::int64_t> vertices;     // V_i: vertices at altitude i
  std::vector<std::int64_t> even_levels;  // L_i: level steps at altitude i on even steps
  std::int64_t total_rises = 0;

  friend bool operator==(const AltitudeStats&, const AltitudeStats&) = default;
};

AltitudeStats compute_stats(const Path& path);

struct LevelParityEntry {
  int altitude = 0;
  std::int64_t total = 0;         // level steps at this altitude
  std::int64_t even_indexed = 0;  // of which on even-numbered steps
};

struct LevelParityReport {
  std::vector<LevelParityEntry> entries;  // one per altitude 0..k-1
  std::vector<int> violations;            // altitudes where the parity rule fails
  bool ok() const { return violations.empty(); }
};

/// Checks that, at each altitude, the level steps are even in number and
/// exactly half of them sit on even-numbered steps. Requires an alternating
/// Motzkin path; a non-empty violation list means a bug upstream.
LevelParityReport check_level_parity(const Path& path);

enum class Weighting { Uniform, RiseWeighted };

/// Expectations of R, V and L over all paths of (kind, k), kept as exact
/// numerators over a common normalizer. Under RiseWeighted each path has
/// weight gamma^(rises), so the normalizer is N_k(gamma) for alternating
/// Motzkin paths; under Uniform everything is constant and the normalizer
/// is the path count.
struct ExpectationVectors {
  std::vector<GammaPoly> rises;
  std::vector<GammaPoly> vertices;
  std::vector<GammaPoly> even_levels;
  GammaPoly normalizer;

  struct Values {
    std::vector<Rational> rises, vertices, even_levels;
  };
  /// Evaluates at a fixed gamma (ignored for constant numerators).
  Values at(const Rational& gamma) const;
};

ExpectationVectors expectation_vectors(int k, PathKind kind, Weighting weighting);

/// CSV columns: kind,k,path,R,V,L,r. Vector cells are ';'-joined.
std::string stats_csv_header();
std::string stats_csv_row(const Path& path, const AltitudeStats& stats);

}  // namespace pathforge
