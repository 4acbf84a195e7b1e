#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "pathforge/numeric.hpp"

namespace pathforge {

enum class Ensemble { Wigner, Wishart };

std::string_view to_string(Ensemble e);
Ensemble parse_ensemble(std::string_view text);

/// Monte Carlo estimate of a limiting eigenvalue moment. The standard error
/// is the sample standard deviation of the per-trial values over sqrt(trials)
/// (zero for a single trial).
struct MomentEstimate {
  Ensemble ensemble = Ensemble::Wigner;
  int k = 0;
  int n = 0;
  int m = 0;  // rows of G for Wishart; 0 for Wigner
  int trials = 0;
  std::uint64_t seed = 0;
  double estimate = 0;
  double standard_error = 0;
  Rational target_exact;
  double target = 0;
  std::vector<double> per_trial;

  /// |estimate - target| in units of the standard error.
  double z_score() const;
};

nlohmann::json to_json(const MomentEstimate& e);

/// Trace of the k-th power of a square matrix, from the two half powers.
/// Throws std::invalid_argument for a non-square matrix or k < 0.
double trace_power(const Eigen::MatrixXd& a, int k);

/// Symmetric n x n matrices with independent standard Gaussian entries on and
/// above the diagonal, scaled by 1/sqrt(n); averages (1/n) tr(A^k). The
/// target is C_{k/2} for even k and 0 for odd k.
MomentEstimate wigner_moment(int k, int n, int trials, std::uint64_t seed);

/// G is m x n standard Gaussian and W = G G^T / n; averages (1/m) tr(W^k).
/// The target is N_k(m/n).
MomentEstimate wishart_moment(int k, int n, int m, int trials, std::uint64_t seed);

/// Seed of the generator for one trial; depends only on (seed, trial).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace pathforge
