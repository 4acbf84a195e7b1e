#include "pathforge/moments.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "pathforge/gamma_poly.hpp"
#include "pathforge/parallel.hpp"

namespace pathforge {

std::string_view to_string(Ensemble e) { return e == Ensemble::Wigner ? "wigner" : "wishart"; }

Ensemble parse_ensemble(std::string_view text) {
  if (text == "wigner") return Ensemble::Wigner;
  if (text == "wishart") return Ensemble::Wishart;
  throw std::invalid_argument("unknown ensemble '" + std::string(text) + "' (expected wigner or wishart)");
}

double MomentEstimate::z_score() const {
  const double diff = std::abs(estimate - target);
  if (standard_error == 0) return diff == 0 ? 0 : INFINITY;
  return diff / standard_error;
}

nlohmann::json to_json(const MomentEstimate& e) {
  nlohmann::json j{{"ensemble", std::string(to_string(e.ensemble))},
                   {"k", e.k},
                   {"n", e.n},
                   {"m", nullptr},
                   {"trials", e.trials},
                   {"seed", e.seed},
                   {"estimate", e.estimate},
                   {"stderr", e.standard_error},
                   {"target", e.target}};
  if (e.ensemble == Ensemble::Wishart) j["m"] = e.m;
  return j;
}

double trace_power(const Eigen::MatrixXd& a, int k) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("trace_power: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " is not square)");
  }
  if (k < 0) throw std::invalid_argument("trace_power: k must be nonnegative");
  if (k == 0) return static_cast<double>(a.rows());
  if (k == 1) return a.trace();
  // tr(X Y) = sum_ij X_ij Y_ji with X = A^h, Y = A^(k-h).
  const int h = k / 2;
  Eigen::MatrixXd lower = a;
  for (int j = 1; j < h; ++j) lower = lower * a;
  if (k % 2 == 0) return lower.cwiseProduct(lower.transpose()).sum();
  const Eigen::MatrixXd upper = lower * a;
  return lower.cwiseProduct(upper.transpose()).sum();
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 over (seed, trial)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

void check_common(int k, int n, int trials) {
  if (k < 1) throw std::invalid_argument("moment order k must be at least 1");
  if (n < 2) throw std::invalid_argument("matrix size n must be at least 2");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
}

template <class Sample>
void run_trials(MomentEstimate& e, Sample&& sample) {
  e.per_trial.assign(static_cast<std::size_t>(e.trials), 0.0);
  parallel_for(e.per_trial.size(), thread_count(), [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(e.seed, t));
    e.per_trial[t] = sample(rng);
  });
  double sum = 0;
  for (double v : e.per_trial) sum += v;
  e.estimate = sum / e.trials;
  if (e.trials > 1) {
    double ss = 0;
    for (double v : e.per_trial) ss += (v - e.estimate) * (v - e.estimate);
    e.standard_error = std::sqrt(ss / (e.trials - 1) / e.trials);
  }
  e.target = e.target_exact.convert_to<double>();
}

}  // namespace

MomentEstimate wigner_moment(int k, int n, int trials, std::uint64_t seed) {
  check_common(k, n, trials);
  MomentEstimate e;
  e.ensemble = Ensemble::Wigner;
  e.k = k;
  e.n = n;
  e.trials = trials;
  e.seed = seed;
  e.target_exact = k % 2 == 0 ? Rational(catalan(k / 2)) : Rational(0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  run_trials(e, [&](std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd a(n, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i <= j; ++i) {
        const double x = normal(rng) * scale;
        a(i, j) = x;
        a(j, i) = x;
      }
    }
    return trace_power(a, k) / n;
  });
  return e;
}

MomentEstimate wishart_moment(int k, int n, int m, int trials, std::uint64_t seed) {
  check_common(k, n, trials);
  if (m < 2) throw std::invalid_argument("row count m must be at least 2");
  MomentEstimate e;
  e.ensemble = Ensemble::Wishart;
  e.k = k;
  e.n = n;
  e.m = m;
  e.trials = trials;
  e.seed = seed;
  e.target_exact = narayana_poly(k).evaluate(Rational(m, n));
  run_trials(e, [&](std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd g(m, n);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) g(i, j) = normal(rng);
    }
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(m, m);
    w.selfadjointView<Eigen::Lower>().rankUpdate(g, 1.0 / n);
    w.triangularView<Eigen::StrictlyUpper>() = w.transpose();
    return trace_power(w, k) / m;
  });
  return e;
}

}  // namespace pathforge
