#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "sbench/core.hpp"
#include "sbench/geometry.hpp"
#include "sbench/problems.hpp"

namespace sbench {

struct OracleConfig {
  enum class Mode { Exact, Gaussian };
  Mode mode = Mode::Exact;
  double sigma = 0.0;  // Gaussian: per-coordinate noise std dev
  std::uint64_t seed = 1;

  static OracleConfig exact();
  static OracleConfig gaussian(double sigma, std::uint64_t seed);
};

// Stateful first-order oracle: returns g(x) plus (in Gaussian mode) an
// i.i.d. N(0, sigma^2 I) perturbation, and counts every query.
class OracleState {
 public:
  OracleState(const Problem& problem, OracleConfig config);

  Vec query(const Vec& x);
  std::uint64_t query_count() const { return count_; }
  const OracleConfig& config() const { return config_; }

 private:
  const Problem* problem_;
  OracleConfig config_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uint64_t count_ = 0;
};

struct OracleBoundReport {
  double sup_grad_dual_norm = 0;  // max ||g||_* over the probe sample
  double second_moment = 0;       // sup ||g||_*^2 + dim * sigma^2
  std::size_t sample_size = 0;
};

// Bounds E||g_hat||_*^2 by sampling extreme points of the feasible set plus
// seeded random interior points. Deterministic for a fixed config.
OracleBoundReport oracle_bound_report(const Problem& problem,
                                      const OracleConfig& config,
                                      int random_samples = 2048);

}  // namespace sbench
