#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sbench/core.hpp"

namespace sbench {

// Unconstrained min-max optimizers driven by the joint field
// g(theta) = (d f / d theta1, -d f / d theta2).
enum class AdaptiveOptimizer { Adam, OptimisticAdam, RmsProp, OptimisticRmsProp };

std::string to_string(AdaptiveOptimizer o);
AdaptiveOptimizer adaptive_optimizer_from_string(const std::string& s);

struct AdamConfig {
  double lr = 1e-4;    // eta, the leading step
  double lr2 = 1e-4;   // eta', the correcting step
  double beta1 = 0.0;
  double beta2 = 0.9;
  double eps = 1e-8;
  // Optimistic variant only: update the second leading moment with beta1 and
  // bias-correct it by 1 - beta1^t, reproducing the published recursion
  // verbatim instead of the symmetric beta2 form.
  bool paper_literal = false;
};

struct AdamState {
  Vec theta;
  Vec m, v;    // moments behind the committed iterate
  Vec mp, vp;  // moments behind the leading (interim) iterate
  int t = 0;   // completed steps

  static AdamState init(const Vec& theta0);
};

using GradFn = std::function<Vec(const Vec&)>;

// Two-query optimistic step: lead from theta_{t-1} with (mp, vp), re-query
// the field at the interim point into (m, v), then commit from theta_{t-1}.
// Throws NonFiniteGradient without touching the caller's state.
AdamState optimistic_adam_step(const AdamState& state, const GradFn& grad, const AdamConfig& config);

AdamState vanilla_adam_step(const AdamState& state, const GradFn& grad, const AdamConfig& config);

// RMSprop keeps only the second moment and applies no bias correction.
AdamState vanilla_rmsprop_step(const AdamState& state, const GradFn& grad, const AdamConfig& config);
AdamState optimistic_rmsprop_step(const AdamState& state, const GradFn& grad, const AdamConfig& config);

struct AdaptiveRow {
  int n = 0;
  double lr = 0;
  Vec theta;
  std::optional<double> distance_to_solution;
};

struct AdaptiveRunRecord {
  AdaptiveOptimizer optimizer = AdaptiveOptimizer::Adam;
  std::vector<AdaptiveRow> rows;
  Vec final_theta;
  bool diverged = false;  // aborted once ||theta|| exceeded 1e12
  int iterations = 0;
  int record_every = 1;
};

AdaptiveRunRecord run_adaptive(const GradFn& grad, const Vec& theta0,
                               std::optional<Vec> solution, AdaptiveOptimizer optimizer,
                               const AdamConfig& config, int iterations, int record_every = 1);

}  // namespace sbench
