#include "sbench/adaptive.hpp"

#include <cmath>

namespace sbench {

std::string to_string(AdaptiveOptimizer o) {
  switch (o) {
    case AdaptiveOptimizer::Adam: return "adam";
    case AdaptiveOptimizer::OptimisticAdam: return "optimistic-adam";
    case AdaptiveOptimizer::RmsProp: return "rmsprop";
    case AdaptiveOptimizer::OptimisticRmsProp: return "optimistic-rmsprop";
  }
  throw Error("unreachable optimizer");
}

AdaptiveOptimizer adaptive_optimizer_from_string(const std::string& s) {
  if (s == "adam") return AdaptiveOptimizer::Adam;
  if (s == "optimistic-adam") return AdaptiveOptimizer::OptimisticAdam;
  if (s == "rmsprop") return AdaptiveOptimizer::RmsProp;
  if (s == "optimistic-rmsprop") return AdaptiveOptimizer::OptimisticRmsProp;
  throw ConfigError("unknown optimizer '" + s + "'");
}

AdamState AdamState::init(const Vec& theta0) {
  AdamState s;
  s.theta = theta0;
  s.m = Vec::Zero(theta0.size());
  s.v = Vec::Zero(theta0.size());
  s.mp = Vec::Zero(theta0.size());
  s.vp = Vec::Zero(theta0.size());
  s.t = 0;
  return s;
}

namespace {

void validate(const AdamConfig& c) {
  if (!(c.beta1 >= 0) || !(c.beta1 < 1)) throw ConfigError("beta1 must be in [0, 1)");
  if (!(c.beta2 >= 0) || !(c.beta2 < 1)) throw ConfigError("beta2 must be in [0, 1)");
  if (!(c.eps > 0)) throw ConfigError("eps must be > 0");
  if (!(c.lr > 0) || !(c.lr2 > 0)) throw ConfigError("learning rates must be > 0");
}

Vec checked_grad(const GradFn& grad, const Vec& theta) {
  Vec g = grad(theta);
  if (g.size() != theta.size()) throw DimensionMismatch("gradient dimension mismatch");
  if (!all_finite(g)) throw NonFiniteGradient("gradient returned a non-finite value");
  return g;
}

Vec ema(const Vec& prev, const Vec& sample, double beta) {
  return beta * prev + (1 - beta) * sample;
}

Vec adam_direction(const Vec& m, const Vec& v, double beta1, double beta2, int t, double eps) {
  const Vec mhat = m / (1.0 - std::pow(beta1, t));
  const Vec vhat = v / (1.0 - std::pow(beta2, t));
  return (mhat.array() / (vhat.array().sqrt() + eps)).matrix();
}

}  // namespace

AdamState vanilla_adam_step(const AdamState& state, const GradFn& grad, const AdamConfig& config) {
  validate(config);
  const Vec g = checked_grad(grad, state.theta);
  AdamState next = state;
  next.t = state.t + 1;
  next.m = ema(state.m, g, config.beta1);
  next.v = ema(state.v, g.cwiseProduct(g), config.beta2);
  next.theta =
      state.theta - config.lr * adam_direction(next.m, next.v, config.beta1, config.beta2, next.t, config.eps);
  return next;
}

AdamState optimistic_adam_step(const AdamState& state, const GradFn& grad, const AdamConfig& config) {
  validate(config);
  const int t = state.t + 1;

  // Leading pass: moments (mp, vp) from the gradient at the committed point.
  const Vec g1 = checked_grad(grad, state.theta);
  const Vec mp = ema(state.mp, g1, config.beta1);
  const Vec vp = ema(state.vp, g1.cwiseProduct(g1), config.beta2);
  const Vec interim =
      state.theta - config.lr * adam_direction(mp, vp, config.beta1, config.beta2, t, config.eps);

  // Correcting pass: re-query at the interim point, then step FROM the
  // committed point. paper_literal drives the correcting second moment with
  // beta1 instead of beta2 (the recursion exactly as published).
  const Vec g2 = checked_grad(grad, interim);
  const Vec m = ema(state.m, g2, config.beta1);
  const double vbeta = config.paper_literal ? config.beta1 : config.beta2;
  const Vec v = ema(state.v, g2.cwiseProduct(g2), vbeta);
  const Vec theta =
      state.theta - config.lr2 * adam_direction(m, v, config.beta1, vbeta, t, config.eps);

  AdamState next;
  next.theta = theta;
  next.m = m;
  next.v = v;
  next.mp = mp;
  next.vp = vp;
  next.t = t;
  return next;
}

AdamState vanilla_rmsprop_step(const AdamState& state, const GradFn& grad, const AdamConfig& config) {
  validate(config);
  const Vec g = checked_grad(grad, state.theta);
  AdamState next = state;
  next.t = state.t + 1;
  next.v = ema(state.v, g.cwiseProduct(g), config.beta2);
  next.theta = state.theta - config.lr * (g.array() / (next.v.array().sqrt() + config.eps)).matrix();
  return next;
}

AdamState optimistic_rmsprop_step(const AdamState& state, const GradFn& grad, const AdamConfig& config) {
  validate(config);
  const Vec g1 = checked_grad(grad, state.theta);
  const Vec vp = ema(state.vp, g1.cwiseProduct(g1), config.beta2);
  const Vec interim =
      state.theta - config.lr * (g1.array() / (vp.array().sqrt() + config.eps)).matrix();

  const Vec g2 = checked_grad(grad, interim);
  const Vec v = ema(state.v, g2.cwiseProduct(g2), config.beta2);

  AdamState next = state;
  next.t = state.t + 1;
  next.vp = vp;
  next.v = v;
  next.theta = state.theta - config.lr2 * (g2.array() / (v.array().sqrt() + config.eps)).matrix();
  return next;
}

AdaptiveRunRecord run_adaptive(const GradFn& grad, const Vec& theta0, std::optional<Vec> solution,
                               AdaptiveOptimizer optimizer, const AdamConfig& config, int iterations,
                               int record_every) {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (record_every < 1) throw ConfigError("record_every must be >= 1");
  if (!all_finite(theta0)) throw NonFiniteInput("initial point must be finite");
  if (solution && solution->size() != theta0.size())
    throw DimensionMismatch("solution dimension mismatch");

  AdaptiveRunRecord record;
  record.optimizer = optimizer;
  record.iterations = iterations;
  record.record_every = record_every;

  AdamState state = AdamState::init(theta0);
  for (int n = 1; n <= iterations; ++n) {
    switch (optimizer) {
      case AdaptiveOptimizer::Adam:
        state = vanilla_adam_step(state, grad, config);
        break;
      case AdaptiveOptimizer::OptimisticAdam:
        state = optimistic_adam_step(state, grad, config);
        break;
      case AdaptiveOptimizer::RmsProp:
        state = vanilla_rmsprop_step(state, grad, config);
        break;
      case AdaptiveOptimizer::OptimisticRmsProp:
        state = optimistic_rmsprop_step(state, grad, config);
        break;
    }
    if ((n - 1) % record_every == 0 || n == iterations) {
      AdaptiveRow row;
      row.n = n;
      row.lr = config.lr;
      row.theta = state.theta;
      if (solution) row.distance_to_solution = (state.theta - *solution).norm();
      record.rows.push_back(std::move(row));
    }
    if (state.theta.norm() > 1e12) {
      record.diverged = true;
      break;
    }
  }
  record.final_theta = state.theta;
  return record;
}

}  // namespace sbench
