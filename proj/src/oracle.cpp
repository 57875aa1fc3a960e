#include "sbench/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace sbench {

OracleConfig OracleConfig::exact() { return OracleConfig{Mode::Exact, 0.0, 1}; }

OracleConfig OracleConfig::gaussian(double sigma, std::uint64_t seed) {
  if (!(sigma >= 0) || !std::isfinite(sigma)) throw ConfigError("oracle sigma must be finite and >= 0");
  return OracleConfig{Mode::Gaussian, sigma, seed};
}

OracleState::OracleState(const Problem& problem, OracleConfig config)
    : problem_(&problem), config_(config), rng_(config.seed) {
  if (config_.mode == OracleConfig::Mode::Exact && config_.sigma != 0.0)
    throw ConfigError("exact oracle requires sigma = 0");
  if (config_.sigma < 0 || !std::isfinite(config_.sigma))
    throw ConfigError("oracle sigma must be finite and >= 0");
}

Vec OracleState::query(const Vec& x) {
  if (!all_finite(x)) throw NonFiniteInput("oracle queried at a non-finite point");
  if (x.size() != problem_->dim()) throw DimensionMismatch("oracle query dimension mismatch");
  ++count_;
  Vec g = problem_->gradient_field(x);
  if (!all_finite(g)) throw NonFiniteGradient("gradient field returned a non-finite value");
  if (config_.mode == OracleConfig::Mode::Gaussian && config_.sigma > 0) {
    for (Eigen::Index i = 0; i < g.size(); ++i) g[i] += config_.sigma * normal_(rng_);
  }
  return g;
}

namespace {

// Cartesian product of per-block extreme points, capped to keep box corners
// from exploding combinatorially.
std::vector<Vec> extreme_product(const ProductSet& set, std::size_t cap) {
  std::vector<Vec> acc{Vec::Zero(set.total_dim())};
  for (std::size_t b = 0; b < set.blocks.size(); ++b) {
    const auto [offset, length] = set.span(b);
    const auto pts = set.blocks[b].extreme_points();
    std::vector<Vec> next;
    next.reserve(std::min(acc.size() * pts.size(), cap));
    for (const Vec& base : acc) {
      for (const Vec& e : pts) {
        Vec v = base;
        v.segment(offset, length) = e;
        next.push_back(std::move(v));
        if (next.size() >= cap) break;
      }
      if (next.size() >= cap) break;
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

OracleBoundReport oracle_bound_report(const Problem& problem, const OracleConfig& config,
                                      int random_samples) {
  if (random_samples < 0) throw ConfigError("bound report needs a nonnegative sample count");
  std::vector<Vec> pts = extreme_product(problem.set, 4096);
  if (random_samples > 0) {
    auto extra = sample_set(problem.set, SamplingPlan::random(random_samples, config.seed));
    pts.insert(pts.end(), extra.begin(), extra.end());
  }
  // Euclidean norms throughout: exact for L2 pairings and an upper bound for
  // the L-infinity dual norms that entropic blocks carry.
  double sup = 0;
  for (const Vec& x : pts) {
    Vec g = problem.gradient_field(x);
    if (!all_finite(g)) throw NonFiniteGradient("gradient field returned a non-finite value");
    sup = std::max(sup, g.norm());
  }
  OracleBoundReport report;
  report.sup_grad_dual_norm = sup;
  report.second_moment = sup * sup + problem.dim() * config.sigma * config.sigma;
  report.sample_size = pts.size();
  return report;
}

}  // namespace sbench
