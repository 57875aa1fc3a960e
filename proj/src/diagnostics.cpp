#include "sbench/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace sbench {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

void require_per_step(const RunRecord& record) {
  if (record.record_every != 1)
    throw ConfigError("per-step checks need a record with record_every = 1");
  if (record.rows.size() < 1) throw ConfigError("record has no rows");
}

std::size_t solution_count(const RunRecord& record) {
  if (record.rows.empty() || record.rows.front().bregman_to_solutions.empty())
    throw MissingSolution("record carries no Bregman series (no listed solutions)");
  return record.rows.front().bregman_to_solutions.size();
}

// Bregman series for solution s over X_1..X_N, X_{N+1}.
std::vector<double> bregman_series(const RunRecord& record, std::size_t s) {
  std::vector<double> d;
  d.reserve(record.rows.size() + 1);
  for (const auto& row : record.rows) d.push_back(row.bregman_to_solutions[s]);
  d.push_back(record.final_bregman[s]);
  return d;
}

}  // namespace

ClaimEntry check_monotone_descent(const RunRecord& record, double tol) {
  require_per_step(record);
  const std::size_t sols = solution_count(record);
  ClaimEntry best;
  best.id = "MonotoneDescent";
  best.pass = false;
  best.margin = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < sols; ++s) {
    const auto d = bregman_series(record, s);
    double worst = -std::numeric_limits<double>::infinity();
    int worst_n = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      const double inc = d[i + 1] - d[i];
      if (inc > worst) {
        worst = inc;
        worst_n = record.rows[i].n;
      }
    }
    const double margin = tol - worst;
    if (margin > best.margin) {
      best.margin = margin;
      best.pass = worst <= tol;
      best.worst_index = worst_n;
      best.detail = "max single-step increase " + fmt(worst) + " at n=" + std::to_string(worst_n) +
                    " (tol " + fmt(tol) + ")";
    }
  }
  return best;
}

ClaimEntry check_null_nondecrease(const RunRecord& record, const Problem& problem,
                                  const Geometry& geometry, double tol_mono, double tol_identity) {
  require_per_step(record);
  const std::size_t sols = solution_count(record);
  (void)problem;
  ClaimEntry entry;
  entry.id = "NullNondecrease";
  double worst_drop = -std::numeric_limits<double>::infinity();  // max of D_n - D_{n+1}
  double worst_identity = 0;                                     // max |Delta - D(X_n, X_{n+1})|
  int drop_n = 0, identity_n = 0;
  for (std::size_t s = 0; s < sols; ++s) {
    const auto d = bregman_series(record, s);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      const Vec& xn = record.rows[i].x;
      const Vec& xn1 = i + 1 < record.rows.size() ? record.rows[i + 1].x : record.final_point;
      const double delta = d[i + 1] - d[i];
      if (-delta > worst_drop) {
        worst_drop = -delta;
        drop_n = record.rows[i].n;
      }
      const double identity_err = std::abs(delta - geometry.bregman(xn, xn1));
      if (identity_err > worst_identity) {
        worst_identity = identity_err;
        identity_n = record.rows[i].n;
      }
    }
  }
  entry.pass = worst_drop <= tol_mono && worst_identity <= tol_identity;
  entry.margin = std::min(tol_mono - worst_drop, tol_identity - worst_identity);
  entry.worst_index = worst_drop - tol_mono > worst_identity - tol_identity ? drop_n : identity_n;
  entry.detail = "max single-step decrease " + fmt(worst_drop) + ", max identity error " +
                 fmt(worst_identity);
  return entry;
}

ClaimEntry check_descent_inequality(const RunRecord& record, const Problem& problem,
                                    const Geometry& geometry, double alpha, double L, double tol) {
  require_per_step(record);
  const std::size_t sols = solution_count(record);
  (void)problem;
  for (const auto& row : record.rows)
    if (!row.half) throw MissingHalfStep("descent inequality needs recorded half steps (omd records)");
  ClaimEntry best;
  best.id = "PerStepDescentInequality";
  best.pass = false;
  best.margin = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < sols; ++s) {
    const auto d = bregman_series(record, s);
    double worst = -std::numeric_limits<double>::infinity();
    int worst_n = 0;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      const auto& row = record.rows[i];
      const double coeff = 0.5 * (alpha - row.gamma * row.gamma * L * L / alpha);
      const double step_norm = geometry.primal_norm(*row.half - row.x);
      const double violation = d[i + 1] - (d[i] - coeff * step_norm * step_norm);
      if (violation > worst) {
        worst = violation;
        worst_n = row.n;
      }
    }
    const double margin = tol - worst;
    if (margin > best.margin) {
      best.margin = margin;
      best.pass = worst <= tol;
      best.worst_index = worst_n;
      best.detail = "max inequality violation " + fmt(worst) + " at n=" + std::to_string(worst_n);
    }
  }
  return best;
}

ClaimEntry check_bounded_orbit(const RunRecord& record, const StepSchedule& schedule,
                               double second_moment_bound, double alpha) {
  if (record.rows.empty()) throw ConfigError("record has no rows");
  const std::size_t sols = solution_count(record);
  if (!(alpha > 0)) throw ConfigError("bounded orbit check needs alpha > 0");
  const auto sum_sq = schedule.sum_squares_analytic();
  if (!sum_sq)
    throw Uncertifiable("schedule has no closed-form sum of squared steps; bound unavailable");
  ClaimEntry best;
  best.id = "BoundedOrbit";
  best.pass = false;
  best.margin = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < sols; ++s) {
    const auto d = bregman_series(record, s);
    const double bound = d.front() + second_moment_bound / (2 * alpha) * *sum_sq;
    double sup = -std::numeric_limits<double>::infinity();
    int sup_n = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] > sup) {
        sup = d[i];
        sup_n = i < record.rows.size() ? record.rows[i].n : record.iterations + 1;
      }
    }
    const double margin = bound + 1e-9 - sup;
    if (margin > best.margin) {
      best.margin = margin;
      best.pass = sup <= bound + 1e-9;
      best.worst_index = sup_n;
      best.detail = "sup D " + fmt(sup) + " vs bound " + fmt(bound);
    }
  }
  return best;
}

ClaimEntry check_ergodic_convergence(const RunRecord& record, const Problem& problem,
                                     const Geometry& geometry, double threshold) {
  if (record.rows.empty()) throw ConfigError("record has no rows");
  if (problem.solutions.empty()) throw MissingSolution("ergodic check needs listed solutions");
  ClaimEntry entry;
  entry.id = "ErgodicConvergence";
  double dist = std::numeric_limits<double>::infinity();
  for (const Vec& sol : problem.solutions)
    dist = std::min(dist, geometry.primal_norm(record.final_ergodic - sol));
  entry.pass = dist <= threshold;
  entry.margin = threshold - dist;
  entry.worst_index = record.iterations;
  entry.detail = "ergodic distance " + fmt(dist) + " vs threshold " + fmt(threshold);
  return entry;
}

EnsembleStats ensemble_stats(const std::vector<RunRecord>& records, double threshold) {
  if (records.empty()) throw EmptyEnsemble("ensemble stats need at least one record");
  std::vector<double> finals;
  finals.reserve(records.size());
  for (const auto& r : records) {
    if (r.final_bregman.empty()) throw MissingSolution("ensemble record carries no Bregman values");
    finals.push_back(*std::min_element(r.final_bregman.begin(), r.final_bregman.end()));
  }
  EnsembleStats stats;
  stats.runs = static_cast<int>(finals.size());
  stats.converged = static_cast<int>(std::count_if(finals.begin(), finals.end(),
                                                   [&](double d) { return d < threshold; }));
  const double n = stats.runs;
  const double phat = stats.converged / n;
  stats.fraction = phat;
  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double denom = 1 + z * z / n;
  const double center = (phat + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom;
  stats.wilson_low = center - half;
  stats.wilson_high = center + half;

  std::sort(finals.begin(), finals.end());
  const std::size_t mid = finals.size() / 2;
  stats.median_final_bregman =
      finals.size() % 2 ? finals[mid] : 0.5 * (finals[mid - 1] + finals[mid]);
  stats.max_final_bregman = finals.back();
  return stats;
}

ClaimEntry check_ensemble_fraction(const std::vector<RunRecord>& records, double threshold,
                                   double required_fraction) {
  const EnsembleStats stats = ensemble_stats(records, threshold);
  ClaimEntry entry;
  entry.id = "EnsembleConvergenceFraction";
  entry.pass = stats.fraction >= required_fraction;
  entry.margin = stats.fraction - required_fraction;
  entry.worst_index = stats.runs - stats.converged;
  entry.detail = std::to_string(stats.converged) + "/" + std::to_string(stats.runs) +
                 " converged; fraction " + fmt(stats.fraction) + ", Wilson 95% [" +
                 fmt(stats.wilson_low) + ", " + fmt(stats.wilson_high) + "]";
  return entry;
}

}  // namespace sbench
