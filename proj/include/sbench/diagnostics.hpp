#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbench/core.hpp"
#include "sbench/geometry.hpp"
#include "sbench/schedule.hpp"
#include "sbench/solver.hpp"

namespace sbench {

// Conformance checks for the convergence guarantees: each check replays a
// finished trajectory against the inequality the matching theorem asserts.
// Per-step checks require record_every == 1.
struct ClaimEntry {
  std::string id;
  bool pass = false;
  double margin = 0;    // worst slack; negative = violated by |margin|
  int worst_index = 0;  // iteration n where the worst slack occurred
  std::string detail;
};

// D(x*, X_{n+1}) <= D(x*, X_n) + tol for some known solution throughout.
ClaimEntry check_monotone_descent(const RunRecord& record, double tol = 1e-9);

// Null-coherent problems: the Bregman distance never shrinks (tol_mono) and
// D_{n+1} - D_n matches D(X_n, X_{n+1}) to tol_identity at every step.
ClaimEntry check_null_nondecrease(const RunRecord& record, const Problem& problem,
                                  const Geometry& geometry, double tol_mono = 1e-12,
                                  double tol_identity = 1e-9);

// OMD energy inequality per step:
// D(x*, X_{n+1}) <= D(x*, X_n) - (alpha - gamma^2 L^2 / alpha)/2 * ||X_{n+1/2} - X_n||^2.
// Requires recorded half steps (MissingHalfStep otherwise).
ClaimEntry check_descent_inequality(const RunRecord& record, const Problem& problem,
                                    const Geometry& geometry, double alpha, double L,
                                    double tol = 1e-9);

// sup_n D(x*, X_n) <= D(x*, X_1) + M2 / (2 alpha) * sum gamma^2, with the
// sum evaluated in closed form; Uncertifiable when no closed form exists.
ClaimEntry check_bounded_orbit(const RunRecord& record, const StepSchedule& schedule,
                               double second_moment_bound, double alpha);

// ||X_bar_N - x*|| below the threshold for some known solution.
ClaimEntry check_ergodic_convergence(const RunRecord& record, const Problem& problem,
                                     const Geometry& geometry, double threshold);

struct EnsembleStats {
  int runs = 0;
  int converged = 0;
  double fraction = 0;
  double wilson_low = 0, wilson_high = 0;  // 95% score interval
  double median_final_bregman = 0;
  double max_final_bregman = 0;
};

// Fraction of runs whose final Bregman distance (min over solutions) is
// below the threshold, with a Wilson 95% interval on that fraction.
EnsembleStats ensemble_stats(const std::vector<RunRecord>& records, double threshold);

ClaimEntry check_ensemble_fraction(const std::vector<RunRecord>& records, double threshold,
                                   double required_fraction);

}  // namespace sbench
