#include <doctest.h>

#include <cmath>

#include "sbench/diagnostics.hpp"

using namespace sbench;

namespace {

Vec point2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

// Record with a prescribed Bregman series for one solution; geometry-free
// checks only read the series and the row indices.
RunRecord synthetic_series(const std::vector<double>& d_rows, double d_final) {
  RunRecord r;
  r.problem_label = "synthetic";
  r.record_every = 1;
  r.iterations = static_cast<int>(d_rows.size());
  for (std::size_t i = 0; i < d_rows.size(); ++i) {
    IterationRow row;
    row.n = static_cast<int>(i) + 1;
    row.gamma = 0.1;
    row.x = point2(0.5, 0.5);
    row.ergodic = row.x;
    row.bregman_to_solutions = {d_rows[i]};
    r.rows.push_back(std::move(row));
  }
  r.final_point = point2(0.5, 0.5);
  r.final_ergodic = r.final_point;
  r.final_bregman = {d_final};
  return r;
}

RunRecord outward_md_run(int iterations, int record_every = 1) {
  RunConfig cfg;
  cfg.problem = builtin_matching_pennies();
  cfg.schedule = StepSchedule::power(1.0, 1.0);
  cfg.iterations = iterations;
  cfg.initial = point2(0.9, 0.5);
  cfg.record_every = record_every;
  return run(cfg, Method::MirrorDescent);
}

RunRecord contracting_omd_run(int iterations, double gamma = 0.5) {
  RunConfig cfg;
  cfg.problem = builtin_matching_pennies();
  cfg.schedule = StepSchedule::constant(gamma);
  cfg.iterations = iterations;
  cfg.initial = point2(0.9, 0.5);
  return run(cfg, Method::OptimisticMirrorDescent);
}

}  // namespace

TEST_CASE("monotone descent passes on the contracting optimistic run") {
  const auto rec = contracting_omd_run(200);
  const auto entry = check_monotone_descent(rec);
  CHECK(entry.id == "MonotoneDescent");
  CHECK(entry.pass);
  CHECK(entry.margin > 1e-9);  // strict decrease every step
}

TEST_CASE("monotone descent flags the outward spiral with its first clip") {
  // gamma_1 = 1 drives (0.9, 0.5) to (0.9, 0.9): D jumps 0.08 -> 0.16.
  const auto rec = outward_md_run(10000);
  const auto entry = check_monotone_descent(rec);
  CHECK_FALSE(entry.pass);
  CHECK(entry.worst_index == 1);
  CHECK(entry.margin == doctest::Approx(1e-9 - 0.08).epsilon(1e-12));
}

TEST_CASE("monotone descent needs only one good solution") {
  RunRecord rec = synthetic_series({0.1, 0.2}, 0.3);
  for (auto& row : rec.rows) row.bregman_to_solutions.push_back(0.5);
  rec.final_bregman.push_back(0.4);  // second solution series decreases
  const auto entry = check_monotone_descent(rec);
  CHECK(entry.pass);  // series two: 0.5, 0.5, 0.4

  const auto flat = check_monotone_descent(synthetic_series({0.05, 0.05}, 0.05));
  CHECK(flat.pass);
  CHECK(flat.margin == doctest::Approx(1e-9).epsilon(1e-12));

  const auto rising = check_monotone_descent(synthetic_series({0.1, 0.2}, 0.3));
  CHECK_FALSE(rising.pass);
  CHECK(rising.worst_index == 1);
}

TEST_CASE("per-step checks refuse thinned or empty records") {
  const auto thinned = outward_md_run(100, 10);
  CHECK_THROWS_AS(check_monotone_descent(thinned), ConfigError);
  RunRecord empty;
  empty.record_every = 1;
  CHECK_THROWS_AS(check_monotone_descent(empty), ConfigError);
  RunRecord no_solutions = synthetic_series({0.1}, 0.1);
  for (auto& row : no_solutions.rows) row.bregman_to_solutions.clear();
  CHECK_THROWS_AS(check_monotone_descent(no_solutions), MissingSolution);
}

TEST_CASE("distance nondecrease holds for interior vanishing-step runs") {
  RunConfig cfg;
  cfg.problem = builtin_matching_pennies();
  cfg.schedule = StepSchedule::power(0.3, 1.0);
  cfg.iterations = 300;
  cfg.initial = point2(0.9, 0.5);
  const auto rec = run(cfg, Method::MirrorDescent);
  const Geometry geom = cfg.problem.default_geometry();
  const auto entry = check_null_nondecrease(rec, cfg.problem, geom);
  CHECK(entry.id == "NullNondecrease");
  CHECK(entry.pass);
  CHECK(entry.margin >= 0.0);
}

TEST_CASE("distance nondecrease fails once the box clips the orbit") {
  const auto rec = outward_md_run(10000);
  const Problem p = builtin_matching_pennies();
  const Geometry geom = p.default_geometry();
  const auto entry = check_null_nondecrease(rec, p, geom);
  CHECK_FALSE(entry.pass);
  // Frozen worst violations of the clipped run.
  CHECK(entry.detail.find("max single-step decrease 1.944444e-02") != std::string::npos);
  CHECK(entry.detail.find("max identity error 4.000000e-02") != std::string::npos);
  CHECK(entry.margin == doctest::Approx(1e-9 - 0.04).epsilon(1e-9));
}

TEST_CASE("per-step descent inequality certifies the optimistic run") {
  const auto rec = contracting_omd_run(500);
  const Problem p = builtin_matching_pennies();
  const Geometry geom = p.default_geometry();
  const auto entry = check_descent_inequality(rec, p, geom, 1.0, *p.lipschitz_g);
  CHECK(entry.id == "PerStepDescentInequality");
  CHECK(entry.pass);
  CHECK(entry.margin == doctest::Approx(1e-9).epsilon(1e-6));  // violations at rounding scale

  // Near the window edge the coefficient collapses but the bound still holds.
  const auto edge = contracting_omd_run(200, 0.99);
  const auto edge_entry = check_descent_inequality(edge, p, geom, 1.0, *p.lipschitz_g);
  CHECK(edge_entry.pass);
}

TEST_CASE("per-step descent inequality rejects an understated Lipschitz constant") {
  const auto rec = contracting_omd_run(100);
  const Problem p = builtin_matching_pennies();
  const Geometry geom = p.default_geometry();
  // L = 0 claims a half-alpha guaranteed drop per step; the rotation
  // contracts slower than that.
  const auto entry = check_descent_inequality(rec, p, geom, 1.0, 0.0);
  CHECK_FALSE(entry.pass);
  CHECK(entry.margin < 0.0);
}

TEST_CASE("descent inequality needs recorded half steps") {
  const auto rec = outward_md_run(50);
  const Problem p = builtin_matching_pennies();
  const Geometry geom = p.default_geometry();
  CHECK_THROWS_AS(check_descent_inequality(rec, p, geom, 1.0, 1.0), MissingHalfStep);
}

TEST_CASE("orbit bound with the closed-form squared-step sum") {
  const auto rec = outward_md_run(10000);
  const auto schedule = StepSchedule::power(1.0, 1.0);
  const auto entry = check_bounded_orbit(rec, schedule, 0.5, 1.0);
  CHECK(entry.id == "BoundedOrbit");
  CHECK(entry.pass);
  // Bound = 0.08 + 0.25 * zeta(2); sup D = 0.16 exactly, reached at n = 2.
  CHECK(entry.worst_index == 2);
  CHECK(entry.margin == doctest::Approx(0.08 + 0.25 * M_PI * M_PI / 6.0 + 1e-9 - 0.16).epsilon(1e-12));
  CHECK(entry.detail.find("sup D 1.600000e-01") != std::string::npos);

  // A zero second moment shrinks the bound to D_1; the clip violates it.
  const auto zero_m = check_bounded_orbit(rec, schedule, 0.0, 1.0);
  CHECK_FALSE(zero_m.pass);
}

TEST_CASE("orbit bound with an all-zero custom schedule is the initial distance") {
  RunConfig cfg;
  cfg.problem = builtin_matching_pennies();
  cfg.schedule = StepSchedule::custom(std::vector<double>(5, 0.0));
  cfg.iterations = 5;
  cfg.initial = point2(0.7, 0.2);
  const auto rec = run(cfg, Method::MirrorDescent);
  const auto entry = check_bounded_orbit(rec, cfg.schedule, 0.5, 1.0);
  CHECK(entry.pass);
  CHECK(entry.margin == doctest::Approx(1e-9).epsilon(1e-9));
}

TEST_CASE("orbit bound is uncertifiable without a closed form") {
  const auto rec = outward_md_run(10);
  CHECK_THROWS_AS(check_bounded_orbit(rec, StepSchedule::constant(0.1), 0.5, 1.0), Uncertifiable);
  CHECK_THROWS_AS(check_bounded_orbit(rec, StepSchedule::power(1.0, 0.5), 0.5, 1.0), Uncertifiable);
  CHECK_THROWS_AS(check_bounded_orbit(rec, StepSchedule::power(1.0, 1.0), 0.5, 0.0), ConfigError);
}

TEST_CASE("ergodic convergence compares the final average to the solution set") {
  const auto rec = outward_md_run(10000, 100);
  const Problem p = builtin_matching_pennies();
  const Geometry geom = p.default_geometry();
  const auto tight = check_ergodic_convergence(rec, p, geom, 0.05);
  CHECK(tight.id == "ErgodicConvergence");
  CHECK_FALSE(tight.pass);
  CHECK(tight.margin == doctest::Approx(0.05 - 0.098706528888143574).epsilon(1e-9));
  const auto loose = check_ergodic_convergence(rec, p, geom, 0.15);
  CHECK(loose.pass);

  Problem no_solutions = p;
  no_solutions.solutions.clear();
  CHECK_THROWS_AS(check_ergodic_convergence(rec, no_solutions, geom, 0.05), MissingSolution);
}

TEST_CASE("ensemble statistics and the 95% score interval") {
  std::vector<RunRecord> records;
  for (int i = 0; i < 50; ++i) {
    RunRecord r;
    r.final_bregman = {i < 45 ? 1e-5 * (i + 1) : 0.5 + i};
    records.push_back(std::move(r));
  }
  const auto stats = ensemble_stats(records, 1e-3);
  CHECK(stats.runs == 50);
  CHECK(stats.converged == 45);
  CHECK(stats.fraction == doctest::Approx(0.9));
  CHECK(stats.wilson_low == doctest::Approx(0.786394).epsilon(1e-4));
  CHECK(stats.wilson_high == doctest::Approx(0.956524).epsilon(1e-4));
  CHECK(stats.max_final_bregman == doctest::Approx(49.5));
  CHECK(stats.median_final_bregman == doctest::Approx(1e-5 * 25.5).epsilon(1e-9));

  // The minimum over listed solutions is what counts as converged.
  RunRecord multi;
  multi.final_bregman = {0.5, 1e-6};
  const auto single = ensemble_stats({multi}, 1e-3);
  CHECK(single.converged == 1);

  CHECK_THROWS_AS(ensemble_stats({}, 1e-3), EmptyEnsemble);
  RunRecord no_bregman;
  CHECK_THROWS_AS(ensemble_stats({no_bregman}, 1e-3), MissingSolution);
}

TEST_CASE("ensemble fraction check reports the converged count") {
  std::vector<RunRecord> records;
  for (int i = 0; i < 50; ++i) {
    RunRecord r;
    r.final_bregman = {i < 45 ? 1e-6 : 1.0};
    records.push_back(std::move(r));
  }
  const auto pass = check_ensemble_fraction(records, 1e-3, 0.9);
  CHECK(pass.id == "EnsembleConvergenceFraction");
  CHECK(pass.pass);
  CHECK(pass.margin == doctest::Approx(0.0).scale(1.0));
  CHECK(pass.detail.find("45/50 converged") != std::string::npos);
  const auto fail = check_ensemble_fraction(records, 1e-3, 0.95);
  CHECK_FALSE(fail.pass);
}
