#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbench/core.hpp"
#include "sbench/geometry.hpp"
#include "sbench/oracle.hpp"
#include "sbench/problems.hpp"
#include "sbench/schedule.hpp"

namespace sbench {

enum class Method { MirrorDescent, OptimisticMirrorDescent };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

// One mirror-descent step: X+ = prox_X(-gamma * g(X)).
Vec md_step(const Geometry& geometry, OracleState& oracle, const Vec& x, double gamma);

struct OmdStep {
  Vec half;  // leading state X_{n+1/2}
  Vec next;  // X_{n+1}; both prox steps are based at X_n
};
OmdStep omd_step(const Geometry& geometry, OracleState& oracle, const Vec& x, double gamma);

struct RunConfig {
  Problem problem;
  std::optional<Geometry> geometry;  // defaults to problem.default_geometry()
  StepSchedule schedule = StepSchedule::power(1.0, 1.0);
  OracleConfig oracle = OracleConfig::exact();
  int iterations = 1000;
  std::optional<Vec> initial;  // defaults to the feasible-set center
  int record_every = 1;
};

struct IterationRow {
  int n = 0;
  double gamma = 0;
  Vec x;
  std::optional<Vec> half;  // OMD only
  Vec ergodic;              // step-weighted average of X_1..X_n
  std::vector<double> bregman_to_solutions;
};

struct RunRecord {
  std::string problem_label;
  Method method = Method::MirrorDescent;
  std::string geometry_name;
  std::vector<IterationRow> rows;
  Vec final_point;  // X_{N+1}
  Vec final_ergodic;
  std::vector<double> final_bregman;
  std::uint64_t oracle_queries = 0;
  double duration_seconds = 0;
  std::vector<std::string> warnings;
  bool incomplete = false;  // a numerical abort truncated the run
  int record_every = 1;
  int iterations = 0;
};

RunRecord run(const RunConfig& config, Method method);

// Step-weighted running average; returns the averages X_bar_1..X_bar_n.
std::vector<Vec> ergodic_average(const std::vector<Vec>& points,
                                 const std::vector<double>& gammas);

struct EnsembleConfig {
  RunConfig base;
  int runs = 1;
  std::uint64_t base_seed = 1;
  int threads = 0;  // 0: hardware concurrency
};

// Independent runs with per-run seeds derived from (base_seed, run index);
// results are ordered by run index regardless of completion order.
std::vector<RunRecord> run_ensemble(const EnsembleConfig& config, Method method);

}  // namespace sbench
