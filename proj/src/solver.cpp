#include "sbench/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

namespace sbench {

std::string to_string(Method m) {
  return m == Method::MirrorDescent ? "md" : "omd";
}

Method method_from_string(const std::string& s) {
  if (s == "md") return Method::MirrorDescent;
  if (s == "omd") return Method::OptimisticMirrorDescent;
  throw ConfigError("unknown method '" + s + "' (expected md or omd)");
}

Vec md_step(const Geometry& geometry, OracleState& oracle, const Vec& x, double gamma) {
  if (!(gamma >= 0) || !std::isfinite(gamma)) throw ConfigError("step size must be finite and >= 0");
  return geometry.prox(x, -gamma * oracle.query(x));
}

OmdStep omd_step(const Geometry& geometry, OracleState& oracle, const Vec& x, double gamma) {
  if (!(gamma >= 0) || !std::isfinite(gamma)) throw ConfigError("step size must be finite and >= 0");
  OmdStep s;
  s.half = geometry.prox(x, -gamma * oracle.query(x));
  s.next = geometry.prox(x, -gamma * oracle.query(s.half));  // based at x, not at half
  return s;
}

std::vector<Vec> ergodic_average(const std::vector<Vec>& points, const std::vector<double>& gammas) {
  if (points.size() != gammas.size()) throw DimensionMismatch("ergodic average needs equal lengths");
  if (points.empty()) throw DimensionMismatch("ergodic average needs at least one iterate");
  std::vector<Vec> out;
  out.reserve(points.size());
  Vec acc = Vec::Zero(points.front().size());
  double wsum = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != acc.size()) throw DimensionMismatch("ergodic average iterate dimension mismatch");
    acc += gammas[i] * points[i];
    wsum += gammas[i];
    if (wsum <= 0) throw ConfigError("ergodic average needs positive total weight");
    out.push_back(acc / wsum);
  }
  return out;
}

RunRecord run(const RunConfig& config, Method method) {
  if (config.iterations < 1) throw ConfigError("iterations must be >= 1");
  if (config.record_every < 1) throw ConfigError("record_every must be >= 1");
  const Problem& problem = config.problem;
  const Geometry geometry = config.geometry ? *config.geometry : problem.default_geometry();
  if (geometry.set().total_dim() != problem.dim())
    throw DimensionMismatch("geometry does not cover the problem's feasible set");
  if (config.schedule.kind() == StepSchedule::Kind::Custom &&
      static_cast<int>(config.schedule.custom_values().size()) < config.iterations)
    throw ConfigError("custom schedule is shorter than the iteration count");

  Vec x = config.initial ? *config.initial : geometry.set().center_point();
  if (x.size() != problem.dim()) throw DimensionMismatch("initial point dimension mismatch");
  geometry.validate_prox_base(x);

  RunRecord record;
  record.problem_label = problem.label;
  record.method = method;
  record.geometry_name = geometry.name();
  record.record_every = config.record_every;
  record.iterations = config.iterations;

  const double alpha = geometry.alpha();
  if (method == Method::OptimisticMirrorDescent) {
    CertificationQuery q;
    q.hypothesis = CertificationQuery::Hypothesis::OMDWindow;
    q.alpha = alpha;
    q.L = problem.lipschitz_g.value_or(0.0);
    const auto cert = certify(config.schedule, q);
    if (cert.verdict != CertificationResult::Verdict::Pass)
      record.warnings.push_back("omd step window not certified: " + cert.violated_condition);
  }
  if (config.oracle.mode == OracleConfig::Mode::Gaussian && config.oracle.sigma > 0) {
    CertificationQuery q;
    q.hypothesis = CertificationQuery::Hypothesis::RobbinsMonro;
    const auto cert = certify(config.schedule, q);
    if (cert.verdict != CertificationResult::Verdict::Pass)
      record.warnings.push_back("stochastic run without a certified summable schedule: " +
                                cert.violated_condition);
  }

  OracleState oracle(problem, config.oracle);
  auto bregman_row = [&](const Vec& point) {
    std::vector<double> d;
    d.reserve(problem.solutions.size());
    for (const Vec& sol : problem.solutions) d.push_back(geometry.bregman(sol, point));
    return d;
  };

  Vec erg_acc = Vec::Zero(problem.dim());
  double erg_w = 0;
  Vec ergodic = x;
  const auto t0 = std::chrono::steady_clock::now();

  for (int n = 1; n <= config.iterations; ++n) {
    const double gamma = config.schedule.step_at(n);
    std::optional<Vec> half;
    Vec next;
    try {
      if (method == Method::MirrorDescent) {
        next = md_step(geometry, oracle, x, gamma);
      } else {
        OmdStep s = omd_step(geometry, oracle, x, gamma);
        half = std::move(s.half);
        next = std::move(s.next);
      }
    } catch (const Error& e) {
      record.incomplete = true;
      record.warnings.push_back("aborted at iteration " + std::to_string(n) + ": " + e.what());
      break;
    }

    erg_acc += gamma * x;
    erg_w += gamma;
    if (erg_w > 0) ergodic = erg_acc / erg_w;

    if ((n - 1) % config.record_every == 0 || n == config.iterations) {
      IterationRow row;
      row.n = n;
      row.gamma = gamma;
      row.x = x;
      row.half = half;
      row.ergodic = ergodic;
      row.bregman_to_solutions = bregman_row(x);
      record.rows.push_back(std::move(row));
    }
    x = std::move(next);
  }

  record.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  record.final_point = x;
  record.final_ergodic = ergodic;
  record.final_bregman = bregman_row(x);
  record.oracle_queries = oracle.query_count();
  return record;
}

std::vector<RunRecord> run_ensemble(const EnsembleConfig& config, Method method) {
  if (config.runs < 1) throw ConfigError("ensemble size must be >= 1");
  std::vector<RunRecord> records(static_cast<std::size_t>(config.runs));
  unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(config.runs));

  std::atomic<int> cursor{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (true) {
      const int i = cursor.fetch_add(1);
      if (i >= config.runs || failed.load()) return;
      try {
        RunConfig rc = config.base;
        rc.oracle.seed = derive_seed(config.base_seed, static_cast<std::uint64_t>(i));
        records[static_cast<std::size_t>(i)] = run(rc, method);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) first_error = e.what();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) throw Error("ensemble run failed: " + first_error);
  return records;
}

}  // namespace sbench
