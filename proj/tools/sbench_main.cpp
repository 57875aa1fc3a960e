#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sbench/adaptive.hpp"
#include "sbench/core.hpp"
#include "sbench/diagnostics.hpp"
#include "sbench/geometry.hpp"
#include "sbench/io.hpp"
#include "sbench/oracle.hpp"
#include "sbench/problems.hpp"
#include "sbench/schedule.hpp"
#include "sbench/solver.hpp"

namespace {

using namespace sbench;
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

Vec parse_point(const std::string& spec) {
  std::vector<double> vals;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    const std::string item =
        spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      vals.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse point coordinate '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  Vec v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
  return v;
}

Geometry build_geometry(const Problem& problem, const std::string& name) {
  if (name.empty()) return problem.default_geometry();
  if (name == "euclidean") return make_euclidean_geometry(problem.set);
  if (name == "entropic") return make_entropic_geometry(problem.set);
  throw ConfigError("unknown geometry '" + name + "' (expected euclidean or entropic)");
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return std::isspace(c) == 0; };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// Flat key=value config file. Keys mirror the subcommand's long flags;
// values given on the command line win; unknown keys are rejected.
void apply_config_file(CLI::App* cmd, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::set<CLI::Option*> set_by_file;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "config") throw ConfigError(where + ": config files cannot nest");
    CLI::Option* opt = nullptr;
    try {
      opt = cmd->get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
      throw ConfigError(where + ": unknown config key '" + key + "'");
    }
    if (opt->count() > 0 && set_by_file.count(opt) == 0) continue;
    opt->add_result(value);
    opt->run_callback();
    set_by_file.insert(opt);
  }
}

std::string verdict_text(const CertificationResult& r) {
  switch (r.verdict) {
    case CertificationResult::Verdict::Pass: return "pass";
    case CertificationResult::Verdict::Fail: return "fail (" + r.violated_condition + ")";
    case CertificationResult::Verdict::Uncertifiable:
      return "uncertifiable (" + r.violated_condition + ")";
  }
  return "?";
}

std::vector<std::string> certification_lines(const StepSchedule& schedule, const Problem& problem,
                                             const Geometry& geometry) {
  std::vector<std::string> lines;
  CertificationQuery rm;
  rm.hypothesis = CertificationQuery::Hypothesis::RobbinsMonro;
  lines.push_back("RobbinsMonro: " + verdict_text(certify(schedule, rm)));
  CertificationQuery win;
  win.hypothesis = CertificationQuery::Hypothesis::OMDWindow;
  win.alpha = geometry.alpha();
  win.L = problem.lipschitz_g.value_or(0.0);
  lines.push_back("OMDWindow: " + verdict_text(certify(schedule, win)));
  return lines;
}

struct ClaimContext {
  const Problem* problem = nullptr;
  const Geometry* geometry = nullptr;
  const StepSchedule* schedule = nullptr;
  double alpha = 1.0;
  double lipschitz = 0.0;
  double second_moment = 0.0;
  double ergodic_threshold = 0.05;
  double ensemble_threshold = 1e-3;
  double required_fraction = 0.9;
};

ClaimEntry evaluate_claim(const std::string& id, const std::vector<RunRecord>& records,
                          const ClaimContext& ctx) {
  const RunRecord& first = records.front();
  if (id == "MonotoneDescent") return check_monotone_descent(first);
  if (id == "NullNondecrease")
    return check_null_nondecrease(first, *ctx.problem, *ctx.geometry);
  if (id == "PerStepDescentInequality")
    return check_descent_inequality(first, *ctx.problem, *ctx.geometry, ctx.alpha, ctx.lipschitz);
  if (id == "BoundedOrbit")
    return check_bounded_orbit(first, *ctx.schedule, ctx.second_moment, ctx.alpha);
  if (id == "ErgodicConvergence")
    return check_ergodic_convergence(first, *ctx.problem, *ctx.geometry, ctx.ergodic_threshold);
  if (id == "EnsembleConvergenceFraction")
    return check_ensemble_fraction(records, ctx.ensemble_threshold, ctx.required_fraction);
  throw ConfigError("unknown claim id '" + id + "'");
}

void print_claim(const ClaimEntry& e) {
  std::printf("[%s] %s: %s (margin %.3e)\n", e.pass ? "PASS" : "FAIL", e.id.c_str(),
              e.detail.c_str(), e.margin);
}

void write_conformance_report(const std::vector<ClaimEntry>& entries, const std::string& path) {
  Json j;
  j["schema"] = "sbench-conformance/1";
  Json list = Json::array();
  for (const auto& e : entries) {
    Json item;
    item["id"] = e.id;
    item["pass"] = e.pass;
    item["margin"] = e.margin;
    item["worst_index"] = e.worst_index;
    item["detail"] = e.detail;
    list.push_back(item);
  }
  j["claims"] = list;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

// ────────────────────────────────────────────────────────────────────────────
// run
// ────────────────────────────────────────────────────────────────────────────

struct RunOpts {
  std::string config;
  std::string problem;
  std::string method;
  std::string geometry;
  std::string step = "power:c=1,p=1";
  double sigma = 0.0;
  std::uint64_t seed = 1;
  int iters = 1000;
  int record_every = 1;
  int ensemble = 1;
  int threads = 0;
  std::string out = "out";
  std::string start;
  std::vector<std::string> asserts;
  double threshold = 1e-3;
  double required_fraction = 0.9;
  double ergodic_threshold = 0.05;
  double beta1 = 0.0, beta2 = 0.9, eps = 1e-8, lr = 1e-4, lr2 = 1e-4;
  bool paper_literal = false;
};

RunMetadata make_metadata(const RunRecord& record, const RunOpts& o, const Problem& problem,
                          const Geometry& geometry, const StepSchedule& schedule,
                          std::uint64_t seed) {
  RunMetadata meta;
  meta.problem_label = problem.label;
  meta.method = to_string(record.method);
  meta.geometry_name = geometry.name();
  meta.step_spec = schedule.describe();
  meta.oracle_mode = o.sigma > 0 ? "gaussian" : "exact";
  meta.sigma = o.sigma;
  meta.seed = seed;
  meta.iterations = record.iterations;
  meta.record_every = record.record_every;
  meta.oracle_queries = record.oracle_queries;
  meta.duration_seconds = record.duration_seconds;
  meta.warnings = record.warnings;
  meta.incomplete = record.incomplete;
  meta.final_point = record.final_point;
  meta.final_ergodic = record.final_ergodic;
  meta.final_bregman = record.final_bregman;
  meta.certifications = certification_lines(schedule, problem, geometry);
  return meta;
}

int run_solver_method(const RunOpts& o, Method method) {
  const Problem problem = problem_by_label(o.problem);
  const Geometry geometry = build_geometry(problem, o.geometry);
  const StepSchedule schedule = parse_step_spec(o.step);

  RunConfig rc;
  rc.problem = problem;
  rc.geometry = geometry;
  rc.schedule = schedule;
  rc.oracle = o.sigma > 0 ? OracleConfig::gaussian(o.sigma, o.seed) : OracleConfig::exact();
  rc.oracle.seed = o.seed;
  rc.iterations = o.iters;
  rc.record_every = o.record_every;
  if (!o.start.empty()) rc.initial = parse_point(o.start);

  fs::create_directories(o.out);
  const std::string stem = o.problem + "-" + to_string(method);

  std::vector<RunRecord> records;
  if (o.ensemble == 1) {
    records.push_back(run(rc, method));
    const fs::path csv = fs::path(o.out) / (stem + ".csv");
    write_trajectory_csv(records.front(), csv.string());
    write_metadata_json(make_metadata(records.front(), o, problem, geometry, schedule, o.seed),
                        (fs::path(o.out) / (stem + ".json")).string());
  } else {
    EnsembleConfig ec;
    ec.base = rc;
    ec.runs = o.ensemble;
    ec.base_seed = o.seed;
    ec.threads = o.threads;
    records = run_ensemble(ec, method);
    for (int i = 0; i < o.ensemble; ++i) {
      char suffix[32];
      std::snprintf(suffix, sizeof(suffix), "-run%03d", i);
      const std::string run_stem = stem + suffix;
      write_trajectory_csv(records[static_cast<std::size_t>(i)],
                           (fs::path(o.out) / (run_stem + ".csv")).string());
      write_metadata_json(
          make_metadata(records[static_cast<std::size_t>(i)], o, problem, geometry, schedule,
                        derive_seed(o.seed, static_cast<std::uint64_t>(i))),
          (fs::path(o.out) / (run_stem + ".json")).string());
    }
    const EnsembleStats stats = ensemble_stats(records, o.threshold);
    Json j;
    j["schema"] = "sbench-ensemble/1";
    j["problem"] = problem.label;
    j["method"] = to_string(method);
    j["runs"] = stats.runs;
    j["threshold"] = o.threshold;
    j["converged"] = stats.converged;
    j["fraction"] = stats.fraction;
    j["wilson95"] = {stats.wilson_low, stats.wilson_high};
    j["median_final_bregman"] = stats.median_final_bregman;
    j["max_final_bregman"] = stats.max_final_bregman;
    std::ofstream sum((fs::path(o.out) / (stem + "-ensemble.json")).string(),
                      std::ios::binary | std::ios::trunc);
    sum << j.dump(2) << "\n";
    std::printf("ensemble: %d/%d runs with final D < %.1e (fraction %.3f, Wilson 95%% [%.4f, %.4f])\n",
                stats.converged, stats.runs, o.threshold, stats.fraction, stats.wilson_low,
                stats.wilson_high);
  }

  const RunRecord& rec = records.front();
  std::string dvals;
  for (std::size_t s = 0; s < rec.final_bregman.size(); ++s) {
    if (s) dvals += ", ";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6e", rec.final_bregman[s]);
    dvals += buf;
  }
  std::printf("%s %s: final D = [%s]; queries = %llu; duration = %.3f s\n", problem.label.c_str(),
              to_string(method).c_str(), dvals.c_str(),
              static_cast<unsigned long long>(rec.oracle_queries), rec.duration_seconds);
  for (const auto& w : rec.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());

  bool any_incomplete = false;
  for (const auto& r : records) any_incomplete |= r.incomplete;

  bool claims_failed = false;
  if (!o.asserts.empty()) {
    ClaimContext ctx;
    ctx.problem = &problem;
    ctx.geometry = &geometry;
    ctx.schedule = &schedule;
    ctx.alpha = geometry.alpha();
    ctx.lipschitz = problem.lipschitz_g ? *problem.lipschitz_g : estimate_lipschitz(problem, 512, 1);
    ctx.second_moment = oracle_bound_report(problem, rc.oracle).second_moment;
    ctx.ergodic_threshold = o.ergodic_threshold;
    ctx.ensemble_threshold = o.threshold;
    ctx.required_fraction = o.required_fraction;
    for (const auto& id : o.asserts) {
      const ClaimEntry e = evaluate_claim(id, records, ctx);
      print_claim(e);
      claims_failed |= !e.pass;
    }
  }

  if (any_incomplete) return 3;
  return claims_failed ? 1 : 0;
}

int run_adaptive_method(const RunOpts& o, AdaptiveOptimizer optimizer) {
  if (!o.asserts.empty())
    throw ConfigError("--assert applies to md/omd runs only");
  const Problem problem = problem_by_label(o.problem);
  AdamConfig config;
  config.beta1 = o.beta1;
  config.beta2 = o.beta2;
  config.eps = o.eps;
  config.lr = o.lr;
  config.lr2 = o.lr2;
  config.paper_literal = o.paper_literal;

  const Vec theta0 = o.start.empty() ? problem.set.center_point() : parse_point(o.start);
  std::optional<Vec> solution;
  if (!problem.solutions.empty()) solution = problem.solutions.front();

  const AdaptiveRunRecord record = run_adaptive(problem.gradient_field, theta0, solution, optimizer,
                                                config, o.iters, o.record_every);

  fs::create_directories(o.out);
  const std::string stem = o.problem + "-" + to_string(optimizer);
  write_adaptive_csv(record, (fs::path(o.out) / (stem + ".csv")).string());
  Json j;
  j["schema"] = "sbench-adaptive-run/1";
  j["problem"] = problem.label;
  j["optimizer"] = to_string(optimizer);
  j["lr"] = config.lr;
  j["lr2"] = config.lr2;
  j["beta1"] = config.beta1;
  j["beta2"] = config.beta2;
  j["eps"] = config.eps;
  j["paper_literal"] = config.paper_literal;
  j["iterations"] = record.iterations;
  j["record_every"] = record.record_every;
  j["diverged"] = record.diverged;
  Json theta = Json::array();
  for (Eigen::Index i = 0; i < record.final_theta.size(); ++i) theta.push_back(record.final_theta[i]);
  j["final_theta"] = theta;
  j["final_norm"] = record.final_theta.norm();
  std::ofstream out((fs::path(o.out) / (stem + ".json")).string(), std::ios::binary | std::ios::trunc);
  out << j.dump(2) << "\n";

  std::printf("%s %s: final |theta| = %.6e after %d steps%s\n", problem.label.c_str(),
              to_string(optimizer).c_str(), record.final_theta.norm(), o.iters,
              record.diverged ? " (diverged)" : "");
  return record.diverged ? 3 : 0;
}

int cmd_run(const RunOpts& o) {
  if (o.problem.empty()) throw ConfigError("--problem is required (see 'sbench run --help')");
  if (o.method.empty()) throw ConfigError("--method is required (see 'sbench run --help')");
  if (o.method == "md") return run_solver_method(o, Method::MirrorDescent);
  if (o.method == "omd") return run_solver_method(o, Method::OptimisticMirrorDescent);
  return run_adaptive_method(o, adaptive_optimizer_from_string(o.method));
}

// ────────────────────────────────────────────────────────────────────────────
// check
// ────────────────────────────────────────────────────────────────────────────

struct CheckOpts {
  std::string config;
  std::vector<std::string> trajectories;
  std::vector<std::string> claims;
  std::string report;
  double alpha_override = 0;
  double l_override = 0;
  double m2_override = -1;
  double ergodic_threshold = 0.05;
  double threshold = 1e-3;
  double required_fraction = 0.9;
};

int cmd_check(const CheckOpts& o) {
  if (o.trajectories.empty()) throw ConfigError("check needs at least one --trajectory");
  if (o.claims.empty()) throw ConfigError("check needs at least one --claim");

  std::vector<RunRecord> records;
  std::optional<RunMetadata> meta0;
  for (const auto& path : o.trajectories) {
    const LoadedTrajectory t = load_trajectory_csv(path);
    const RunMetadata meta = load_metadata_json(fs::path(path).replace_extension(".json").string());
    records.push_back(to_run_record(t, meta));
    if (!meta0) meta0 = meta;
  }

  const Problem problem = problem_by_label(meta0->problem_label);
  const Geometry geometry = meta0->geometry_name.empty() || meta0->geometry_name == "mixed"
                                ? problem.default_geometry()
                                : build_geometry(problem, meta0->geometry_name);
  const StepSchedule schedule = parse_step_spec(meta0->step_spec);

  ClaimContext ctx;
  ctx.problem = &problem;
  ctx.geometry = &geometry;
  ctx.schedule = &schedule;
  ctx.alpha = o.alpha_override > 0 ? o.alpha_override : geometry.alpha();
  ctx.lipschitz = o.l_override > 0
                      ? o.l_override
                      : (problem.lipschitz_g ? *problem.lipschitz_g : estimate_lipschitz(problem, 512, 1));
  if (o.m2_override >= 0) {
    ctx.second_moment = o.m2_override;
  } else {
    OracleConfig oc = meta0->sigma > 0 ? OracleConfig::gaussian(meta0->sigma, meta0->seed)
                                       : OracleConfig::exact();
    ctx.second_moment = oracle_bound_report(problem, oc).second_moment;
  }
  ctx.ergodic_threshold = o.ergodic_threshold;
  ctx.ensemble_threshold = o.threshold;
  ctx.required_fraction = o.required_fraction;

  std::vector<ClaimEntry> entries;
  bool failed = false;
  for (const auto& id : o.claims) {
    entries.push_back(evaluate_claim(id, records, ctx));
    print_claim(entries.back());
    failed |= !entries.back().pass;
  }
  const std::string report_path =
      o.report.empty()
          ? fs::path(o.trajectories.front()).replace_extension().string() + "-report.json"
          : o.report;
  write_conformance_report(entries, report_path);
  return failed ? 1 : 0;
}

// ────────────────────────────────────────────────────────────────────────────
// probe
// ────────────────────────────────────────────────────────────────────────────

struct ProbeOpts {
  std::string config;
  std::string problem;
  std::string plan;  // grid | random; default: grid up to 2 dimensions, random beyond
  int grid = 201;
  int samples = 4096;
  std::uint64_t seed = 1;
  std::string out = "out";
};

int cmd_probe(const ProbeOpts& o) {
  if (o.problem.empty()) throw ConfigError("--problem is required (see 'sbench probe --help')");
  const Problem problem = problem_by_label(o.problem);
  std::string plan_name = o.plan;
  if (plan_name.empty()) plan_name = problem.dim() <= 2 ? "grid" : "random";
  SamplingPlan plan = plan_name == "grid"     ? SamplingPlan::grid(o.grid)
                      : plan_name == "random" ? SamplingPlan::random(o.samples, o.seed)
                                              : throw ConfigError("unknown plan '" + plan_name + "'");
  const ProbeReport report = coherence_probe(problem, plan);

  char stats[160];
  if (report.inconclusive) {
    std::snprintf(stats, sizeof(stats), "Inconclusive (declared %s violated: min residual = %.1e)",
                  to_string(report.declared).c_str(), report.min_residual);
  } else if (report.classification == CoherenceClass::Null) {
    std::snprintf(stats, sizeof(stats), "Null (max |residual| = %.1e)",
                  std::max(std::abs(report.min_residual), std::abs(report.max_residual)));
  } else if (report.classification == CoherenceClass::Strict) {
    double floor = std::numeric_limits<double>::infinity();
    for (const auto& sr : report.per_solution) floor = std::min(floor, sr.min_off_ball);
    std::snprintf(stats, sizeof(stats), "Strict (min off-solution residual = %.1e)", floor);
  } else {
    std::snprintf(stats, sizeof(stats), "%s (min residual = %.1e, max = %.1e)",
                  to_string(report.classification).c_str(), report.min_residual,
                  report.max_residual);
  }
  std::printf("%s: %s over %zu sample points\n", problem.label.c_str(), stats, report.sample_size);

  fs::create_directories(o.out);
  Json j;
  j["schema"] = "sbench-probe/1";
  j["problem"] = problem.label;
  j["plan"] = plan_name == "grid" ? ("grid:" + std::to_string(o.grid))
                                  : ("random:" + std::to_string(o.samples));
  j["declared"] = to_string(report.declared);
  j["classification"] = to_string(report.classification);
  j["inconclusive"] = report.inconclusive;
  j["sample_size"] = report.sample_size;
  j["min_residual"] = report.min_residual;
  j["max_residual"] = report.max_residual;
  j["mean_residual"] = report.mean_residual;
  Json per = Json::array();
  for (const auto& sr : report.per_solution) {
    Json item;
    item["min"] = sr.min;
    item["max"] = sr.max;
    item["mean"] = sr.mean;
    if (std::isfinite(sr.min_off_ball)) item["min_off_ball"] = sr.min_off_ball;
    per.push_back(item);
  }
  j["per_solution"] = per;
  std::ofstream out((fs::path(o.out) / ("probe-" + problem.label + ".json")).string(),
                    std::ios::binary | std::ios::trunc);
  out << j.dump(2) << "\n";
  return 0;
}

// ────────────────────────────────────────────────────────────────────────────
// portrait
// ────────────────────────────────────────────────────────────────────────────

struct PortraitOpts {
  std::string config;
  std::string problem = "portrait";
  std::vector<std::string> methods{"md", "omd"};
  std::vector<std::string> starts;
  std::string step = "const:0.1";
  int iters = 2000;
  std::uint64_t seed = 1;
  std::string out = "out";
};

int cmd_portrait(const PortraitOpts& o) {
  const Problem problem = problem_by_label(o.problem);
  if (problem.dim() != 2) throw ConfigError("portrait needs a 2-dimensional problem");
  const Geometry geometry = problem.default_geometry();
  const StepSchedule schedule = parse_step_spec(o.step);

  std::vector<Vec> starts;
  if (o.starts.empty()) {
    starts.push_back(problem.set.center_point());
  } else {
    for (const auto& s : o.starts) starts.push_back(parse_point(s));
  }

  fs::create_directories(o.out);
  bool any_incomplete = false;
  for (const auto& method_name : o.methods) {
    const Method method = method_from_string(method_name);
    for (std::size_t k = 0; k < starts.size(); ++k) {
      RunConfig rc;
      rc.problem = problem;
      rc.geometry = geometry;
      rc.schedule = schedule;
      rc.oracle = OracleConfig::exact();
      rc.oracle.seed = o.seed;
      rc.iterations = o.iters;
      rc.record_every = 1;
      rc.initial = starts[k];
      const RunRecord record = run(rc, method);
      any_incomplete |= record.incomplete;

      char suffix[32];
      std::snprintf(suffix, sizeof(suffix), "-start%zu", k);
      const std::string stem = "portrait-" + problem.label + "-" + method_name + suffix;
      write_trajectory_csv(record, (fs::path(o.out) / (stem + ".csv")).string());

      RunOpts shim;
      shim.sigma = 0;
      RunMetadata meta = make_metadata(record, shim, problem, geometry, schedule, o.seed);
      meta.figure = "phase portrait: vanilla vs optimistic mirror descent";
      write_metadata_json(meta, (fs::path(o.out) / (stem + ".json")).string());

      double min_d = std::numeric_limits<double>::infinity();
      int min_n = 0;
      int first_small = -1;
      for (const auto& row : record.rows) {
        const double d = row.bregman_to_solutions.empty() ? 0 : row.bregman_to_solutions.front();
        if (d < min_d) {
          min_d = d;
          min_n = row.n;
        }
        if (first_small < 0 && d < 1e-6) first_small = row.n;
      }
      const double final_d = record.final_bregman.empty() ? 0 : record.final_bregman.front();
      std::printf("%s start %zu: min D = %.3e at n=%d; final D = %.3e; first D<1e-6 at n=%s\n",
                  method_name.c_str(), k, min_d, min_n, final_d,
                  first_small < 0 ? "-" : std::to_string(first_small).c_str());
    }
  }
  return any_incomplete ? 3 : 0;
}

// ────────────────────────────────────────────────────────────────────────────
// list-problems
// ────────────────────────────────────────────────────────────────────────────

int cmd_list_problems() {
  for (const auto& label : problem_labels()) {
    const Problem p = problem_by_label(label);
    std::printf("%-18s dim=%d  class=%-8s solutions=%zu  L=%s  geometry=%s\n", label.c_str(),
                p.dim(), to_string(p.coherence_class).c_str(), p.solutions.size(),
                p.lipschitz_g ? (std::to_string(*p.lipschitz_g)).c_str() : "?",
                p.default_geometry().name().c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror-descent saddle-point benchmark"};
  app.require_subcommand(1);

  RunOpts run_opts;
  auto* run_cmd = app.add_subcommand("run", "Execute a solver or optimizer run");
  run_cmd->add_option("--config", run_opts.config, "flat key=value config file; flags override");
  run_cmd->add_option("--problem", run_opts.problem, "problem label (required)");
  run_cmd->add_option("--method", run_opts.method,
                      "md | omd | adam | optimistic-adam | rmsprop | optimistic-rmsprop (required)");
  run_cmd->add_option("--geometry", run_opts.geometry, "euclidean | entropic (default: problem's)");
  run_cmd->add_option("--step", run_opts.step, "step spec (default power:c=1,p=1)");
  run_cmd->add_option("--sigma", run_opts.sigma, "gradient noise std dev (0 = exact oracle)");
  run_cmd->add_option("--seed", run_opts.seed, "oracle seed / ensemble base seed");
  run_cmd->add_option("--iters", run_opts.iters, "iteration count");
  run_cmd->add_option("--record-every", run_opts.record_every, "row recording stride");
  run_cmd->add_option("--ensemble", run_opts.ensemble, "number of seeded runs");
  run_cmd->add_option("--threads", run_opts.threads, "ensemble worker threads (0 = auto)");
  run_cmd->add_option("--out", run_opts.out, "output directory");
  run_cmd->add_option("--start", run_opts.start, "initial point, comma-separated");
  run_cmd->add_option("--assert", run_opts.asserts, "claim ids to enforce after the run");
  run_cmd->add_option("--threshold", run_opts.threshold, "ensemble convergence threshold on final D");
  run_cmd->add_option("--required-fraction", run_opts.required_fraction,
                      "required converged fraction for the ensemble claim");
  run_cmd->add_option("--ergodic-threshold", run_opts.ergodic_threshold,
                      "distance threshold for the ergodic claim");
  run_cmd->add_option("--beta1", run_opts.beta1, "adam first-moment decay");
  run_cmd->add_option("--beta2", run_opts.beta2, "adam second-moment decay");
  run_cmd->add_option("--eps", run_opts.eps, "adam denominator offset");
  run_cmd->add_option("--lr", run_opts.lr, "leading learning rate");
  run_cmd->add_option("--lr2", run_opts.lr2, "correcting learning rate");
  run_cmd->add_flag("--paper-literal", run_opts.paper_literal,
                    "optimistic adam: published second-moment recursion verbatim");

  CheckOpts check_opts;
  auto* check_cmd = app.add_subcommand("check", "Replay conformance claims against stored runs");
  check_cmd->add_option("--config", check_opts.config, "flat key=value config file; flags override");
  check_cmd->add_option("--trajectory", check_opts.trajectories, "trajectory CSV path(s) (required)");
  check_cmd->add_option("--claim", check_opts.claims, "claim id(s) to check (required)");
  check_cmd->add_option("--report", check_opts.report, "conformance report JSON path");
  check_cmd->add_option("--alpha", check_opts.alpha_override, "override strong-convexity modulus");
  check_cmd->add_option("--lipschitz", check_opts.l_override, "override Lipschitz constant");
  check_cmd->add_option("--second-moment", check_opts.m2_override, "override oracle M^2 bound");
  check_cmd->add_option("--ergodic-threshold", check_opts.ergodic_threshold,
                        "distance threshold for ErgodicConvergence");
  check_cmd->add_option("--threshold", check_opts.threshold,
                        "final-D threshold for EnsembleConvergenceFraction");
  check_cmd->add_option("--required-fraction", check_opts.required_fraction,
                        "required fraction for EnsembleConvergenceFraction");

  ProbeOpts probe_opts;
  auto* probe_cmd = app.add_subcommand("probe", "Classify a problem's VI residual profile");
  probe_cmd->add_option("--config", probe_opts.config, "flat key=value config file; flags override");
  probe_cmd->add_option("--problem", probe_opts.problem, "problem label (required)");
  probe_cmd->add_option("--plan", probe_opts.plan, "grid | random");
  probe_cmd->add_option("--grid", probe_opts.grid, "grid points per axis");
  probe_cmd->add_option("--samples", probe_opts.samples, "random sample count");
  probe_cmd->add_option("--seed", probe_opts.seed, "random plan seed");
  probe_cmd->add_option("--out", probe_opts.out, "output directory");

  PortraitOpts portrait_opts;
  auto* portrait_cmd =
      app.add_subcommand("portrait", "Trajectory CSVs for phase-portrait plotting");
  portrait_cmd->add_option("--config", portrait_opts.config, "flat key=value config file; flags override");
  portrait_cmd->add_option("--problem", portrait_opts.problem, "2-D problem label");
  portrait_cmd->add_option("--method", portrait_opts.methods, "methods to trace (default md omd)");
  portrait_cmd->add_option("--start", portrait_opts.starts, "initial point(s), comma-separated");
  portrait_cmd->add_option("--step", portrait_opts.step, "step spec (default const:0.1)");
  portrait_cmd->add_option("--iters", portrait_opts.iters, "iteration count");
  portrait_cmd->add_option("--seed", portrait_opts.seed, "oracle seed");
  portrait_cmd->add_option("--out", portrait_opts.out, "output directory");

  auto* list_cmd = app.add_subcommand("list-problems", "List builtin problems");

  int rc = 0;
  run_cmd->callback([&] {
    apply_config_file(run_cmd, run_opts.config);
    rc = cmd_run(run_opts);
  });
  check_cmd->callback([&] {
    apply_config_file(check_cmd, check_opts.config);
    rc = cmd_check(check_opts);
  });
  probe_cmd->callback([&] {
    apply_config_file(probe_cmd, probe_opts.config);
    rc = cmd_probe(probe_opts);
  });
  portrait_cmd->callback([&] {
    apply_config_file(portrait_cmd, portrait_opts.config);
    rc = cmd_portrait(portrait_opts);
  });
  list_cmd->callback([&] { rc = cmd_list_problems(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const NonFiniteInput& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  } catch (const NonFiniteGradient& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return rc;
}
