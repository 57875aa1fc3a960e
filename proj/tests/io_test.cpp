#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "sbench/io.hpp"

using namespace sbench;
namespace fs = std::filesystem;

namespace {

Vec point2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sbench-io-test";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return text;
}

RunRecord make_run(Method method, int iterations) {
  RunConfig cfg;
  cfg.problem = builtin_matching_pennies();
  cfg.schedule = StepSchedule::constant(0.4);
  cfg.iterations = iterations;
  cfg.initial = point2(0.9, 0.5);
  return run(cfg, method);
}

RunMetadata metadata_for(const RunRecord& record) {
  RunMetadata meta;
  meta.problem_label = record.problem_label;
  meta.method = to_string(record.method);
  meta.geometry_name = record.geometry_name;
  meta.step_spec = "const:0.4";
  meta.oracle_mode = "exact";
  meta.seed = 1;
  meta.iterations = record.iterations;
  meta.record_every = record.record_every;
  meta.oracle_queries = record.oracle_queries;
  meta.duration_seconds = record.duration_seconds;
  meta.warnings = record.warnings;
  meta.incomplete = record.incomplete;
  meta.final_point = record.final_point;
  meta.final_ergodic = record.final_ergodic;
  meta.final_bregman = record.final_bregman;
  return meta;
}

}  // namespace

TEST_CASE("trajectory CSV headers name every column") {
  const auto omd = make_run(Method::OptimisticMirrorDescent, 3);
  const std::string text = trajectory_csv(omd);
  CHECK(text.rfind("# sbench-trajectory v1 problem=matching-pennies method=omd geometry=euclidean\n",
                   0) == 0);
  CHECK(text.find("\nn,gamma,x1,x2,half1,half2,xbar1,xbar2,D1\n") != std::string::npos);

  const auto md = make_run(Method::MirrorDescent, 3);
  const std::string md_text = trajectory_csv(md);
  CHECK(md_text.find("method=md") != std::string::npos);
  CHECK(md_text.find("\nn,gamma,x1,x2,xbar1,xbar2,D1\n") != std::string::npos);
  CHECK(md_text.find("half") == std::string::npos);
}

TEST_CASE("trajectory save/load round-trips byte-identically") {
  for (const Method method : {Method::MirrorDescent, Method::OptimisticMirrorDescent}) {
    CAPTURE(to_string(method));
    const auto record = make_run(method, 25);
    const auto csv = temp_file(std::string("roundtrip-") + to_string(method) + ".csv");
    write_trajectory_csv(record, csv.string());

    const auto loaded = load_trajectory_csv(csv.string());
    CHECK(loaded.problem_label == "matching-pennies");
    CHECK(loaded.method == to_string(method));
    CHECK(loaded.geometry_name == "euclidean");
    CHECK(loaded.dim == 2);
    CHECK(loaded.solutions == 1);
    CHECK(loaded.has_half == (method == Method::OptimisticMirrorDescent));
    REQUIRE(loaded.rows.size() == record.rows.size());
    for (std::size_t i = 0; i < loaded.rows.size(); ++i) {
      CHECK(loaded.rows[i].n == record.rows[i].n);
      CHECK(loaded.rows[i].gamma == record.rows[i].gamma);
      CHECK(loaded.rows[i].x == record.rows[i].x);
      CHECK(loaded.rows[i].ergodic == record.rows[i].ergodic);
      CHECK(loaded.rows[i].half.has_value() == record.rows[i].half.has_value());
      if (loaded.rows[i].half) CHECK(*loaded.rows[i].half == *record.rows[i].half);
      CHECK(loaded.rows[i].bregman_to_solutions == record.rows[i].bregman_to_solutions);
    }

    const auto rebuilt = to_run_record(loaded, metadata_for(record));
    CHECK(trajectory_csv(rebuilt) == trajectory_csv(record));
  }
}

TEST_CASE("metadata JSON round-trips every field") {
  auto record = make_run(Method::OptimisticMirrorDescent, 5);
  RunMetadata meta = metadata_for(record);
  meta.oracle_mode = "gaussian";
  meta.sigma = 0.25;
  meta.seed = 0xDEADBEEFCAFEULL;
  meta.duration_seconds = 1.5;
  meta.warnings = {"first warning", "second warning"};
  meta.incomplete = true;
  meta.certifications = {"summable steps: Pass", "step window: Uncertifiable"};
  meta.figure = "phase portrait: vanilla vs optimistic mirror descent";

  const auto path = temp_file("meta.json");
  write_metadata_json(meta, path.string());
  const auto loaded = load_metadata_json(path.string());

  CHECK(loaded.schema == "sbench-run/1");
  CHECK(loaded.problem_label == meta.problem_label);
  CHECK(loaded.method == meta.method);
  CHECK(loaded.geometry_name == meta.geometry_name);
  CHECK(loaded.step_spec == meta.step_spec);
  CHECK(loaded.oracle_mode == "gaussian");
  CHECK(loaded.sigma == 0.25);
  CHECK(loaded.seed == meta.seed);
  CHECK(loaded.iterations == meta.iterations);
  CHECK(loaded.record_every == meta.record_every);
  CHECK(loaded.oracle_queries == meta.oracle_queries);
  CHECK(loaded.duration_seconds == 1.5);
  CHECK(loaded.warnings == meta.warnings);
  CHECK(loaded.incomplete);
  CHECK(loaded.final_point == meta.final_point);
  CHECK(loaded.final_ergodic == meta.final_ergodic);
  CHECK(loaded.final_bregman == meta.final_bregman);
  CHECK(loaded.certifications == meta.certifications);
  CHECK(loaded.figure == meta.figure);
}

TEST_CASE("metadata loader rejects foreign schemas and broken files") {
  const auto record = make_run(Method::MirrorDescent, 2);
  const auto path = temp_file("meta-tamper.json");
  write_metadata_json(metadata_for(record), path.string());

  std::string text = read_text(path.string());
  const auto pos = text.find("sbench-run/1");
  REQUIRE(pos != std::string::npos);
  write_text(path, text.substr(0, pos) + "other/9" + text.substr(pos + 12));
  CHECK_THROWS_AS(load_metadata_json(path.string()), ConfigError);

  write_text(path, "{ not json");
  CHECK_THROWS_AS(load_metadata_json(path.string()), ConfigError);
  write_text(path, "{\"schema\": \"sbench-run/1\"}");
  CHECK_THROWS_AS(load_metadata_json(path.string()), ConfigError);  // missing fields
  CHECK_THROWS_AS(load_metadata_json(temp_file("missing.json").string()), ConfigError);
}

TEST_CASE("run reassembly cross-checks trajectory against metadata") {
  const auto record = make_run(Method::MirrorDescent, 4);
  const auto csv = temp_file("crosscheck.csv");
  write_trajectory_csv(record, csv.string());
  const auto loaded = load_trajectory_csv(csv.string());

  RunMetadata wrong_label = metadata_for(record);
  wrong_label.problem_label = "portrait";
  CHECK_THROWS_AS(to_run_record(loaded, wrong_label), ConfigError);

  RunMetadata wrong_method = metadata_for(record);
  wrong_method.method = "omd";
  CHECK_THROWS_AS(to_run_record(loaded, wrong_method), ConfigError);

  RunMetadata wrong_dim = metadata_for(record);
  wrong_dim.final_point = Vec::Zero(3);
  CHECK_THROWS_AS(to_run_record(loaded, wrong_dim), ConfigError);
}

TEST_CASE("trajectory loader accepts hand-written files") {
  const auto path = temp_file("handwritten.csv");
  write_text(path,
             "# sbench-trajectory v1 problem=demo method=md geometry=euclidean\n"
             "n,gamma,x1,xbar1,D1\n"
             "1,1.0000000000000000e-01,5.0000000000000000e-01,5.0000000000000000e-01,"
             "2.5000000000000000e-02\n");
  const auto loaded = load_trajectory_csv(path.string());
  CHECK(loaded.problem_label == "demo");
  CHECK(loaded.dim == 1);
  CHECK(loaded.solutions == 1);
  CHECK_FALSE(loaded.has_half);
  REQUIRE(loaded.rows.size() == 1);
  CHECK(loaded.rows[0].n == 1);
  CHECK(loaded.rows[0].gamma == 0.1);
  CHECK(loaded.rows[0].x[0] == 0.5);
  CHECK(loaded.rows[0].bregman_to_solutions == std::vector<double>{0.025});
}

TEST_CASE("trajectory loader rejects corrupt files") {
  const auto check_rejects = [](const std::string& name, const std::string& text) {
    CAPTURE(name);
    const auto path = temp_file(name);
    write_text(path, text);
    CHECK_THROWS_AS(load_trajectory_csv(path.string()), ConfigError);
  };
  check_rejects("empty.csv", "");
  check_rejects("magic.csv", "# something-else v1 problem=p method=md geometry=euclidean\n");
  check_rejects("no-ids.csv", "# sbench-trajectory v1 geometry=euclidean\nn,gamma,x1,xbar1,D1\n");
  check_rejects("no-columns.csv", "# sbench-trajectory v1 problem=p method=md geometry=euclidean\n");
  check_rejects("bad-columns.csv",
                "# sbench-trajectory v1 problem=p method=md geometry=euclidean\n"
                "n,gamma,x1,y1,D1\n");
  check_rejects("short-row.csv",
                "# sbench-trajectory v1 problem=p method=md geometry=euclidean\n"
                "n,gamma,x1,xbar1,D1\n"
                "1,1.0e-01,5.0e-01\n");
  check_rejects("bad-value.csv",
                "# sbench-trajectory v1 problem=p method=md geometry=euclidean\n"
                "n,gamma,x1,xbar1,D1\n"
                "1,abc,5.0e-01,5.0e-01,2.5e-02\n");
  CHECK_THROWS_AS(load_trajectory_csv(temp_file("does-not-exist.csv").string()), ConfigError);
}

TEST_CASE("adaptive CSV lists the step count, rate, parameters, and distance") {
  AdamConfig cfg;
  cfg.lr = 0.1;
  cfg.lr2 = 0.1;
  const GradFn bilinear = [](const Vec& t) { return point2(t[1], -t[0]); };
  const auto with_sol = run_adaptive(bilinear, point2(1.0, 1.0), Vec(Vec::Zero(2)),
                                     AdaptiveOptimizer::OptimisticAdam, cfg, 3);
  const std::string text = adaptive_csv(with_sol);
  CHECK(text.rfind("# sbench-adaptive v1 optimizer=optimistic-adam\n", 0) == 0);
  CHECK(text.find("\nn,lr,theta1,theta2,dist\n") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 3);

  const auto without_sol = run_adaptive(bilinear, point2(1.0, 1.0), std::nullopt,
                                        AdaptiveOptimizer::Adam, cfg, 2);
  const std::string plain = adaptive_csv(without_sol);
  CHECK(plain.find("optimizer=adam") != std::string::npos);
  CHECK(plain.find("dist") == std::string::npos);
}

TEST_CASE("value formatting is fixed-width scientific and lossless") {
  CHECK(format_value(0.15625) == "1.5625000000000000e-01");
  CHECK(format_value(1.0) == "1.0000000000000000e+00");
  CHECK(format_value(0.0) == "0.0000000000000000e+00");
  for (const double v : {0.1, 1.0 / 3.0, 6.1629758220391547e-33, -2.5e300, 1e-300}) {
    CAPTURE(v);
    CHECK(std::strtod(format_value(v).c_str(), nullptr) == v);
  }
}
