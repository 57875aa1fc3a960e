#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "sbench/io.hpp"

using namespace sbench;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "sbench-cli-test";
  fs::create_directories(dir);
  return dir;
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CliResult invoke(const std::string& args) {
  static int counter = 0;
  const fs::path log = work_dir() / ("log-" + std::to_string(counter++) + ".txt");
  const std::string cmd = std::string(CLI_BIN) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  r.output.assign((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return r;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("list-problems prints the catalog") {
  const auto r = invoke("list-problems");
  CHECK(r.exit_code == 0);
  for (const char* label : {"matching-pennies", "portrait", "nonmonotone-ex2", "scc-quadratic",
                            "simplex-game"}) {
    CAPTURE(label);
    CHECK(r.output.find(label) != std::string::npos);
  }
  CHECK(r.output.find("dim=4") != std::string::npos);
  CHECK(r.output.find("geometry=entropic") != std::string::npos);
}

TEST_CASE("run writes a trajectory and its metadata") {
  const fs::path out = work_dir() / "run-ok";
  fs::remove_all(out);
  const auto r = invoke("run --problem matching-pennies --method omd --step const:0.5 "
                        "--iters 50 --start 0.9,0.5 --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("matching-pennies omd: final D = [") != std::string::npos);

  const auto loaded = load_trajectory_csv((out / "matching-pennies-omd.csv").string());
  CHECK(loaded.rows.size() == 50);
  CHECK(loaded.has_half);
  const auto meta = load_metadata_json((out / "matching-pennies-omd.json").string());
  CHECK(meta.step_spec == "const:0.5");
  CHECK(meta.oracle_mode == "exact");
  CHECK(meta.iterations == 50);
  REQUIRE(meta.certifications.size() == 2);
  CHECK(meta.certifications[0].find("RobbinsMonro: fail") == 0);
  CHECK(meta.certifications[1].find("OMDWindow: pass") == 0);
}

TEST_CASE("run enforces asserted claims through the exit code") {
  const fs::path out = work_dir() / "run-assert";
  fs::remove_all(out);
  const auto pass = invoke("run --problem matching-pennies --method omd --step const:0.5 "
                           "--iters 200 --start 0.9,0.5 --assert MonotoneDescent "
                           "--assert PerStepDescentInequality --out " + out.string());
  CHECK(pass.exit_code == 0);
  CHECK(pass.output.find("[PASS] MonotoneDescent") != std::string::npos);
  CHECK(pass.output.find("[PASS] PerStepDescentInequality") != std::string::npos);

  const auto fail = invoke("run --problem matching-pennies --method md --step power:c=1,p=1 "
                           "--iters 100 --start 0.9,0.5 --assert MonotoneDescent --out " +
                           out.string());
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("[FAIL] MonotoneDescent") != std::string::npos);
  CHECK(fail.output.find("(margin ") != std::string::npos);
}

TEST_CASE("configuration errors exit with status 2") {
  CHECK(invoke("run --method md").exit_code == 2);                     // missing --problem
  CHECK(invoke("run --problem nope --method md").exit_code == 2);      // unknown label
  CHECK(invoke("run --problem portrait --method sgd").exit_code == 2); // unknown method
  CHECK(invoke("run --problem portrait --method md --step const:-1").exit_code == 2);
  CHECK(invoke("run --problem portrait --method md --bogus 1").exit_code == 2);
  CHECK(invoke("no-such-subcommand").exit_code == 2);
  const auto adam_assert =
      invoke("run --problem portrait --method adam --assert MonotoneDescent");
  CHECK(adam_assert.exit_code == 2);
  CHECK(adam_assert.output.find("md/omd") != std::string::npos);
}

TEST_CASE("a diverging optimizer run exits with status 3") {
  const fs::path out = work_dir() / "run-diverge";
  fs::remove_all(out);
  const auto r = invoke("run --problem matching-pennies --method adam --lr 1e13 --iters 3 "
                        "--start 0.9,0.5 --out " + out.string());
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("(diverged)") != std::string::npos);
  CHECK(fs::exists(out / "matching-pennies-adam.csv"));
}

TEST_CASE("config files feed flags and the command line overrides them") {
  const fs::path out = work_dir() / "run-config";
  fs::remove_all(out);
  const fs::path cfg = work_dir() / "run.cfg";
  {
    std::ofstream f(cfg);
    f << "problem=matching-pennies\nmethod=md\nstep=const:0.25\niters=7\nout=" << out.string()
      << "\n";
  }
  const auto from_config = invoke("run --config " + cfg.string());
  CHECK(from_config.exit_code == 0);
  CHECK(load_trajectory_csv((out / "matching-pennies-md.csv").string()).rows.size() == 7);

  const auto overridden = invoke("run --config " + cfg.string() + " --iters 3");
  CHECK(overridden.exit_code == 0);
  CHECK(load_trajectory_csv((out / "matching-pennies-md.csv").string()).rows.size() == 3);

  const fs::path bad = work_dir() / "bad.cfg";
  {
    std::ofstream f(bad);
    f << "problem=matching-pennies\nmethod=md\nfrobnicate=1\n";
  }
  CHECK(invoke("run --config " + bad.string()).exit_code == 2);
}

TEST_CASE("check replays stored trajectories and writes a report") {
  const fs::path out = work_dir() / "check";
  fs::remove_all(out);
  REQUIRE(invoke("run --problem matching-pennies --method omd --step const:0.4 --iters 300 "
                 "--start 0.9,0.5 --out " + out.string()).exit_code == 0);
  const fs::path csv = out / "matching-pennies-omd.csv";

  const auto ok = invoke("check --trajectory " + csv.string() +
                         " --claim MonotoneDescent --claim PerStepDescentInequality");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("[PASS] MonotoneDescent") != std::string::npos);
  const std::string report = slurp(out / "matching-pennies-omd-report.json");
  CHECK(report.find("\"schema\": \"sbench-conformance/1\"") != std::string::npos);
  CHECK(report.find("\"id\": \"PerStepDescentInequality\"") != std::string::npos);

  REQUIRE(invoke("run --problem matching-pennies --method md --step power:c=1,p=1 --iters 100 "
                 "--start 0.9,0.5 --out " + out.string()).exit_code == 0);
  const auto fail = invoke("check --trajectory " + (out / "matching-pennies-md.csv").string() +
                           " --claim MonotoneDescent --report " + (out / "fail.json").string());
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("[FAIL] MonotoneDescent") != std::string::npos);
  CHECK(slurp(out / "fail.json").find("\"pass\": false") != std::string::npos);

  CHECK(invoke("check --trajectory " + csv.string() + " --claim NoSuchClaim").exit_code == 2);
  CHECK(invoke("check --claim MonotoneDescent").exit_code == 2);  // missing --trajectory
}

TEST_CASE("probe prints the classification verdicts") {
  const fs::path out = work_dir() / "probe";
  fs::remove_all(out);

  const auto null_probe =
      invoke("probe --problem matching-pennies --grid 101 --out " + out.string());
  CHECK(null_probe.exit_code == 0);
  CHECK(null_probe.output ==
        "matching-pennies: Null (max |residual| = 0.0e+00) over 10201 sample points\n");
  CHECK(slurp(out / "probe-matching-pennies.json").find("\"sbench-probe/1\"") !=
        std::string::npos);

  const auto strict_probe =
      invoke("probe --problem scc-quadratic --samples 512 --out " + out.string());
  CHECK(strict_probe.exit_code == 0);
  CHECK(strict_probe.output.find("scc-quadratic: Strict (min off-solution residual = ") == 0);

  const auto coherent_probe =
      invoke("probe --problem nonmonotone-ex2 --grid 21 --out " + out.string());
  CHECK(coherent_probe.exit_code == 0);
  CHECK(coherent_probe.output.find("nonmonotone-ex2: Coherent (min residual = ") == 0);

  const auto contradiction =
      invoke("probe --problem portrait --grid 51 --out " + out.string());
  CHECK(contradiction.exit_code == 0);
  CHECK(contradiction.output.find("portrait: Inconclusive (declared Coherent violated") == 0);

  CHECK(invoke("probe --problem portrait --plan hexagonal").exit_code == 2);
}

TEST_CASE("portrait emits one labelled pair of files per method and start") {
  const fs::path out = work_dir() / "portrait";
  fs::remove_all(out);
  const auto r = invoke("portrait --iters 1 --start 0.25,0.75 --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("md start 0: min D = ") != std::string::npos);
  CHECK(r.output.find("omd start 0: min D = ") != std::string::npos);

  for (const char* method : {"md", "omd"}) {
    CAPTURE(method);
    const std::string stem = std::string("portrait-portrait-") + method + "-start0";
    const auto traj = load_trajectory_csv((out / (stem + ".csv")).string());
    CHECK(traj.rows.size() == 1);
    CHECK(traj.problem_label == "portrait");
    const auto meta = load_metadata_json((out / (stem + ".json")).string());
    CHECK(meta.figure == "phase portrait: vanilla vs optimistic mirror descent");
    CHECK(meta.step_spec == "const:0.10000000000000001");  // 17-digit round-trip of 0.1
  }
  CHECK(invoke("portrait --problem scc-quadratic").exit_code == 2);  // needs a 2-D problem
}
