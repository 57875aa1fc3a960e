#pragma once

#include <string>
#include <vector>

#include "sbench/adaptive.hpp"
#include "sbench/core.hpp"
#include "sbench/solver.hpp"

namespace sbench {

// Trajectory CSV: a '#'-prefixed identification line, a column-name row,
// then one row per recorded iteration. Values are written with 17
// significant digits ('.' decimal, scientific), so load/save round-trips
// byte-identically.
std::string trajectory_csv(const RunRecord& record);
void write_trajectory_csv(const RunRecord& record, const std::string& path);

struct LoadedTrajectory {
  std::string problem_label;
  std::string method;
  std::string geometry_name;
  std::vector<std::string> columns;
  std::vector<IterationRow> rows;
  int dim = 0;
  bool has_half = false;
  int solutions = 0;
};

LoadedTrajectory load_trajectory_csv(const std::string& path);

struct RunMetadata {
  std::string schema = "sbench-run/1";
  std::string problem_label;
  std::string method;
  std::string geometry_name;
  std::string step_spec;
  std::string oracle_mode;
  double sigma = 0;
  std::uint64_t seed = 0;
  int iterations = 0;
  int record_every = 1;
  std::uint64_t oracle_queries = 0;
  double duration_seconds = 0;
  std::vector<std::string> warnings;
  bool incomplete = false;
  Vec final_point;
  Vec final_ergodic;
  std::vector<double> final_bregman;
  std::vector<std::string> certifications;  // "hypothesis: verdict" lines
  std::string figure;  // set by the portrait command
};

std::string metadata_json(const RunMetadata& meta);
void write_metadata_json(const RunMetadata& meta, const std::string& path);
RunMetadata load_metadata_json(const std::string& path);

// Reassembles a RunRecord from a trajectory and its sibling metadata so the
// conformance checks can replay stored runs. Validates that both files
// describe the same run.
RunRecord to_run_record(const LoadedTrajectory& trajectory, const RunMetadata& meta);

std::string adaptive_csv(const AdaptiveRunRecord& record);
void write_adaptive_csv(const AdaptiveRunRecord& record, const std::string& path);

// %.16e rendering shared by every CSV writer.
std::string format_value(double v);

}  // namespace sbench
