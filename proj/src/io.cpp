#include "sbench/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sbench {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << content;
  if (!out) throw ConfigError("write failed for '" + path + "'");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

double parse_csv_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) throw ConfigError("malformed CSV value '" + s + "'");
  return v;
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Vec vec_from_json(const Json& a) {
  Vec v(static_cast<Eigen::Index>(a.size()));
  Eigen::Index i = 0;
  for (const auto& x : a) v[i++] = x.get<double>();
  return v;
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string trajectory_csv(const RunRecord& record) {
  const bool has_half = record.method == Method::OptimisticMirrorDescent;
  const int dim = static_cast<int>(record.final_point.size());
  const int sols = static_cast<int>(record.final_bregman.size());

  std::string out = "# sbench-trajectory v1 problem=" + record.problem_label +
                    " method=" + to_string(record.method) + " geometry=" + record.geometry_name + "\n";
  out += "n,gamma";
  for (int i = 1; i <= dim; ++i) out += ",x" + std::to_string(i);
  if (has_half)
    for (int i = 1; i <= dim; ++i) out += ",half" + std::to_string(i);
  for (int i = 1; i <= dim; ++i) out += ",xbar" + std::to_string(i);
  for (int s = 1; s <= sols; ++s) out += ",D" + std::to_string(s);
  out += "\n";

  for (const auto& row : record.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_value(row.gamma);
    for (Eigen::Index i = 0; i < row.x.size(); ++i) {
      out += ',';
      out += format_value(row.x[i]);
    }
    if (has_half) {
      if (!row.half) throw MissingHalfStep("omd record row lacks its half step");
      for (Eigen::Index i = 0; i < row.half->size(); ++i) {
        out += ',';
        out += format_value((*row.half)[i]);
      }
    }
    for (Eigen::Index i = 0; i < row.ergodic.size(); ++i) {
      out += ',';
      out += format_value(row.ergodic[i]);
    }
    for (double d : row.bregman_to_solutions) {
      out += ',';
      out += format_value(d);
    }
    out += '\n';
  }
  return out;
}

void write_trajectory_csv(const RunRecord& record, const std::string& path) {
  write_file(path, trajectory_csv(record));
}

LoadedTrajectory load_trajectory_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("'" + path + "' is empty");
  const std::string magic = "# sbench-trajectory v1 ";
  if (line.rfind(magic, 0) != 0) throw ConfigError("'" + path + "' is not a trajectory CSV");

  LoadedTrajectory t;
  for (const auto& token : split(line.substr(magic.size()), ' ')) {
    auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = token.substr(0, eq), value = token.substr(eq + 1);
    if (key == "problem") t.problem_label = value;
    else if (key == "method") t.method = value;
    else if (key == "geometry") t.geometry_name = value;
  }
  if (t.problem_label.empty() || t.method.empty())
    throw ConfigError("trajectory header misses problem/method in '" + path + "'");

  if (!std::getline(in, line)) throw ConfigError("'" + path + "' lacks a column row");
  t.columns = split(line, ',');
  int dim = 0, half_dim = 0, xbar_dim = 0, sols = 0;
  for (const auto& c : t.columns) {
    if (c.rfind("x", 0) == 0 && c.rfind("xbar", 0) != 0) ++dim;
    else if (c.rfind("half", 0) == 0) ++half_dim;
    else if (c.rfind("xbar", 0) == 0) ++xbar_dim;
    else if (c.rfind("D", 0) == 0) ++sols;
  }
  if (dim < 1 || xbar_dim != dim || (half_dim != 0 && half_dim != dim))
    throw ConfigError("inconsistent trajectory columns in '" + path + "'");
  t.dim = dim;
  t.has_half = half_dim > 0;
  t.solutions = sols;
  const std::size_t expected = 2 + static_cast<std::size_t>(dim + half_dim + xbar_dim + sols);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != expected) throw ConfigError("malformed trajectory row in '" + path + "'");
    IterationRow row;
    std::size_t k = 0;
    row.n = static_cast<int>(parse_csv_double(cells[k++]));
    row.gamma = parse_csv_double(cells[k++]);
    row.x = Vec(dim);
    for (int i = 0; i < dim; ++i) row.x[i] = parse_csv_double(cells[k++]);
    if (t.has_half) {
      Vec h(dim);
      for (int i = 0; i < dim; ++i) h[i] = parse_csv_double(cells[k++]);
      row.half = std::move(h);
    }
    row.ergodic = Vec(dim);
    for (int i = 0; i < dim; ++i) row.ergodic[i] = parse_csv_double(cells[k++]);
    row.bregman_to_solutions.resize(static_cast<std::size_t>(sols));
    for (int s = 0; s < sols; ++s) row.bregman_to_solutions[static_cast<std::size_t>(s)] = parse_csv_double(cells[k++]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string metadata_json(const RunMetadata& meta) {
  Json j;
  j["schema"] = meta.schema;
  j["problem"] = meta.problem_label;
  j["method"] = meta.method;
  j["geometry"] = meta.geometry_name;
  j["step"] = meta.step_spec;
  j["oracle"] = meta.oracle_mode;
  j["sigma"] = meta.sigma;
  j["seed"] = meta.seed;
  j["iterations"] = meta.iterations;
  j["record_every"] = meta.record_every;
  j["oracle_queries"] = meta.oracle_queries;
  j["duration_seconds"] = meta.duration_seconds;
  j["warnings"] = meta.warnings;
  j["incomplete"] = meta.incomplete;
  j["final_point"] = vec_to_json(meta.final_point);
  j["final_ergodic"] = vec_to_json(meta.final_ergodic);
  j["final_bregman"] = meta.final_bregman;
  j["certifications"] = meta.certifications;
  if (!meta.figure.empty()) j["figure"] = meta.figure;
  return j.dump(2) + "\n";
}

void write_metadata_json(const RunMetadata& meta, const std::string& path) {
  write_file(path, metadata_json(meta));
}

RunMetadata load_metadata_json(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ConfigError("cannot parse '" + path + "': " + e.what());
  }
  RunMetadata m;
  try {
    m.schema = j.at("schema").get<std::string>();
    if (m.schema != "sbench-run/1") throw ConfigError("unsupported metadata schema '" + m.schema + "'");
    m.problem_label = j.at("problem").get<std::string>();
    m.method = j.at("method").get<std::string>();
    m.geometry_name = j.value("geometry", "");
    m.step_spec = j.at("step").get<std::string>();
    m.oracle_mode = j.value("oracle", "exact");
    m.sigma = j.value("sigma", 0.0);
    m.seed = j.value("seed", std::uint64_t{0});
    m.iterations = j.at("iterations").get<int>();
    m.record_every = j.value("record_every", 1);
    m.oracle_queries = j.value("oracle_queries", std::uint64_t{0});
    m.duration_seconds = j.value("duration_seconds", 0.0);
    m.warnings = j.value("warnings", std::vector<std::string>{});
    m.incomplete = j.value("incomplete", false);
    m.final_point = vec_from_json(j.at("final_point"));
    m.final_ergodic = vec_from_json(j.at("final_ergodic"));
    m.final_bregman = j.at("final_bregman").get<std::vector<double>>();
    m.certifications = j.value("certifications", std::vector<std::string>{});
    m.figure = j.value("figure", "");
  } catch (const Json::exception& e) {
    throw ConfigError("metadata '" + path + "' misses required fields: " + e.what());
  }
  return m;
}

RunRecord to_run_record(const LoadedTrajectory& trajectory, const RunMetadata& meta) {
  if (trajectory.problem_label != meta.problem_label || trajectory.method != meta.method)
    throw ConfigError("trajectory and metadata describe different runs");
  if (static_cast<int>(meta.final_point.size()) != trajectory.dim)
    throw ConfigError("trajectory and metadata disagree on dimension");
  RunRecord record;
  record.problem_label = trajectory.problem_label;
  record.method = method_from_string(trajectory.method);
  record.geometry_name = trajectory.geometry_name;
  record.rows = trajectory.rows;
  record.final_point = meta.final_point;
  record.final_ergodic = meta.final_ergodic;
  record.final_bregman = meta.final_bregman;
  record.oracle_queries = meta.oracle_queries;
  record.duration_seconds = meta.duration_seconds;
  record.warnings = meta.warnings;
  record.incomplete = meta.incomplete;
  record.record_every = meta.record_every;
  record.iterations = meta.iterations;
  return record;
}

std::string adaptive_csv(const AdaptiveRunRecord& record) {
  const bool has_dist = !record.rows.empty() && record.rows.front().distance_to_solution.has_value();
  const int dim = static_cast<int>(record.final_theta.size());
  std::string out = "# sbench-adaptive v1 optimizer=" + to_string(record.optimizer) + "\n";
  out += "n,lr";
  for (int i = 1; i <= dim; ++i) out += ",theta" + std::to_string(i);
  if (has_dist) out += ",dist";
  out += "\n";
  for (const auto& row : record.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += format_value(row.lr);
    for (Eigen::Index i = 0; i < row.theta.size(); ++i) {
      out += ',';
      out += format_value(row.theta[i]);
    }
    if (has_dist) {
      out += ',';
      out += format_value(row.distance_to_solution.value_or(0.0));
    }
    out += '\n';
  }
  return out;
}

void write_adaptive_csv(const AdaptiveRunRecord& record, const std::string& path) {
  write_file(path, adaptive_csv(record));
}

}  // namespace sbench
