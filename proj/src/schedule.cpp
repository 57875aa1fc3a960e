#include "sbench/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace sbench {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ConfigError("trailing characters in " + what + ": '" + s + "'");
    if (!std::isfinite(v)) throw ConfigError(what + " must be finite: '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    throw ConfigError("cannot parse " + what + ": '" + s + "'");
  } catch (const std::out_of_range&) {
    throw ConfigError(what + " out of range: '" + s + "'");
  }
}

}  // namespace

StepSchedule StepSchedule::constant(double gamma) {
  if (!(gamma > 0) || !std::isfinite(gamma)) throw ConfigError("constant step size must be finite and > 0");
  StepSchedule s;
  s.kind_ = Kind::Constant;
  s.c_ = gamma;
  return s;
}

StepSchedule StepSchedule::power(double c, double p) {
  if (!(c > 0) || !std::isfinite(c)) throw ConfigError("power schedule needs c > 0");
  if (!(p > 0) || !(p <= 1)) throw ConfigError("power schedule needs p in (0, 1]");
  StepSchedule s;
  s.kind_ = Kind::Power;
  s.c_ = c;
  s.p_ = p;
  return s;
}

StepSchedule StepSchedule::custom(std::vector<double> gammas) {
  if (gammas.empty()) throw ConfigError("custom schedule needs at least one step size");
  for (double g : gammas)
    if (!(g >= 0) || !std::isfinite(g)) throw ConfigError("custom step sizes must be finite and >= 0");
  StepSchedule s;
  s.kind_ = Kind::Custom;
  s.custom_ = std::move(gammas);
  return s;
}

double StepSchedule::step_at(int n) const {
  if (n < 1) throw IndexError("step index starts at 1");
  switch (kind_) {
    case Kind::Constant:
      return c_;
    case Kind::Power:
      return c_ / std::pow(static_cast<double>(n), p_);
    case Kind::Custom:
      if (static_cast<std::size_t>(n) > custom_.size())
        throw IndexError("custom schedule has only " + std::to_string(custom_.size()) + " entries");
      return custom_[static_cast<std::size_t>(n) - 1];
  }
  throw Error("unreachable schedule kind");
}

std::optional<double> StepSchedule::sum_squares_analytic() const {
  switch (kind_) {
    case Kind::Constant:
      return std::nullopt;  // diverges
    case Kind::Power:
      if (p_ > 0.5) return c_ * c_ * std::riemann_zeta(2 * p_);
      return std::nullopt;
    case Kind::Custom: {
      double s = 0;
      for (double g : custom_) s += g * g;
      return s;
    }
  }
  throw Error("unreachable schedule kind");
}

bool StepSchedule::sum_diverges() const {
  switch (kind_) {
    case Kind::Constant:
      return true;
    case Kind::Power:
      return true;  // p <= 1 by construction
    case Kind::Custom:
      return false;  // finite list
  }
  throw Error("unreachable schedule kind");
}

std::string StepSchedule::describe() const {
  switch (kind_) {
    case Kind::Constant:
      return "const:" + fmt_double(c_);
    case Kind::Power:
      return "power:c=" + fmt_double(c_) + ",p=" + fmt_double(p_);
    case Kind::Custom: {
      std::string s = "custom:[";
      for (std::size_t i = 0; i < custom_.size(); ++i) {
        if (i) s += ',';
        s += fmt_double(custom_[i]);
      }
      return s + "]";
    }
  }
  throw Error("unreachable schedule kind");
}

CertificationResult certify(const StepSchedule& schedule, const CertificationQuery& query) {
  CertificationResult r;
  using K = StepSchedule::Kind;
  if (query.hypothesis == CertificationQuery::Hypothesis::RobbinsMonro) {
    switch (schedule.kind()) {
      case K::Custom:
        r.verdict = CertificationResult::Verdict::Uncertifiable;
        r.violated_condition = "finite custom list carries no tail summability information";
        return r;
      case K::Constant:
        r.verdict = CertificationResult::Verdict::Fail;
        r.violated_condition = "sum of squared steps diverges";
        return r;
      case K::Power:
        if (schedule.power_p() <= 0.5) {
          r.verdict = CertificationResult::Verdict::Fail;
          r.violated_condition = "sum of squared steps diverges (p <= 1/2)";
          return r;
        }
        r.verdict = CertificationResult::Verdict::Pass;
        return r;
    }
    throw Error("unreachable schedule kind");
  }
  // OMDWindow: 0 < inf gamma <= sup gamma < alpha / L.
  if (!(query.alpha > 0) || !(query.L > 0)) {
    r.verdict = CertificationResult::Verdict::Uncertifiable;
    r.violated_condition = "window check needs alpha > 0 and a known L > 0";
    return r;
  }
  const double window = query.alpha / query.L;
  switch (schedule.kind()) {
    case K::Custom:
      r.verdict = CertificationResult::Verdict::Uncertifiable;
      r.violated_condition = "finite custom list carries no tail bound information";
      return r;
    case K::Constant:
      if (schedule.constant_value() < window) {
        r.verdict = CertificationResult::Verdict::Pass;
      } else {
        r.verdict = CertificationResult::Verdict::Fail;
        r.violated_condition = "sup gamma >= alpha/L";
      }
      return r;
    case K::Power:
      r.verdict = CertificationResult::Verdict::Fail;
      r.violated_condition = "inf gamma = 0 (power steps vanish)";
      return r;
  }
  throw Error("unreachable schedule kind");
}

StepSchedule parse_step_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ConfigError("step spec needs a family prefix: '" + spec + "'");
  const std::string family = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (family == "const") {
    return StepSchedule::constant(parse_double(rest, "constant step size"));
  }
  if (family == "power") {
    std::optional<double> c, p;
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      auto eq = item.find('=');
      if (eq == std::string::npos) throw ConfigError("power spec items must be k=v: '" + item + "'");
      std::string key = item.substr(0, eq);
      double val = parse_double(item.substr(eq + 1), "power parameter " + key);
      if (key == "c") {
        if (c) throw ConfigError("duplicate power parameter c");
        c = val;
      } else if (key == "p") {
        if (p) throw ConfigError("duplicate power parameter p");
        p = val;
      } else {
        throw ConfigError("unknown power parameter: '" + key + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (!c || !p) throw ConfigError("power spec needs both c and p");
    return StepSchedule::power(*c, *p);
  }
  if (family == "custom") {
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
      throw ConfigError("custom spec must be custom:[g1,g2,...]");
    std::string body = rest.substr(1, rest.size() - 2);
    std::vector<double> gammas;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      gammas.push_back(parse_double(item, "custom step size"));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return StepSchedule::custom(std::move(gammas));
  }
  throw ConfigError("unknown step family: '" + family + "'");
}

}  // namespace sbench
