#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbench/core.hpp"

namespace sbench {

// Step-size sequence gamma_n, n = 1, 2, ...
// Power means gamma_n = c / n^p with p in (0, 1].
class StepSchedule {
 public:
  enum class Kind { Constant, Power, Custom };

  static StepSchedule constant(double gamma);
  static StepSchedule power(double c, double p);
  static StepSchedule custom(std::vector<double> gammas);

  Kind kind() const { return kind_; }
  double constant_value() const { return c_; }
  double power_c() const { return c_; }
  double power_p() const { return p_; }
  const std::vector<double>& custom_values() const { return custom_; }

  // 1-indexed; IndexError past the end of a custom list.
  double step_at(int n) const;

  // sum gamma_n^2 in closed form: Power with p > 1/2 via the zeta function,
  // Custom as a finite sum, infinity otherwise (nullopt).
  std::optional<double> sum_squares_analytic() const;
  bool sum_diverges() const;  // sum gamma_n = infinity

  std::string describe() const;  // round-trips through parse_step_spec

 private:
  Kind kind_ = Kind::Constant;
  double c_ = 0, p_ = 0;
  std::vector<double> custom_;
};

struct CertificationQuery {
  enum class Hypothesis { RobbinsMonro, OMDWindow };
  Hypothesis hypothesis = Hypothesis::RobbinsMonro;
  double alpha = 1.0;  // OMDWindow
  double L = 0.0;      // OMDWindow
};

struct CertificationResult {
  enum class Verdict { Pass, Fail, Uncertifiable };
  Verdict verdict = Verdict::Uncertifiable;
  std::string violated_condition;  // empty on Pass
};

// Symbolic check of the step hypotheses: Robbins-Monro needs sum gamma = inf
// and sum gamma^2 < inf; the OMD window needs 0 < inf gamma <= sup gamma
// < alpha / L. Custom lists are finite truncations, so both hypotheses are
// about the (absent) tail: Uncertifiable.
CertificationResult certify(const StepSchedule& schedule, const CertificationQuery& query);

// "const:<gamma>" | "power:c=<c>,p=<p>" | "custom:[g1,g2,...]".
// Malformed specs raise ConfigError.
StepSchedule parse_step_spec(const std::string& spec);

}  // namespace sbench
