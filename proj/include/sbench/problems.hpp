#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sbench/core.hpp"
#include "sbench/geometry.hpp"

namespace sbench {

enum class CoherenceClass { Strict, Null, Coherent, Unknown };

std::string to_string(CoherenceClass c);

// A benchmark saddle-point problem: value f, joint gradient field
// g(x) = (d f / d x1, -d f / d x2), optional Lipschitz constant of g,
// known solutions, and the declared coherence class.
struct Problem {
  std::string label;
  ProductSet set;
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient_field;
  std::optional<double> lipschitz_g;
  std::vector<Vec> solutions;
  CoherenceClass coherence_class = CoherenceClass::Unknown;
  std::vector<Dgf> default_dgf;  // per block

  Geometry default_geometry() const { return Geometry(set, default_dgf); }
  int dim() const { return set.total_dim(); }
  // <g(x), x - sol>: the quantity whose sign drives the coherence taxonomy.
  double vi_residual(const Vec& x, const Vec& sol) const;
};

Problem builtin_matching_pennies();
Problem builtin_portrait_problem();
Problem builtin_nonmonotone_example();
Problem builtin_strictly_convex_concave(int dim, double curvature);
Problem builtin_simplex_game(const Mat& payoff);

// CLI-addressable labels.
std::vector<std::string> problem_labels();
Problem problem_by_label(const std::string& label);

// Max over seeded random pairs of ||g(x) - g(x')||_* / ||x - x'||, in the
// problem's default geometry pairing; a lower estimate of L.
double estimate_lipschitz(const Problem& problem, int samples, std::uint64_t seed);

// Damped Newton on a finite-difference Jacobian for g(x) = 0; this is the
// locator that froze the portrait problem's solution coordinates.
Vec newton_zero(const std::function<Vec(const Vec&)>& field, Vec x, double tol = 1e-12,
                int max_iters = 100);

struct SamplingPlan {
  enum class Kind { Grid, Random };
  Kind kind = Kind::Random;
  int grid_points_per_axis = 101;  // Grid
  int samples = 4096;              // Random
  std::uint64_t seed = 1;

  static SamplingPlan grid(int points_per_axis);
  static SamplingPlan random(int samples, std::uint64_t seed);
};

// Deterministic point sample of the feasible set per the plan. Grid plans
// enumerate boxes coordinatewise and simplices by compositions.
std::vector<Vec> sample_set(const ProductSet& set, const SamplingPlan& plan);

struct SolutionResiduals {
  double min = 0, max = 0, mean = 0;
  double min_off_ball = 0;  // min over sample points farther than 0.05 from x*
};

struct ProbeReport {
  std::vector<SolutionResiduals> per_solution;
  double min_residual = 0, max_residual = 0, mean_residual = 0;
  CoherenceClass declared = CoherenceClass::Unknown;
  CoherenceClass classification = CoherenceClass::Unknown;
  bool inconclusive = false;  // declared class contradicted by the sample
  std::size_t sample_size = 0;
};

// Classifies the VI residual profile over the sampling plan.
// Thresholds: Null needs |residual| <= 1e-9 everywhere; Strict needs
// residual >= 1e-6 off a radius-0.05 ball around every solution; Coherent
// needs residual >= -1e-9 everywhere. A declared class is verified against
// its predicate and contradictions are flagged inconclusive rather than
// silently reclassified; discovery (most specific passing class) applies
// when the declared class is Unknown.
ProbeReport coherence_probe(const Problem& problem, const SamplingPlan& plan);

}  // namespace sbench
