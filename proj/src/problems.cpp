#include "sbench/problems.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

namespace sbench {

std::string to_string(CoherenceClass c) {
  switch (c) {
    case CoherenceClass::Strict: return "Strict";
    case CoherenceClass::Null: return "Null";
    case CoherenceClass::Coherent: return "Coherent";
    case CoherenceClass::Unknown: return "Unknown";
  }
  throw Error("unreachable coherence class");
}

double Problem::vi_residual(const Vec& x, const Vec& sol) const {
  if (x.size() != sol.size() || x.size() != dim()) throw DimensionMismatch("vi_residual dimension mismatch");
  return gradient_field(x).dot(x - sol);
}

Problem builtin_matching_pennies() {
  Problem p;
  p.label = "matching-pennies";
  p.set = ProductSet({FeasibleBlock::box(Vec::Zero(1), Vec::Ones(1)),
                      FeasibleBlock::box(Vec::Zero(1), Vec::Ones(1))},
                     {1, 2});
  p.value = [](const Vec& x) { return (x[0] - 0.5) * (x[1] - 0.5); };
  p.gradient_field = [](const Vec& x) {
    Vec g(2);
    g[0] = x[1] - 0.5;
    g[1] = -(x[0] - 0.5);
    return g;
  };
  p.lipschitz_g = 1.0;  // rotation field, operator norm 1
  Vec sol(2);
  sol << 0.5, 0.5;
  p.solutions = {sol};
  p.coherence_class = CoherenceClass::Null;
  p.default_dgf = {Dgf::EuclideanHalfSquaredNorm, Dgf::EuclideanHalfSquaredNorm};
  return p;
}

namespace {

// Bilinear term plus one Gaussian bump; the bump's curvature dominates the
// field's Jacobian, whose operator norm peaks at exactly 5/3.
constexpr double kPortraitSolX1 = 0.40278777035546204;
constexpr double kPortraitSolX2 = 0.5972122296445379;

double portrait_bump(double x1, double x2) {
  return std::exp(-(x1 - 0.25) * (x1 - 0.25) - (x2 - 0.75) * (x2 - 0.75));
}

}  // namespace

Problem builtin_portrait_problem() {
  Problem p;
  p.label = "portrait";
  p.set = ProductSet({FeasibleBlock::box(Vec::Zero(1), Vec::Ones(1)),
                      FeasibleBlock::box(Vec::Zero(1), Vec::Ones(1))},
                     {1, 2});
  p.value = [](const Vec& x) {
    return (x[0] - 0.5) * (x[1] - 0.5) + portrait_bump(x[0], x[1]) / 3.0;
  };
  p.gradient_field = [](const Vec& x) {
    const double e = portrait_bump(x[0], x[1]);
    Vec g(2);
    g[0] = (x[1] - 0.5) - 2.0 / 3.0 * (x[0] - 0.25) * e;
    g[1] = -((x[0] - 0.5) - 2.0 / 3.0 * (x[1] - 0.75) * e);
    return g;
  };
  p.lipschitz_g = 5.0 / 3.0;
  Vec sol(2);
  sol << kPortraitSolX1, kPortraitSolX2;  // zero of g located by damped Newton from (1/2, 1/2)
  p.solutions = {sol};
  p.coherence_class = CoherenceClass::Coherent;
  p.default_dgf = {Dgf::EuclideanHalfSquaredNorm, Dgf::EuclideanHalfSquaredNorm};
  return p;
}

Problem builtin_nonmonotone_example() {
  Problem p;
  p.label = "nonmonotone-ex2";
  p.set = ProductSet({FeasibleBlock::box(-Vec::Ones(1), Vec::Ones(1)),
                      FeasibleBlock::box(-Vec::Ones(1), Vec::Ones(1))},
                     {1, 2});
  p.value = [](const Vec& x) {
    const double a = x[0], b = x[1];
    const double u = a * a * a * a * b * b + a * a + 1;
    const double v = a * a * b * b * b * b - b * b + 1;
    return u * v;
  };
  p.gradient_field = [](const Vec& x) {
    const double a = x[0], b = x[1];
    const double u = a * a * a * a * b * b + a * a + 1;
    const double v = a * a * b * b * b * b - b * b + 1;
    const double du1 = 4 * a * a * a * b * b + 2 * a;
    const double du2 = 2 * a * a * a * a * b;
    const double dv1 = 2 * a * b * b * b * b;
    const double dv2 = 4 * a * a * b * b * b - 2 * b;
    Vec g(2);
    g[0] = du1 * v + u * dv1;
    g[1] = -(du2 * v + u * dv2);
    return g;
  };
  Vec sol = Vec::Zero(2);
  p.solutions = {sol};
  p.coherence_class = CoherenceClass::Coherent;
  p.default_dgf = {Dgf::EuclideanHalfSquaredNorm, Dgf::EuclideanHalfSquaredNorm};
  return p;
}

Problem builtin_strictly_convex_concave(int dim, double curvature) {
  if (dim < 1) throw ConfigError("strictly convex-concave builtin needs dim >= 1");
  if (!(curvature > 0) || !std::isfinite(curvature))
    throw ConfigError("strictly convex-concave builtin needs curvature > 0");

  Vec c1(dim), c2(dim);
  for (int i = 0; i < dim; ++i) {
    c1[i] = 0.35 + 0.25 * (i % 2);
    c2[i] = 0.65 - 0.25 * (i % 2);
  }
  // Fixed small coupling pattern; halved until the saddle is interior.
  static constexpr double kPattern[8] = {0.05, -0.03, 0.02, 0.04, -0.04, 0.01, -0.02, 0.03};
  Mat B(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) B(i, j) = kPattern[(i * dim + j) % 8];

  // Interior saddle solves the linear stationarity system
  //   curvature (x1 - c1) + B x2 = 0,   curvature (x2 - c2) - B^T x1 = 0.
  Vec saddle;
  bool interior = false;
  for (int attempt = 0; attempt < 40 && !interior; ++attempt) {
    Mat K = Mat::Zero(2 * dim, 2 * dim);
    K.topLeftCorner(dim, dim) = curvature * Mat::Identity(dim, dim);
    K.topRightCorner(dim, dim) = B;
    K.bottomLeftCorner(dim, dim) = -B.transpose();
    K.bottomRightCorner(dim, dim) = curvature * Mat::Identity(dim, dim);
    Vec rhs(2 * dim);
    rhs.head(dim) = curvature * c1;
    rhs.tail(dim) = curvature * c2;
    saddle = K.partialPivLu().solve(rhs);
    interior = (saddle.array() > 1e-6).all() && (saddle.array() < 1.0 - 1e-6).all();
    if (!interior) B *= 0.5;
  }
  if (!interior) throw ConfigError("could not place an interior saddle for the quadratic builtin");

  const double b_norm = Eigen::JacobiSVD<Mat>(B).singularValues()[0];

  Problem p;
  p.label = "scc-quadratic";
  p.set = ProductSet({FeasibleBlock::box(Vec::Zero(dim), Vec::Ones(dim)),
                      FeasibleBlock::box(Vec::Zero(dim), Vec::Ones(dim))},
                     {1, 2});
  const double kappa = curvature;
  const Mat Bf = B;
  const Vec c1f = c1, c2f = c2;
  const int d = dim;
  p.value = [kappa, Bf, c1f, c2f, d](const Vec& x) {
    Vec x1 = x.head(d), x2 = x.tail(d);
    return 0.5 * kappa * (x1 - c1f).squaredNorm() - 0.5 * kappa * (x2 - c2f).squaredNorm() +
           x1.dot(Bf * x2);
  };
  p.gradient_field = [kappa, Bf, c1f, c2f, d](const Vec& x) {
    Vec x1 = x.head(d), x2 = x.tail(d);
    Vec g(2 * d);
    g.head(d) = kappa * (x1 - c1f) + Bf * x2;
    g.tail(d) = kappa * (x2 - c2f) - Bf.transpose() * x1;
    return g;
  };
  // Jacobian = kappa I + skew coupling; operator norm sqrt(kappa^2 + s_max(B)^2).
  p.lipschitz_g = std::sqrt(kappa * kappa + b_norm * b_norm);
  p.solutions = {saddle};
  p.coherence_class = CoherenceClass::Strict;
  p.default_dgf = std::vector<Dgf>(2, Dgf::EuclideanHalfSquaredNorm);
  return p;
}

namespace {

struct EquilibriumSet {
  std::vector<Vec> profiles;  // concatenated (x1, x2)
  bool interior_found = false;
};

// Support enumeration for the zero-sum game min_{x1} max_{x2} x1' A x2:
// equal-size supports, indifference systems for each side, then feasibility
// and deviation checks within tol.
EquilibriumSet enumerate_equilibria(const Mat& A, double tol) {
  const int n = static_cast<int>(A.rows());
  const int m = static_cast<int>(A.cols());
  EquilibriumSet out;
  auto push_unique = [&](const Vec& prof) {
    for (const Vec& q : out.profiles)
      if ((q - prof).lpNorm<Eigen::Infinity>() < 1e-9) return;
    out.profiles.push_back(prof);
  };

  for (unsigned s1 = 1; s1 < (1u << n); ++s1) {
    const int k = std::popcount(s1);
    if (k > std::min(n, m)) continue;
    for (unsigned s2 = 1; s2 < (1u << m); ++s2) {
      if (std::popcount(s2) != k) continue;
      std::vector<int> rows, cols;
      for (int i = 0; i < n; ++i)
        if (s1 & (1u << i)) rows.push_back(i);
      for (int j = 0; j < m; ++j)
        if (s2 & (1u << j)) cols.push_back(j);

      // Column player: A_{S1,S2} x2 = v 1, sum x2 = 1.
      Mat M2 = Mat::Zero(k + 1, k + 1);
      Vec b2 = Vec::Zero(k + 1);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) M2(i, j) = A(rows[i], cols[j]);
        M2(i, k) = -1;
      }
      M2.row(k).head(k).setOnes();
      b2[k] = 1;
      Eigen::FullPivLU<Mat> lu2(M2);
      if (!lu2.isInvertible()) continue;
      Vec sol2 = lu2.solve(b2);

      // Row player: A_{S1,S2}^T x1 = v 1, sum x1 = 1.
      Mat M1 = Mat::Zero(k + 1, k + 1);
      Vec b1 = Vec::Zero(k + 1);
      for (int j = 0; j < k; ++j) {
        for (int i = 0; i < k; ++i) M1(j, i) = A(rows[i], cols[j]);
        M1(j, k) = -1;
      }
      M1.row(k).head(k).setOnes();
      b1[k] = 1;
      Eigen::FullPivLU<Mat> lu1(M1);
      if (!lu1.isInvertible()) continue;
      Vec sol1 = lu1.solve(b1);

      const double v = sol2[k];
      if (std::abs(sol1[k] - v) > tol) continue;

      Vec x1 = Vec::Zero(n), x2 = Vec::Zero(m);
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        if (sol1[i] < -tol) ok = false;
        x1[rows[i]] = std::max(sol1[i], 0.0);
      }
      for (int j = 0; j < k && ok; ++j) {
        if (sol2[j] < -tol) ok = false;
        x2[cols[j]] = std::max(sol2[j], 0.0);
      }
      if (!ok) continue;
      x1 /= x1.sum();
      x2 /= x2.sum();

      Vec row_payoff = A * x2;       // minimizer deviations: must be >= v
      Vec col_payoff = A.transpose() * x1;  // maximizer deviations: must be <= v
      for (int i = 0; i < n && ok; ++i)
        if (row_payoff[i] < v - tol) ok = false;
      for (int j = 0; j < m && ok; ++j)
        if (col_payoff[j] > v + tol) ok = false;
      if (!ok) continue;

      Vec prof(n + m);
      prof << x1, x2;
      push_unique(prof);
      if ((x1.array() > 1e-9).all() && (x2.array() > 1e-9).all()) out.interior_found = true;
    }
  }
  return out;
}

}  // namespace

Problem builtin_simplex_game(const Mat& payoff) {
  if (payoff.rows() < 1 || payoff.cols() < 1) throw DimensionMismatch("payoff matrix must be nonempty");
  if (!payoff.allFinite()) throw NonFiniteInput("payoff matrix must be finite");
  const int n = static_cast<int>(payoff.rows());
  const int m = static_cast<int>(payoff.cols());

  Problem p;
  p.label = "simplex-game";
  p.set = ProductSet({FeasibleBlock::simplex(n), FeasibleBlock::simplex(m)}, {1, 2});
  const Mat A = payoff;
  p.value = [A, n, m](const Vec& x) { return x.head(n).dot(A * x.tail(m)); };
  p.gradient_field = [A, n, m](const Vec& x) {
    Vec g(n + m);
    g.head(n) = A * x.tail(m);
    g.tail(m) = -(A.transpose() * x.head(n));
    return g;
  };
  // Jacobian is the skew coupling alone; the dual pairing here is L-inf, so
  // this L2 operator norm is an upper bound in the entropic pairing too.
  p.lipschitz_g = Eigen::JacobiSVD<Mat>(A).singularValues()[0];
  p.default_dgf = {Dgf::NegativeEntropy, Dgf::NegativeEntropy};

  if (A.cwiseAbs().maxCoeff() == 0.0) {
    // Zero payoff: every profile is an equilibrium; report the uniform one.
    Vec prof(n + m);
    prof.head(n).setConstant(1.0 / n);
    prof.tail(m).setConstant(1.0 / m);
    p.solutions = {prof};
    p.coherence_class = CoherenceClass::Null;
    return p;
  }
  if (n > 4 || m > 4) {
    p.coherence_class = CoherenceClass::Unknown;  // too large for support enumeration
    return p;
  }
  EquilibriumSet eq = enumerate_equilibria(A, 1e-9);
  p.solutions = eq.profiles;
  p.coherence_class = eq.interior_found ? CoherenceClass::Null : CoherenceClass::Coherent;
  return p;
}

std::vector<std::string> problem_labels() {
  return {"matching-pennies", "portrait", "nonmonotone-ex2", "scc-quadratic", "simplex-game"};
}

Problem problem_by_label(const std::string& label) {
  if (label == "matching-pennies") return builtin_matching_pennies();
  if (label == "portrait") return builtin_portrait_problem();
  if (label == "nonmonotone-ex2") return builtin_nonmonotone_example();
  if (label == "scc-quadratic") return builtin_strictly_convex_concave(2, 1.0);
  if (label == "simplex-game") {
    Mat A(2, 2);
    A << 1, -1, -1, 1;
    return builtin_simplex_game(A);
  }
  std::string known;
  for (const auto& l : problem_labels()) known += " " + l;
  throw ConfigError("unknown problem label '" + label + "'; known:" + known);
}

double estimate_lipschitz(const Problem& problem, int samples, std::uint64_t seed) {
  if (samples < 2) throw ConfigError("lipschitz estimate needs at least 2 samples");
  const Geometry geom = problem.default_geometry();
  auto pts = sample_set(problem.set, SamplingPlan::random(2 * samples, seed));
  double best = 0;
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    const Vec dx = pts[i] - pts[i + 1];
    const double dist = geom.primal_norm(dx);
    if (dist < 1e-12) continue;
    const Vec dg = problem.gradient_field(pts[i]) - problem.gradient_field(pts[i + 1]);
    best = std::max(best, geom.dual_norm(dg) / dist);
  }
  return best;
}

Vec newton_zero(const std::function<Vec(const Vec&)>& field, Vec x, double tol, int max_iters) {
  const int d = static_cast<int>(x.size());
  for (int iter = 0; iter < max_iters; ++iter) {
    Vec g = field(x);
    if (!all_finite(g)) throw NonFiniteGradient("field returned a non-finite value");
    const double norm = g.lpNorm<Eigen::Infinity>();
    if (norm <= tol) return x;
    Mat J(d, d);
    const double h = 1e-7;
    for (int j = 0; j < d; ++j) {
      Vec xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      J.col(j) = (field(xp) - field(xm)) / (2 * h);
    }
    Vec delta = J.fullPivLu().solve(g);
    double t = 1.0;
    for (int back = 0; back < 60; ++back) {
      Vec trial = x - t * delta;
      if (field(trial).lpNorm<Eigen::Infinity>() < (1 - 1e-4 * t) * norm) {
        x = trial;
        break;
      }
      t *= 0.5;
      if (back == 59) throw Error("newton line search stalled");
    }
  }
  throw Error("newton did not reach tolerance");
}

SamplingPlan SamplingPlan::grid(int points_per_axis) {
  if (points_per_axis < 2) throw ConfigError("grid plans need at least 2 points per axis");
  SamplingPlan p;
  p.kind = Kind::Grid;
  p.grid_points_per_axis = points_per_axis;
  return p;
}

SamplingPlan SamplingPlan::random(int samples, std::uint64_t seed) {
  if (samples < 1) throw ConfigError("random plans need at least 1 sample");
  SamplingPlan p;
  p.kind = Kind::Random;
  p.samples = samples;
  p.seed = seed;
  return p;
}

namespace {

std::vector<Vec> block_grid(const FeasibleBlock& block, int g) {
  const int d = block.dim();
  std::vector<Vec> pts;
  switch (block.kind) {
    case FeasibleBlock::Kind::Box: {
      std::vector<int> idx(d, 0);
      while (true) {
        Vec v(d);
        for (int i = 0; i < d; ++i) {
          const double t = static_cast<double>(idx[i]) / (g - 1);
          v[i] = block.lower[i] + t * (block.upper[i] - block.lower[i]);
        }
        pts.push_back(v);
        int i = 0;
        for (; i < d; ++i) {
          if (++idx[i] < g) break;
          idx[i] = 0;
        }
        if (i == d) break;
      }
      return pts;
    }
    case FeasibleBlock::Kind::Ball: {
      std::vector<int> idx(d, 0);
      while (true) {
        Vec v(d);
        for (int i = 0; i < d; ++i) {
          const double t = static_cast<double>(idx[i]) / (g - 1);
          v[i] = block.center[i] - block.radius + 2 * block.radius * t;
        }
        if ((v - block.center).norm() <= block.radius) pts.push_back(v);
        int i = 0;
        for (; i < d; ++i) {
          if (++idx[i] < g) break;
          idx[i] = 0;
        }
        if (i == d) break;
      }
      if (pts.empty()) pts.push_back(block.center);
      return pts;
    }
    case FeasibleBlock::Kind::Simplex: {
      // Compositions of g-1 into d parts, scaled to the unit simplex.
      const int total = g - 1;
      std::vector<int> part(d, 0);
      std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == d - 1) {
          part[pos] = remaining;
          Vec v(d);
          for (int i = 0; i < d; ++i) v[i] = static_cast<double>(part[i]) / total;
          pts.push_back(v);
          return;
        }
        for (int take = 0; take <= remaining; ++take) {
          part[pos] = take;
          rec(pos + 1, remaining - take);
        }
      };
      if (d == 1) {
        pts.push_back(Vec::Ones(1));
      } else {
        rec(0, total);
      }
      return pts;
    }
  }
  throw Error("unreachable block kind");
}

Vec random_block_point(const FeasibleBlock& block, std::mt19937_64& rng) {
  const int d = block.dim();
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  Vec v(d);
  switch (block.kind) {
    case FeasibleBlock::Kind::Box:
      for (int i = 0; i < d; ++i) v[i] = block.lower[i] + unif(rng) * (block.upper[i] - block.lower[i]);
      return v;
    case FeasibleBlock::Kind::Ball: {
      for (int i = 0; i < d; ++i) v[i] = normal(rng);
      double norm = v.norm();
      if (norm < 1e-300) return block.center;
      const double r = block.radius * std::pow(unif(rng), 1.0 / d);
      return block.center + (r / norm) * v;
    }
    case FeasibleBlock::Kind::Simplex: {
      double sum = 0;
      for (int i = 0; i < d; ++i) {
        v[i] = expo(rng);
        sum += v[i];
      }
      return v / sum;
    }
  }
  throw Error("unreachable block kind");
}

}  // namespace

std::vector<Vec> sample_set(const ProductSet& set, const SamplingPlan& plan) {
  std::vector<Vec> out;
  if (plan.kind == SamplingPlan::Kind::Random) {
    std::mt19937_64 rng(plan.seed);
    out.reserve(plan.samples);
    for (int s = 0; s < plan.samples; ++s) {
      Vec v(set.total_dim());
      for (std::size_t b = 0; b < set.blocks.size(); ++b) {
        const auto [offset, length] = set.span(b);
        v.segment(offset, length) = random_block_point(set.blocks[b], rng);
      }
      out.push_back(std::move(v));
    }
    return out;
  }
  // Grid: cartesian product of per-block grids.
  std::vector<std::vector<Vec>> grids;
  std::size_t total = 1;
  for (const auto& block : set.blocks) {
    grids.push_back(block_grid(block, plan.grid_points_per_axis));
    total *= grids.back().size();
    if (total > 5'000'000) throw ConfigError("grid plan exceeds 5e6 points; reduce --grid");
  }
  out.reserve(total);
  std::vector<std::size_t> idx(grids.size(), 0);
  while (true) {
    Vec v(set.total_dim());
    for (std::size_t b = 0; b < grids.size(); ++b) {
      const auto [offset, length] = set.span(b);
      v.segment(offset, length) = grids[b][idx[b]];
    }
    out.push_back(std::move(v));
    std::size_t b = 0;
    for (; b < grids.size(); ++b) {
      if (++idx[b] < grids[b].size()) break;
      idx[b] = 0;
    }
    if (b == grids.size()) break;
  }
  return out;
}

ProbeReport coherence_probe(const Problem& problem, const SamplingPlan& plan) {
  if (problem.solutions.empty()) throw ConfigError("coherence probe needs listed solutions");
  const Geometry geom = problem.default_geometry();
  const auto sample = sample_set(problem.set, plan);

  ProbeReport report;
  report.declared = problem.coherence_class;
  report.sample_size = sample.size();
  report.min_residual = std::numeric_limits<double>::infinity();
  report.max_residual = -std::numeric_limits<double>::infinity();
  double mean_acc = 0;
  double strict_floor = std::numeric_limits<double>::infinity();

  for (const Vec& sol : problem.solutions) {
    SolutionResiduals sr;
    sr.min = std::numeric_limits<double>::infinity();
    sr.max = -std::numeric_limits<double>::infinity();
    sr.min_off_ball = std::numeric_limits<double>::infinity();
    double acc = 0;
    for (const Vec& x : sample) {
      const double r = problem.vi_residual(x, sol);
      sr.min = std::min(sr.min, r);
      sr.max = std::max(sr.max, r);
      acc += r;
      if (geom.primal_norm(x - sol) > 0.05) sr.min_off_ball = std::min(sr.min_off_ball, r);
    }
    sr.mean = acc / static_cast<double>(sample.size());
    report.per_solution.push_back(sr);
    report.min_residual = std::min(report.min_residual, sr.min);
    report.max_residual = std::max(report.max_residual, sr.max);
    mean_acc += sr.mean;
    strict_floor = std::min(strict_floor, sr.min_off_ball);
  }
  report.mean_residual = mean_acc / static_cast<double>(problem.solutions.size());

  const bool null_ok =
      std::max(std::abs(report.min_residual), std::abs(report.max_residual)) <= 1e-9;
  const bool coherent_ok = report.min_residual >= -1e-9;
  const bool strict_ok = coherent_ok && strict_floor >= 1e-6;

  auto holds = [&](CoherenceClass c) {
    switch (c) {
      case CoherenceClass::Null: return null_ok;
      case CoherenceClass::Strict: return strict_ok;
      case CoherenceClass::Coherent: return coherent_ok;
      case CoherenceClass::Unknown: return false;
    }
    return false;
  };

  if (report.declared != CoherenceClass::Unknown) {
    if (holds(report.declared)) {
      report.classification = report.declared;
    } else {
      report.classification = CoherenceClass::Unknown;
      report.inconclusive = true;
    }
    return report;
  }
  // Discovery: most specific class whose predicate holds.
  if (null_ok) {
    report.classification = CoherenceClass::Null;
  } else if (strict_ok) {
    report.classification = CoherenceClass::Strict;
  } else if (coherent_ok) {
    report.classification = CoherenceClass::Coherent;
  } else {
    report.classification = CoherenceClass::Unknown;
    report.inconclusive = true;
  }
  return report;
}

}  // namespace sbench
