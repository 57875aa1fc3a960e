#include "sbench/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace sbench {

FeasibleBlock FeasibleBlock::box(Vec lower, Vec upper) {
  if (lower.size() != upper.size() || lower.size() == 0)
    throw DimensionMismatch("box bounds must have equal nonzero length");
  for (int i = 0; i < lower.size(); ++i)
    if (!(lower[i] < upper[i]))
      throw DomainError("box requires lower[i] < upper[i]");
  FeasibleBlock b;
  b.kind = Kind::Box;
  b.lower = std::move(lower);
  b.upper = std::move(upper);
  return b;
}

FeasibleBlock FeasibleBlock::ball(Vec center, double radius) {
  if (center.size() == 0) throw DimensionMismatch("ball center is empty");
  if (!(radius > 0)) throw DomainError("ball radius must be positive");
  FeasibleBlock b;
  b.kind = Kind::Ball;
  b.center = std::move(center);
  b.radius = radius;
  return b;
}

FeasibleBlock FeasibleBlock::simplex(int dim) {
  if (dim < 1) throw DomainError("simplex dimension must be positive");
  FeasibleBlock b;
  b.kind = Kind::Simplex;
  b.dim_ = dim;
  return b;
}

int FeasibleBlock::dim() const {
  switch (kind) {
    case Kind::Box: return static_cast<int>(lower.size());
    case Kind::Ball: return static_cast<int>(center.size());
    case Kind::Simplex: return dim_;
  }
  return 0;
}

bool FeasibleBlock::contains(const Eigen::Ref<const Vec>& x, double tol) const {
  if (x.size() != dim()) return false;
  switch (kind) {
    case Kind::Box:
      for (int i = 0; i < x.size(); ++i)
        if (x[i] < lower[i] - tol || x[i] > upper[i] + tol) return false;
      return true;
    case Kind::Ball:
      return (x - center).norm() <= radius + tol;
    case Kind::Simplex: {
      if (x.minCoeff() < -tol) return false;
      return std::abs(x.sum() - 1.0) <= tol;
    }
  }
  return false;
}

Vec FeasibleBlock::center_point() const {
  switch (kind) {
    case Kind::Box: return 0.5 * (lower + upper);
    case Kind::Ball: return center;
    case Kind::Simplex: return Vec::Constant(dim_, 1.0 / dim_);
  }
  return Vec();
}

std::vector<Vec> FeasibleBlock::extreme_points(std::size_t cap) const {
  std::vector<Vec> out;
  switch (kind) {
    case Kind::Box: {
      const int d = dim();
      if (d <= 20) {
        const std::size_t n = std::min<std::size_t>(std::size_t(1) << d, cap);
        for (std::size_t mask = 0; mask < n; ++mask) {
          Vec v(d);
          for (int i = 0; i < d; ++i)
            v[i] = (mask >> i) & 1 ? upper[i] : lower[i];
          out.push_back(std::move(v));
        }
      }
      break;
    }
    case Kind::Ball: {
      for (int i = 0; i < dim() && out.size() + 2 <= cap; ++i) {
        Vec v = center;
        v[i] += radius;
        out.push_back(v);
        v[i] -= 2 * radius;
        out.push_back(v);
      }
      break;
    }
    case Kind::Simplex: {
      for (int i = 0; i < dim_ && out.size() < cap; ++i) {
        Vec v = Vec::Zero(dim_);
        v[i] = 1.0;
        out.push_back(std::move(v));
      }
      break;
    }
  }
  return out;
}

int ProductSet::total_dim() const {
  int d = 0;
  for (const auto& b : blocks) d += b.dim();
  return d;
}

bool ProductSet::contains(const Vec& x, double tol) const {
  if (x.size() != total_dim()) return false;
  int off = 0;
  for (const auto& b : blocks) {
    if (!b.contains(x.segment(off, b.dim()), tol)) return false;
    off += b.dim();
  }
  return true;
}

Vec ProductSet::center_point() const {
  Vec x(total_dim());
  int off = 0;
  for (const auto& b : blocks) {
    x.segment(off, b.dim()) = b.center_point();
    off += b.dim();
  }
  return x;
}

std::pair<int, int> ProductSet::span(std::size_t b) const {
  int off = 0;
  for (std::size_t i = 0; i < b; ++i) off += blocks[i].dim();
  return {off, blocks[b].dim()};
}

Geometry::Geometry(ProductSet set, std::vector<Dgf> block_dgf)
    : set_(std::move(set)), dgf_(std::move(block_dgf)) {
  if (set_.blocks.empty()) throw ConfigError("geometry needs at least one block");
  if (set_.blocks.size() != set_.player.size())
    throw ConfigError("one player tag per block required");
  if (dgf_.size() != set_.blocks.size())
    throw ConfigError("one DGF per block required");
  for (std::size_t i = 0; i < dgf_.size(); ++i) {
    if (dgf_[i] == Dgf::NegativeEntropy &&
        set_.blocks[i].kind != FeasibleBlock::Kind::Simplex)
      throw ConfigError("negative entropy attaches only to simplex blocks");
    if (dgf_[i] == Dgf::EuclideanHalfSquaredNorm &&
        set_.blocks[i].kind == FeasibleBlock::Kind::Simplex)
      throw ConfigError("simplex blocks ship with the entropic geometry only");
  }
  for (int p : set_.player)
    if (p != 1 && p != 2) throw ConfigError("player tag must be 1 or 2");
}

std::string Geometry::name() const {
  bool any_euc = false, any_ent = false;
  for (Dgf d : dgf_) (d == Dgf::NegativeEntropy ? any_ent : any_euc) = true;
  if (any_euc && any_ent) return "mixed";
  return any_ent ? "entropic" : "euclidean";
}

void Geometry::check_dim(const Vec& v) const {
  if (v.size() != set_.total_dim())
    throw DimensionMismatch("vector length disagrees with the feasible set");
}

void Geometry::validate_prox_base(const Vec& x) const {
  check_dim(x);
  if (!all_finite(x)) throw NonFiniteInput("prox base has non-finite entries");
  for (std::size_t b = 0; b < set_.blocks.size(); ++b) {
    auto [off, len] = set_.span(b);
    auto seg = x.segment(off, len);
    if (dgf_[b] == Dgf::NegativeEntropy) {
      if (seg.minCoeff() <= 0.0)
        throw DomainError("entropy block requires strictly positive prox base");
      if (std::abs(seg.sum() - 1.0) > 1e-9)
        throw DomainError("entropy prox base must lie on the simplex");
    } else if (!set_.blocks[b].contains(seg, 1e-9)) {
      throw DomainError("prox base lies outside its block");
    }
  }
}

double Geometry::h(const Vec& x) const {
  check_dim(x);
  double acc = 0.0;
  for (std::size_t b = 0; b < set_.blocks.size(); ++b) {
    auto [off, len] = set_.span(b);
    auto seg = x.segment(off, len);
    if (dgf_[b] == Dgf::EuclideanHalfSquaredNorm) {
      acc += 0.5 * seg.squaredNorm();
    } else {
      for (int i = 0; i < len; ++i) {
        const double xi = seg[i];
        if (xi < 0) throw DomainError("entropy is undefined for negative coordinates");
        if (xi > 0) acc += xi * std::log(xi);  // 0 log 0 = 0
      }
    }
  }
  return acc;
}

Vec Geometry::grad_dgf(const Vec& x) const {
  check_dim(x);
  Vec g(x.size());
  for (std::size_t b = 0; b < set_.blocks.size(); ++b) {
    auto [off, len] = set_.span(b);
    auto seg = x.segment(off, len);
    if (dgf_[b] == Dgf::EuclideanHalfSquaredNorm) {
      g.segment(off, len) = seg;
    } else {
      for (int i = 0; i < len; ++i) {
        if (seg[i] <= 0)
          throw DomainError("entropy gradient needs strictly positive coordinates");
        g[off + i] = 1.0 + std::log(seg[i]);
      }
    }
  }
  return g;
}

double Geometry::bregman(const Vec& base, const Vec& point) const {
  check_dim(base);
  check_dim(point);
  double acc = 0.0;
  for (std::size_t b = 0; b < set_.blocks.size(); ++b) {
    auto [off, len] = set_.span(b);
    auto p = base.segment(off, len);
    auto x = point.segment(off, len);
    if (dgf_[b] == Dgf::EuclideanHalfSquaredNorm) {
      acc += 0.5 * (p - x).squaredNorm();
    } else {
      // KL with the 0 log 0 = 0 convention; tangent point must be interior.
      double kl = 0.0;
      for (int i = 0; i < len; ++i) {
        if (x[i] <= 0)
          throw DomainError("Bregman tangent point on an entropy block must be strictly positive");
        if (p[i] < 0) throw DomainError("entropy block coordinates must be nonnegative");
        if (p[i] > 0) kl += p[i] * std::log(p[i] / x[i]);
      }
      acc += kl + x.sum() - p.sum();
    }
  }
  return acc;
}

namespace {

Vec project_block(const FeasibleBlock& blk, const Vec& z) {
  switch (blk.kind) {
    case FeasibleBlock::Kind::Box:
      return z.cwiseMax(blk.lower).cwiseMin(blk.upper);
    case FeasibleBlock::Kind::Ball: {
      Vec v = z - blk.center;
      const double n = v.norm();
      if (n <= blk.radius) return z;
      return blk.center + (blk.radius / n) * v;
    }
    case FeasibleBlock::Kind::Simplex:
      throw DomainError("euclidean projection onto the simplex is not a shipped geometry");
  }
  return z;
}

// MWU in log space: softmax(logits) with a max shift for overflow safety.
Vec softmax(const Vec& logits) {
  const double m = logits.maxCoeff();
  Vec w = (logits.array() - m).exp();
  return w / w.sum();
}

}  // namespace

Vec Geometry::prox(const Vec& base, const Vec& dual) const {
  check_dim(dual);
  if (!all_finite(dual)) throw NonFiniteInput("prox dual has NaN/Inf entries");
  validate_prox_base(base);
  Vec out(base.size());
  for (std::size_t b = 0; b < set_.blocks.size(); ++b) {
    auto [off, len] = set_.span(b);
    Vec x = base.segment(off, len);
    Vec y = dual.segment(off, len);
    if (dgf_[b] == Dgf::EuclideanHalfSquaredNorm) {
      out.segment(off, len) = project_block(set_.blocks[b], x + y);
    } else {
      out.segment(off, len) = softmax(x.array().log().matrix() + y);
    }
  }
  return out;
}

Vec Geometry::mirror(const Vec& dual) const {
  check_dim(dual);
  if (!all_finite(dual)) throw NonFiniteInput("mirror dual has NaN/Inf entries");
  Vec out(dual.size());
  for (std::size_t b = 0; b < set_.blocks.size(); ++b) {
    auto [off, len] = set_.span(b);
    Vec y = dual.segment(off, len);
    if (dgf_[b] == Dgf::EuclideanHalfSquaredNorm) {
      out.segment(off, len) = project_block(set_.blocks[b], y);
    } else {
      out.segment(off, len) = softmax(y);
    }
  }
  return out;
}

double Geometry::primal_norm(const Vec& v) const {
  check_dim(v);
  double acc = 0.0;
  for (std::size_t b = 0; b < set_.blocks.size(); ++b) {
    auto [off, len] = set_.span(b);
    auto seg = v.segment(off, len);
    const double n = dgf_[b] == Dgf::EuclideanHalfSquaredNorm
                         ? seg.norm()
                         : seg.lpNorm<1>();
    acc += n * n;
  }
  return std::sqrt(acc);
}

double Geometry::dual_norm(const Vec& y) const {
  check_dim(y);
  double acc = 0.0;
  for (std::size_t b = 0; b < set_.blocks.size(); ++b) {
    auto [off, len] = set_.span(b);
    auto seg = y.segment(off, len);
    const double n = dgf_[b] == Dgf::EuclideanHalfSquaredNorm
                         ? seg.norm()
                         : seg.lpNorm<Eigen::Infinity>();
    acc += n * n;
  }
  return std::sqrt(acc);
}

Geometry make_euclidean_geometry(ProductSet set) {
  std::vector<Dgf> d(set.blocks.size(), Dgf::EuclideanHalfSquaredNorm);
  return Geometry(std::move(set), std::move(d));
}

Geometry make_entropic_geometry(ProductSet set) {
  std::vector<Dgf> d(set.blocks.size(), Dgf::NegativeEntropy);
  return Geometry(std::move(set), std::move(d));
}

}  // namespace sbench
