#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sbench/core.hpp"

namespace sbench {

// One primitive constraint block: box, L2 ball, or probability simplex.
struct FeasibleBlock {
  enum class Kind { Box, Ball, Simplex };

  Kind kind;
  Vec lower, upper;  // Box
  Vec center;        // Ball
  double radius = 0; // Ball
  int dim_ = 0;      // Simplex

  static FeasibleBlock box(Vec lower, Vec upper);
  static FeasibleBlock ball(Vec center, double radius);
  static FeasibleBlock simplex(int dim);

  int dim() const;
  bool contains(const Eigen::Ref<const Vec>& x, double tol = 1e-12) const;
  // Midpoint / center / uniform — always strictly feasible.
  Vec center_point() const;
  // Extreme points (box corners, ball axis poles, simplex vertices), capped.
  std::vector<Vec> extreme_points(std::size_t cap = 64) const;
};

// X = X1 x X2 as an ordered list of blocks, each owned by one player.
struct ProductSet {
  std::vector<FeasibleBlock> blocks;
  std::vector<int> player;  // 1 or 2, per block

  int total_dim() const;
  bool contains(const Vec& x, double tol = 1e-12) const;
  Vec center_point() const;
  // [offset, length) of block b inside a stacked coordinate vector.
  std::pair<int, int> span(std::size_t b) const;
};

enum class Dgf { EuclideanHalfSquaredNorm, NegativeEntropy };

// A distance-generating function per block plus the induced Bregman
// machinery. Both shipped DGFs have modulus 1 in their natural norm
// (L2 for the Euclidean DGF, L1 for negative entropy on the simplex),
// so the aggregate modulus of any product is 1.
class Geometry {
 public:
  Geometry(ProductSet set, std::vector<Dgf> block_dgf);

  const ProductSet& set() const { return set_; }
  const std::vector<Dgf>& block_dgfs() const { return dgf_; }
  double alpha() const { return 1.0; }
  std::string name() const;  // "euclidean" or "entropic" or "mixed"

  double h(const Vec& x) const;
  Vec grad_dgf(const Vec& x) const;
  // D(base, point) = h(base) - h(point) - <grad h(point), base - point>.
  // `point` is where the tangent is taken and must be a valid prox base.
  double bregman(const Vec& base, const Vec& point) const;
  // argmin over X of <dual, base - x'> + D(x', base), blockwise closed form.
  Vec prox(const Vec& base, const Vec& dual) const;
  // argmax over X of <dual, x> - h(x); satisfies prox(x,y) = mirror(grad_h(x)+y).
  Vec mirror(const Vec& dual) const;

  // Product norms: blockwise L2/L1 combined by root-sum-of-squares, and the
  // corresponding dual (L2/Linf blockwise).
  double primal_norm(const Vec& v) const;
  double dual_norm(const Vec& y) const;

  // Throws DomainError/DimensionMismatch unless x is a usable prox base
  // (strictly positive on entropy blocks, inside X elsewhere).
  void validate_prox_base(const Vec& x) const;

 private:
  ProductSet set_;
  std::vector<Dgf> dgf_;

  void check_dim(const Vec& v) const;
};

// Convenience constructors for the two shipped geometries.
Geometry make_euclidean_geometry(ProductSet set);
Geometry make_entropic_geometry(ProductSet set);  // all blocks must be simplices

}  // namespace sbench
