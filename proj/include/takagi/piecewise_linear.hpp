#pragma once

#include <cstddef>
#include <vector>

#include "takagi/coefficients.hpp"
#include "takagi/rational.hpp"

namespace takagi {

// A piecewise-linear function on [0,1], sampled at the uniform grid
// t / (2 b^level), t = 0 .. 2 b^level, and affine between consecutive grid
// points. Values are stored as integer numerators over one shared
// denominator, which keeps construction and counting integer-only.
//
// Partial sums H_n are stored at level n: their true breakpoints live on
// the coarser grid t / (2 b^(n-1)), so interpolation on the stored grid is
// exact, and the finer grid lines up with the mesh-counting columns.
class PiecewiseLinearFunction {
 public:
  PiecewiseLinearFunction(int base, unsigned level, Int denom, std::vector<Int> numerators);

  static PiecewiseLinearFunction zero(int base, unsigned level = 0);

  int base() const { return base_; }
  unsigned level() const { return level_; }
  std::size_t grid_size() const { return nums_.size(); }  // 2 b^level + 1
  const Int& denominator() const { return denom_; }
  const Int& numerator(std::size_t t) const { return nums_[t]; }
  const std::vector<Int>& numerators() const { return nums_; }

  Rational grid_x(std::size_t t) const;
  Rational value_at_grid(std::size_t t) const;

  // Exact value by linear interpolation; x must lie in [0,1].
  Rational eval(const Rational& x) const;

  // max - min over [u,v] (0 for an empty interval), computed from the
  // interval endpoints and the grid points strictly inside.
  Rational oscillation(const Rational& u, const Rational& v) const;

  // Total rise plus fall over [u,v]; always >= oscillation.
  Rational variation(const Rational& u, const Rational& v) const;

  Rational min_value() const;
  Rational max_value() const;

 private:
  void check_interval(const Rational& u, const Rational& v) const;

  int base_;
  unsigned level_;
  Int denom_;
  std::vector<Int> nums_;
};

struct BuildLimits {
  std::size_t max_grid_points = std::size_t(1) << 26;
};

// H_n(x) = sum_{k<n} c_k phi(b^k x), exact at every level-n grid point.
PiecewiseLinearFunction build_partial_sum(const CoefficientSequence& seq, unsigned n,
                                          const BuildLimits& limits = {});

// H_{n,m}(x) = sum_{k=n}^{n+m-1} c_k phi(b^k x), stored at level n+m, so
// H_{n+m} = H_n + H_{n,m} holds exactly at all shared grid points.
PiecewiseLinearFunction build_window_sum(const CoefficientSequence& seq, unsigned n, unsigned m,
                                         const BuildLimits& limits = {});

}  // namespace takagi
