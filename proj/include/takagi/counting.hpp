#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "takagi/coefficients.hpp"
#include "takagi/piecewise_linear.hpp"
#include "takagi/rational.hpp"

namespace takagi {

// Mesh convention, shared bit-exactly by every counter in this library and
// by the oracle:
//   * cells at scale delta = b^-N are [i d,(i+1) d) x [j d,(j+1) d);
//   * the domain is treated as [0,1) for counting, so x = 1 contributes no
//     cell and the columns are exactly 0 .. b^N - 1;
//   * a value on a horizontal grid line belongs to the cell whose bottom
//     edge it lies on;
//   * window x-ranges are half-open [x0, x1), y-ranges closed [y0, y1].
struct MeshWindow {
  Rational x0{0};
  Rational x1{1};
  bool has_y = false;
  Rational y0{0};
  Rational y1{0};

  static MeshWindow full() { return MeshWindow{}; }
  static MeshWindow box(Rational x0, Rational x1, Rational y0, Rational y1) {
    return MeshWindow{std::move(x0), std::move(x1), true, std::move(y0), std::move(y1)};
  }
};

// A certified vertical enclosure of the graph: every point of G f lies
// within `halfwidth` of the center H_level.
struct Strip {
  PiecewiseLinearFunction center;
  Rational halfwidth;  // >= 0; equals tail_bound(level)
  unsigned level;
};

Strip make_strip(const CoefficientSequence& seq, unsigned n, const BuildLimits& limits = {});

struct CountOptions {
  unsigned workers = 1;
};

// Exact number of scale b^-N mesh cells meeting the strip (optionally
// intersected with a window). Per column the strip's vertical extent is the
// center's exact min/max over the half-open column, padded by the
// halfwidth; rows then come from integer floor divisions. Requires
// N >= strip.level so each column meets at most one interior breakpoint.
Int strip_mesh_count(const Strip& strip, unsigned N,
                     const std::optional<MeshWindow>& window = {},
                     const CountOptions& options = {});

// Reusable counter: precomputes per-column extents once, then answers
// window counts with integer arithmetic only. Window y-bounds must have
// denominators dividing denominator_hint (fold them in at construction).
class StripCounter {
 public:
  StripCounter(const Strip& strip, unsigned N, const Int& denominator_hint = Int(1));

  Int count(const std::optional<MeshWindow>& window = {}, unsigned workers = 1) const;

  unsigned scale_level() const { return N_; }

 private:
  struct ColumnExtent {
    Int lo, hi;  // scaled center extremes over the half-open column
    bool lo_attained, hi_attained;
  };

  ColumnExtent column_extent_scaled(std::size_t i) const;
  ColumnExtent range_extent(const Rational& xa, const Rational& xb, const Int& local_denom) const;
  long long rows_in_column(const ColumnExtent& e, const Int& G, const Int& W, bool windowed,
                           const Int& wy0, const Int& wy1) const;

  const PiecewiseLinearFunction* pl_;
  Rational halfwidth_;
  unsigned N_;
  Int BN_;      // b^N
  Int denom_;   // common denominator of all scaled values
  Int G_;       // denom / b^N: scaled height of one mesh row
  Int W_;       // halfwidth * denom
  std::vector<ColumnExtent> columns_;
};

enum class SampleMode {
  points,  // count cells containing the sampled graph points
  fill,    // additionally count rows strictly between consecutive samples
           // (attained by continuity, so still an exact lower bound)
};

struct LowerCountOptions {
  unsigned refinement = 0;  // samples at x = j / b^(N+refinement)
  SampleMode mode = SampleMode::points;
  unsigned workers = 1;
};

// Exact lower bound for the number of scale b^-N cells meeting G f (within
// the window, when given): the cells hit by exactly evaluated graph points.
Int graph_point_lower_count(const CoefficientSequence& seq, unsigned N,
                            const std::optional<MeshWindow>& window = {},
                            const LowerCountOptions& options = {});

// Sub-level set {x in column : |H_n(x) - y| <= 2 eta b^-n} as exact closed
// intervals, one (possibly empty) per half-column; adjacent intervals are
// kept separate rather than merged.
struct RestrictedDomain {
  std::vector<std::pair<Rational, Rational>> intervals;

  bool empty() const { return intervals.empty(); }
  Rational total_length() const;
};

RestrictedDomain restricted_domain(const PiecewiseLinearFunction& Hn, unsigned n,
                                   std::size_t column, const Rational& y,
                                   const Rational& eta_value);

// ceil((10 eta + m eta + 4) * b^m): the per-window cell-count bound.
Int window_count_bound(const Rational& eta_value, int base, unsigned m);

// ceil(3 (10 eta + m eta + 4) * b^m): the localized (3-column) bound.
Int localized_count_bound(const Rational& eta_value, int base, unsigned m);

struct WindowCheck {
  Int count;
  Int bound;
  bool ok;
};

// Counts the strip S_{n+m} inside column `column` (0-based, width b^-n)
// restricted to [y - eta b^-n, y + eta b^-n], against the analytic bound.
// Requires a finite eta certificate.
WindowCheck check_window_count(const CoefficientSequence& seq, unsigned n, unsigned m,
                               std::size_t column, const Rational& y,
                               const BuildLimits& limits = {});

// Same check against a prebuilt counter for scan loops.
WindowCheck check_window_count(const StripCounter& counter, const Rational& eta_value,
                               int base, unsigned n, unsigned m, std::size_t column,
                               const Rational& y);

struct CountBounds {
  Int lower;
  Int upper;
  unsigned scale_level;  // counts at scale b^-(scale_level)
  MeshWindow region;
};

struct LocalizedOptions {
  unsigned refinement = 2;
  SampleMode mode = SampleMode::points;
  unsigned workers = 1;
  BuildLimits limits{};
  bool want_upper = true;  // requires finite eta
};

// Mesh-count bounds for G f inside Q((x0, f(x0)), b^-n) at scale b^-(n+m).
// x0 must be b-adic so f(x0) is exact. The upper bound counts the strip
// S_{n+m} over the (at most 3) level-n columns covering Q, with the window
// heightened to +-eta b^-n, which is what the localized bound controls.
CountBounds localized_count(const CoefficientSequence& seq, const Rational& x0, unsigned n,
                            unsigned m, const LocalizedOptions& options = {});

}  // namespace takagi
