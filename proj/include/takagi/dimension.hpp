#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "takagi/coefficients.hpp"
#include "takagi/counting.hpp"

namespace takagi {

struct DimensionEstimate {
  double slope = 0;
  double intercept = 0;
  double residual_rms = 0;
  std::vector<std::pair<double, double>> points;  // (x, log count) pairs used
};

// Unweighted least squares; needs >= 3 points.
DimensionEstimate ols_fit(std::vector<std::pair<double, double>> points);

struct BoxScalePoint {
  unsigned N;
  Int lower;
  Int upper;
  unsigned refinement;  // sampling offset used for the lower count
};

struct BoxDimOptions {
  unsigned N_min = 4;
  unsigned N_max = 10;
  int refinement = -1;  // -1: pick per scale from the upper count, capped below
  unsigned refinement_cap = 8;
  SampleMode mode = SampleMode::fill;
  unsigned workers = 1;
  BuildLimits limits{};
};

struct BoxDimResult {
  std::vector<BoxScalePoint> table;
  DimensionEstimate fit;        // geometric mean of lower/upper counts
  DimensionEstimate fit_lower;  // sensitivity band
  DimensionEstimate fit_upper;
};

// Global box-counting slope: counts at scales b^-N for N in [N_min, N_max],
// upper from the strip enclosure, lower from exact graph samples. Counts
// stay exact integers; logs are taken only at the fit boundary.
BoxDimResult box_dimension_fit(const CoefficientSequence& seq, const BoxDimOptions& options);

enum class X0Strategy {
  grid_points,  // all x0 = j / b^n
  seeded,       // sample_size b-adic draws at level n+2
};

struct AssouadOptions {
  std::vector<unsigned> n_list{2, 3, 4, 5, 6};
  std::vector<unsigned> m_list{1, 2, 3, 4, 5, 6};
  X0Strategy strategy = X0Strategy::grid_points;
  std::size_t sample_size = 32;
  std::uint64_t seed = 1;
  bool want_upper = true;  // requires a finite eta certificate
  bool want_lower = true;
  unsigned refinement = 5;
  SampleMode mode = SampleMode::fill;
  unsigned workers = 1;
  BuildLimits limits{};
};

struct AssouadRow {
  unsigned n;
  unsigned m;
  Int max_lower;  // max over the x0 set of the localized lower count
  Int max_upper;
  Int bound;  // localized_count_bound(eta, b, m)
};

struct AssouadProfile {
  std::vector<AssouadRow> rows;
  int base = 2;
  bool has_upper = false;
  bool has_lower = false;
};

// Localized count profile: for each (n, m), the maximum over the x0 set of
// the mesh-count bounds inside Q((x0, f(x0)), b^-n) at scale b^-(n+m).
// Sampling x0 lower-bounds the true supremum; that is safe for the
// lower-count column and heuristic for the upper one.
AssouadProfile assouad_profile(const CoefficientSequence& seq, const AssouadOptions& options);

enum class CountSide { lower, upper };

// Slope of log(max count over n and x0) against m log b.
DimensionEstimate assouad_slope(const AssouadProfile& profile, CountSide side);

}  // namespace takagi
