#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "takagi/coefficients.hpp"
#include "takagi/counting.hpp"
#include "takagi/piecewise_linear.hpp"
#include "takagi/rational.hpp"

namespace takagi {

// Brute-force ground truth at small sizes. The walk enumerates, segment by
// segment, every mesh cell the graph of a piecewise-linear function meets,
// with plain rational arithmetic and the same cell convention as the
// counting module. Deliberately simple and single-threaded: this is the
// arbiter the fast paths are checked against.
struct SegmentWalkResult {
  // per-column row ranges, sorted by column, disjoint and merged
  struct ColumnRows {
    long long column;
    std::vector<std::pair<long long, long long>> rows;
  };
  std::vector<ColumnRows> columns;
  Int count;

  std::vector<std::pair<long long, long long>> cells() const;  // expanded (col,row) pairs
};

struct OracleLimits {
  std::size_t max_cells = 10'000'000;
};

SegmentWalkResult pl_graph_walk(const PiecewiseLinearFunction& pl, unsigned N,
                                const std::optional<MeshWindow>& window = {},
                                const OracleLimits& limits = {});

Int pl_graph_mesh_count(const PiecewiseLinearFunction& pl, unsigned N,
                        const std::optional<MeshWindow>& window = {},
                        const OracleLimits& limits = {});

// For every width-b^-N column: cells met by the graph <= oscillation/b^-N + 2.
bool check_column_bound(const PiecewiseLinearFunction& pl, unsigned N,
                        const OracleLimits& limits = {});

// Checks (x, f(x)) stays within tail_bound(n) of H_n at `samples` evenly
// spread b-adic points (plus both endpoints), all evaluated exactly.
bool dense_containment_check(const CoefficientSequence& seq, unsigned n, std::size_t samples);

}  // namespace takagi
