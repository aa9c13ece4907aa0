#include "takagi/oracle.hpp"

#include <algorithm>
#include <map>

#include "takagi/errors.hpp"
#include "takagi/evaluation.hpp"

namespace takagi {

namespace {

Int row_floor(const Rational& y, const Int& BN) {
  Rational scaled = y * BN;
  return floor_to_int(scaled);
}

bool on_row_line(const Rational& y, const Int& BN) {
  Rational scaled = y * BN;
  return scaled.get_den() == 1;
}

}  // namespace

std::vector<std::pair<long long, long long>> SegmentWalkResult::cells() const {
  std::vector<std::pair<long long, long long>> out;
  for (const auto& col : columns) {
    for (const auto& range : col.rows) {
      for (long long r = range.first; r <= range.second; ++r) out.emplace_back(col.column, r);
    }
  }
  return out;
}

SegmentWalkResult pl_graph_walk(const PiecewiseLinearFunction& pl, unsigned N,
                                const std::optional<MeshWindow>& window,
                                const OracleLimits& limits) {
  const Int BN = pow_int(static_cast<unsigned long>(pl.base()), N);

  Rational wx0(0), wx1(1);
  bool has_y = false;
  Rational wy0(0), wy1(0);
  if (window) {
    if (window->x0 > wx0) wx0 = window->x0;
    if (window->x1 < wx1) wx1 = window->x1;
    if (window->has_y) {
      has_y = true;
      wy0 = window->y0;
      wy1 = window->y1;
    }
  }

  std::map<long long, std::vector<std::pair<long long, long long>>> by_column;
  std::size_t cell_budget_used = 0;

  auto add_rows = [&](long long col, long long bot, long long top) {
    cell_budget_used += static_cast<std::size_t>(top - bot + 1);
    if (cell_budget_used > limits.max_cells)
      throw ResourceError("segment walk exceeded the cell budget");
    by_column[col].emplace_back(bot, top);
  };

  // per sub-segment [p, q): yp attained, yq approached only
  auto emit_subsegment = [&](long long col, const Rational& yp, const Rational& yq) {
    Rational lo = yp, hi = yp;
    bool lo_att = true, hi_att = true;
    if (yq < lo) {
      lo = yq;
      lo_att = false;
    }
    if (yq > hi) {
      hi = yq;
      hi_att = false;
    }
    Rational A = lo, B = hi;
    bool B_att = hi_att;
    if (has_y) {
      if (wy0 > B) return;
      if (wy1 < A) return;
      if (wy0 > A) A = wy0;  // bottom attainment never affects the row set
      if (wy1 < B) {
        B = wy1;
        // wy1 lies inside [lo, hi): attained unless it equals an unattained lo
        B_att = !(B == lo && !lo_att);
      }
    }
    if (A > B) return;
    if (A == B) {
      bool att = (A > lo && A < hi) || (A == lo && lo_att) || (A == hi && hi_att);
      if (!att) return;
      Int r = row_floor(A, BN);
      add_rows(col, r.get_si(), r.get_si());
      return;
    }
    Int bot = row_floor(A, BN);
    Int top;
    if (on_row_line(B, BN)) {
      Rational scaled = B * BN;
      top = scaled.get_num() - (B_att ? 0 : 1);
    } else {
      top = row_floor(B, BN);
    }
    if (top >= bot) add_rows(col, bot.get_si(), top.get_si());
  };

  const std::size_t pieces = pl.grid_size() - 1;
  for (std::size_t t = 0; t < pieces; ++t) {
    Rational xa = pl.grid_x(t), xb = pl.grid_x(t + 1);
    Rational u0 = xa > wx0 ? xa : wx0;
    Rational u1 = xb < wx1 ? xb : wx1;
    if (u0 >= u1) continue;
    Rational va = pl.value_at_grid(t), vb = pl.value_at_grid(t + 1);
    auto value_at = [&](const Rational& x) -> Rational {
      return va + (x - xa) * (vb - va) / (xb - xa);
    };
    Int c_first = floor_to_int(u0 * BN);
    Rational hi_pos = u1 * BN;
    Int c_last = (hi_pos.get_den() == 1) ? Int(hi_pos.get_num() - 1) : floor_to_int(hi_pos);
    for (Int c = c_first; c <= c_last; ++c) {
      Rational col_lo = make_rational(c, BN);
      Rational col_hi = make_rational(c + 1, BN);
      Rational p = u0 > col_lo ? u0 : col_lo;
      Rational q = u1 < col_hi ? u1 : col_hi;
      if (p >= q) continue;
      emit_subsegment(c.get_si(), value_at(p), value_at(q));
    }
  }

  SegmentWalkResult result;
  result.count = 0;
  for (auto& [col, ranges] : by_column) {
    std::sort(ranges.begin(), ranges.end());
    SegmentWalkResult::ColumnRows cr;
    cr.column = col;
    long long cur_lo = ranges[0].first, cur_hi = ranges[0].second;
    for (std::size_t k = 1; k < ranges.size(); ++k) {
      if (ranges[k].first <= cur_hi + 1) {
        cur_hi = std::max(cur_hi, ranges[k].second);
      } else {
        cr.rows.emplace_back(cur_lo, cur_hi);
        result.count += static_cast<long>(cur_hi - cur_lo + 1);
        cur_lo = ranges[k].first;
        cur_hi = ranges[k].second;
      }
    }
    cr.rows.emplace_back(cur_lo, cur_hi);
    result.count += static_cast<long>(cur_hi - cur_lo + 1);
    result.columns.push_back(std::move(cr));
  }
  return result;
}

Int pl_graph_mesh_count(const PiecewiseLinearFunction& pl, unsigned N,
                        const std::optional<MeshWindow>& window, const OracleLimits& limits) {
  return pl_graph_walk(pl, N, window, limits).count;
}

bool check_column_bound(const PiecewiseLinearFunction& pl, unsigned N,
                        const OracleLimits& limits) {
  SegmentWalkResult walk = pl_graph_walk(pl, N, {}, limits);
  const Int BN = pow_int(static_cast<unsigned long>(pl.base()), N);
  for (const auto& col : walk.columns) {
    Int cells(0);
    for (const auto& r : col.rows) cells += static_cast<long>(r.second - r.first + 1);
    Rational lo = make_rational(Int(static_cast<long>(col.column)), BN);
    Rational hi = make_rational(Int(static_cast<long>(col.column + 1)), BN);
    Rational osc = pl.oscillation(lo, hi);  // closed column
    if (Rational(cells) > osc * BN + 2) return false;
  }
  return true;
}

bool dense_containment_check(const CoefficientSequence& seq, unsigned n, std::size_t samples) {
  const int b = seq.base();
  unsigned level = n + 2;
  while (pow_int(static_cast<unsigned long>(b), level) < Int(static_cast<unsigned long>(samples)))
    ++level;
  Int BL = pow_int(static_cast<unsigned long>(b), level);
  Rational halfwidth = seq.tail_bound(n);
  for (std::size_t s = 0; s <= samples; ++s) {
    Int j = (BL * Int(static_cast<unsigned long>(s))) / Int(static_cast<unsigned long>(samples));
    Rational x = make_rational(j, BL);
    Rational fx = eval_exact(seq, j, level);
    Rational hx = partial_sum_at(seq, n, x);
    Rational gap = fx - hx;
    if (gap < 0) gap = -gap;
    if (gap > halfwidth) return false;
  }
  return true;
}

}  // namespace takagi
