#include "takagi/counting.hpp"

#include <algorithm>

#include "takagi/errors.hpp"
#include "takagi/evaluation.hpp"
#include "takagi/grid_eval.hpp"
#include "takagi/parallel.hpp"

namespace takagi {

namespace {

constexpr std::size_t kMaxColumns = std::size_t(1) << 26;

bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// value scaled to `denom` (the value's denominator must divide denom)
Int scale_exact(const Rational& v, const Int& denom) {
  if (!divides(v.get_den(), denom))
    throw DomainError("window bound denominator does not divide the counter scale");
  return Int(v.get_num() * (denom / v.get_den()));
}

long long to_ll(const Int& v) {
  if (!v.fits_slong_p()) throw ResourceError("cell index exceeds machine range");
  return v.get_si();
}

Int lcm3(const Int& a, const Int& b, const Int& c) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_mpz_t());
  return l;
}

}  // namespace

Strip make_strip(const CoefficientSequence& seq, unsigned n, const BuildLimits& limits) {
  return Strip{build_partial_sum(seq, n, limits), seq.tail_bound(n), n};
}

StripCounter::StripCounter(const Strip& strip, unsigned N, const Int& denominator_hint)
    : pl_(&strip.center), halfwidth_(strip.halfwidth), N_(N) {
  if (N < strip.level) throw DomainError("mesh scale must refine the strip level");
  if (strip.halfwidth < 0) throw DomainError("strip halfwidth must be >= 0");
  const unsigned long ub = static_cast<unsigned long>(pl_->base());
  BN_ = pow_int(ub, N);
  if (BN_ > Int(static_cast<unsigned long>(kMaxColumns)))
    throw ResourceError("mesh of " + BN_.get_str() + " columns exceeds the cap");

  Int K = pow_int(ub, N - pl_->level());
  // multiple of pl_denom * K, so edge interpolation is integral and b^N divides
  denom_ = lcm3(pl_->denominator() * K, halfwidth_.get_den(), denominator_hint);
  G_ = denom_ / BN_;
  W_ = scale_exact(halfwidth_, denom_);

  std::size_t n_cols = static_cast<std::size_t>(BN_.get_ui());
  columns_.resize(n_cols);
  for (std::size_t i = 0; i < n_cols; ++i) columns_[i] = column_extent_scaled(i);
}

// Extent of the center over the half-open column [i/b^N, (i+1)/b^N). Closed
// candidates: the left edge value and any grid values strictly inside. The
// right edge value bounds the extent but is not attained in the column.
StripCounter::ColumnExtent StripCounter::column_extent_scaled(std::size_t i) const {
  const unsigned long ub = static_cast<unsigned long>(pl_->base());
  Int K = pow_int(ub, N_ - pl_->level());
  const Int& D = pl_->denominator();
  Int edge_scale = denom_ / (D * K);
  Int grid_scale = denom_ / D;

  auto edge_value = [&](const Int& a /* position in half-grid units: x = a/(2 b^N) */) {
    Int t = floor_div(a, K);
    Int rem = a - t * K;
    std::size_t ti = static_cast<std::size_t>(t.get_ui());
    if (rem == 0) return Int(pl_->numerator(ti) * grid_scale);
    return Int((pl_->numerator(ti) * (K - rem) + pl_->numerator(ti + 1) * rem) * edge_scale);
  };

  Int a_lo(static_cast<unsigned long>(2 * i));
  Int a_hi(static_cast<unsigned long>(2 * (i + 1)));
  Int v_lo = edge_value(a_lo);
  Int v_hi = edge_value(a_hi);

  ColumnExtent e{v_lo, v_lo, true, true};
  auto closed_candidate = [&](const Int& v) {
    if (v < e.lo) {
      e.lo = v;
      e.lo_attained = true;
    } else if (v == e.lo) {
      e.lo_attained = true;
    }
    if (v > e.hi) {
      e.hi = v;
      e.hi_attained = true;
    } else if (v == e.hi) {
      e.hi_attained = true;
    }
  };

  Int t_first = floor_div(a_lo, K) + 1;
  Int t_hi = floor_div(a_hi, K);
  Int t_last = (a_hi == t_hi * K) ? Int(t_hi - 1) : t_hi;
  for (Int t = t_first; t <= t_last; ++t)
    closed_candidate(Int(pl_->numerator(static_cast<std::size_t>(t.get_ui())) * grid_scale));

  if (v_hi < e.lo) {
    e.lo = v_hi;
    e.lo_attained = false;
  }
  if (v_hi > e.hi) {
    e.hi = v_hi;
    e.hi_attained = false;
  }
  return e;
}

StripCounter::ColumnExtent StripCounter::range_extent(const Rational& xa, const Rational& xb,
                                                      const Int& local_denom) const {
  Rational v_lo = pl_->eval(xa);
  Rational v_hi = pl_->eval(xb);
  Rational lo = v_lo, hi = v_lo;
  bool lo_att = true, hi_att = true;
  auto closed_candidate = [&](const Rational& v) {
    if (v < lo) {
      lo = v;
      lo_att = true;
    } else if (v == lo) {
      lo_att = true;
    }
    if (v > hi) {
      hi = v;
      hi_att = true;
    } else if (v == hi) {
      hi_att = true;
    }
  };
  Int last(static_cast<unsigned long>(pl_->grid_size() - 1));
  Int t_first = floor_to_int(xa * last) + 1;
  Int t_last = ceil_to_int(xb * last) - 1;
  for (Int t = t_first; t <= t_last; ++t)
    closed_candidate(pl_->value_at_grid(static_cast<std::size_t>(t.get_ui())));
  if (v_hi < lo) {
    lo = v_hi;
    lo_att = false;
  }
  if (v_hi > hi) {
    hi = v_hi;
    hi_att = false;
  }
  return ColumnExtent{scale_exact(lo, local_denom), scale_exact(hi, local_denom), lo_att, hi_att};
}

// Rows meeting {(x,y) : x in the column, |center(x)-y| <= w}, intersected
// with the closed band [wy0, wy1] when windowed. All inputs share one scale:
// one mesh row is G units tall.
long long StripCounter::rows_in_column(const ColumnExtent& e, const Int& G, const Int& W,
                                       bool windowed, const Int& wy0, const Int& wy1) const {
  Int A = e.lo - W;
  Int B = e.hi + W;
  if (windowed) {
    if (wy0 > A) A = wy0;
    if (wy1 < B) B = wy1;
  }
  if (A > B) return 0;

  // whether the strip meets the horizontal line y = t over this column
  auto reaches = [&](const Int& t) {
    Int lo_i = t - W;
    if (e.lo > lo_i) lo_i = e.lo;
    Int hi_i = t + W;
    if (e.hi < hi_i) hi_i = e.hi;
    if (lo_i > hi_i) return false;
    if (lo_i < hi_i) return true;
    if (lo_i > e.lo && lo_i < e.hi) return true;
    if (lo_i == e.lo && e.lo_attained) return true;
    if (lo_i == e.hi && e.hi_attained) return true;
    return false;
  };

  if (A == B) return reaches(A) ? 1 : 0;
  long long bot = to_ll(floor_div(A, G));
  long long top;
  if (divides(G, B)) {
    top = to_ll(B / G) - (reaches(B) ? 0 : 1);
  } else {
    top = to_ll(floor_div(B, G));
  }
  return top >= bot ? top - bot + 1 : 0;
}

Int StripCounter::count(const std::optional<MeshWindow>& window, unsigned workers) const {
  Rational x0c(0), x1c(1);
  bool windowed_y = false;
  Int wy0(0), wy1(0);
  if (window) {
    if (window->x0 > x0c) x0c = window->x0;
    if (window->x1 < x1c) x1c = window->x1;
    if (x0c >= x1c) return 0;
    if (window->has_y) {
      if (window->y0 > window->y1) return 0;
      windowed_y = true;
      wy0 = scale_exact(window->y0, denom_);
      wy1 = scale_exact(window->y1, denom_);
    }
  }

  Int i_first = floor_to_int(x0c * BN_);
  Rational hi_pos = x1c * BN_;
  Int i_last = (hi_pos.get_den() == 1) ? Int(hi_pos.get_num() - 1) : floor_to_int(hi_pos);
  if (i_last < i_first) return 0;

  std::size_t begin = static_cast<std::size_t>(i_first.get_ui());
  std::size_t end = static_cast<std::size_t>(i_last.get_ui()) + 1;
  std::size_t n_cols = end - begin;

  auto column_count = [&](std::size_t i) -> long long {
    Rational col_lo = make_rational(Int(static_cast<unsigned long>(i)), BN_);
    Rational col_hi = make_rational(Int(static_cast<unsigned long>(i + 1)), BN_);
    if (x0c <= col_lo && col_hi <= x1c)
      return rows_in_column(columns_[i], G_, W_, windowed_y, wy0, wy1);
    Rational xa = x0c > col_lo ? x0c : col_lo;
    Rational xb = x1c < col_hi ? x1c : col_hi;
    if (xa >= xb) return 0;
    Int local = lcm3(denom_, pl_->eval(xa).get_den(), pl_->eval(xb).get_den());
    Int factor = local / denom_;
    ColumnExtent e = range_extent(xa, xb, local);
    return rows_in_column(e, Int(G_ * factor), Int(W_ * factor), windowed_y, Int(wy0 * factor),
                          Int(wy1 * factor));
  };

  if (workers <= 1 || n_cols < 512) {
    Int total(0);
    for (std::size_t i = begin; i < end; ++i) total += static_cast<long>(column_count(i));
    return total;
  }
  const std::size_t chunk = 256;
  std::size_t n_chunks = (n_cols + chunk - 1) / chunk;
  std::vector<long long> sums(n_chunks, 0);
  parallel_for(n_chunks, workers, [&](std::size_t c) {
    std::size_t lo = begin + c * chunk;
    std::size_t hi = std::min(end, lo + chunk);
    long long s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += column_count(i);
    sums[c] = s;
  });
  Int total(0);
  for (long long s : sums) total += static_cast<long>(s);
  return total;
}

Int strip_mesh_count(const Strip& strip, unsigned N, const std::optional<MeshWindow>& window,
                     const CountOptions& options) {
  Int hint(1);
  if (window && window->has_y) {
    mpz_lcm(hint.get_mpz_t(), window->y0.get_den().get_mpz_t(),
            window->y1.get_den().get_mpz_t());
  }
  return StripCounter(strip, N, hint).count(window, options.workers);
}

namespace {

struct RangeAccumulator {
  std::vector<std::pair<long long, long long>> ranges;

  void add(long long lo, long long hi) { ranges.emplace_back(lo, hi); }

  long long flush() {
    if (ranges.empty()) return 0;
    std::sort(ranges.begin(), ranges.end());
    long long covered = 0;
    long long cur_lo = ranges[0].first, cur_hi = ranges[0].second;
    for (std::size_t k = 1; k < ranges.size(); ++k) {
      if (ranges[k].first <= cur_hi + 1) {
        if (ranges[k].second > cur_hi) cur_hi = ranges[k].second;
      } else {
        covered += cur_hi - cur_lo + 1;
        cur_lo = ranges[k].first;
        cur_hi = ranges[k].second;
      }
    }
    covered += cur_hi - cur_lo + 1;
    ranges.clear();
    return covered;
  }
};

}  // namespace

Int graph_point_lower_count(const CoefficientSequence& seq, unsigned N,
                            const std::optional<MeshWindow>& window,
                            const LowerCountOptions& options) {
  const unsigned long ub = static_cast<unsigned long>(seq.base());
  const unsigned M = N + options.refinement;
  Int BM = pow_int(ub, M);
  if (BM > Int(static_cast<unsigned long>(std::size_t(1) << 32)))
    throw ResourceError("sample grid of " + BM.get_str() + " points exceeds the cap");

  Rational x0c(0), x1c(1);
  bool windowed_y = false;
  std::vector<Int> extra;
  if (window) {
    if (window->x0 > x0c) x0c = window->x0;
    if (window->x1 < x1c) x1c = window->x1;
    if (x0c >= x1c) return 0;
    if (window->has_y) {
      if (window->y0 > window->y1) return 0;
      windowed_y = true;
      extra.push_back(window->y0.get_den());
      extra.push_back(window->y1.get_den());
    }
  }

  GridEvaluator eval(seq, M, extra);
  const Int& Dv = eval.denominator();
  Int Gv = Dv / pow_int(ub, N);

  Int wy0(0), wy1(0);
  if (windowed_y) {
    wy0 = scale_exact(window->y0, Dv);
    wy1 = scale_exact(window->y1, Dv);
  }

  // samples at x = j / b^M with x in [x0c, x1c)
  Int j_first = ceil_to_int(x0c * BM);
  Rational jhi = x1c * BM;
  Int j_points_end = ceil_to_int(jhi);      // points: j < j_points_end
  Int j_pair_last = floor_to_int(jhi) - 1;  // fill pairs (j, j+1): x_{j+1} <= x1c
  if (j_first < 0) j_first = 0;
  if (j_points_end > BM) j_points_end = BM;
  if (j_pair_last > BM - 1) j_pair_last = BM - 1;
  if (j_first >= j_points_end) return 0;

  const bool fill = options.mode == SampleMode::fill;
  const unsigned long begin = j_first.get_ui();
  const unsigned long points_end = j_points_end.get_ui();
  const bool has_pairs = fill && j_pair_last >= j_first;
  const unsigned long pair_last = has_pairs ? j_pair_last.get_ui() : 0;
  unsigned long stream_end = points_end;
  if (has_pairs && pair_last + 2 > stream_end) stream_end = pair_last + 2;

  const unsigned long bq = pow_int(ub, options.refinement).get_ui();

  struct Chunk {
    unsigned long j_lo, j_hi;     // stream range [j_lo, j_hi)
    unsigned long col_end;        // owns mesh columns [j_lo / bq, col_end)
  };
  const unsigned long first_col = begin / bq;
  const unsigned long last_col = (stream_end - 1) / bq;
  const unsigned long n_cols = last_col - first_col + 1;
  unsigned workers = options.workers == 0 ? 1 : options.workers;
  unsigned long cols_per_chunk = n_cols;
  if (workers > 1) cols_per_chunk = std::max<unsigned long>(64, n_cols / (4ul * workers));
  std::vector<Chunk> chunks;
  for (unsigned long c = first_col; c <= last_col; c += cols_per_chunk) {
    unsigned long c_end = std::min(last_col + 1, c + cols_per_chunk);
    unsigned long lo = std::max(begin, c * bq);
    unsigned long hi = std::min(stream_end, c_end * bq);
    if (has_pairs && hi < stream_end) hi += 1;  // pair right endpoint in the next chunk
    if (lo < hi) chunks.push_back({lo, hi, c_end});
  }

  std::vector<long long> sums(chunks.size(), 0);
  parallel_for(chunks.size(), workers, [&](std::size_t ci) {
    const Chunk& ch = chunks[ci];
    RangeAccumulator acc;
    long long total = 0;
    unsigned long cur_col = ch.j_lo / bq;
    bool have_prev = false;
    Int prev;
    eval.stream(ch.j_lo, ch.j_hi, [&](unsigned long j, const Int& value) {
      if (has_pairs && have_prev && j - 1 <= pair_last) {
        // rows strictly between consecutive sample values, clipped to the
        // band; attained inside (x_{j-1}, x_j) by continuity, which stays in
        // the column of x_{j-1}
        const Int& lo_s = prev < value ? prev : value;
        const Int& hi_s = prev < value ? value : prev;
        if (lo_s < hi_s) {
          Int L = lo_s;
          Int H = hi_s;
          bool H_closed = false;  // sample endpoints themselves are excluded
          if (windowed_y) {
            if (wy0 > L) L = wy0;
            if (wy1 < H) {
              H = wy1;
              H_closed = true;
            }
          }
          bool nonempty = L < H || (L == H && L > lo_s && L < hi_s);
          if (nonempty) {
            long long bot = to_ll(floor_div(L, Gv));
            long long top;
            if (!H_closed && divides(Gv, H)) {
              top = to_ll(H / Gv) - 1;
            } else {
              top = to_ll(floor_div(H, Gv));
            }
            if (top >= bot) acc.add(bot, top);
          }
        }
      }
      unsigned long col = j / bq;
      if (col != cur_col) {
        total += acc.flush();
        cur_col = col;
      }
      if (j < points_end && col < ch.col_end) {
        if (!windowed_y || (wy0 <= value && value <= wy1)) {
          long long r = to_ll(floor_div(value, Gv));
          acc.add(r, r);
        }
      }
      prev = value;
      have_prev = true;
    });
    total += acc.flush();
    sums[ci] = total;
  });

  Int total(0);
  for (long long s : sums) total += static_cast<long>(s);
  return total;
}

Rational RestrictedDomain::total_length() const {
  Rational sum(0);
  for (const auto& iv : intervals) sum += iv.second - iv.first;
  return sum;
}

RestrictedDomain restricted_domain(const PiecewiseLinearFunction& Hn, unsigned n,
                                   std::size_t column, const Rational& y,
                                   const Rational& eta_value) {
  if (Hn.level() != n) throw DomainError("restricted domain needs the level-n partial sum");
  Int bn = pow_int(static_cast<unsigned long>(Hn.base()), n);
  if (Int(static_cast<unsigned long>(column)) >= bn) throw DomainError("column out of range");
  Rational threshold = 2 * eta_value * make_rational(1, bn);

  RestrictedDomain out;
  // the two half-columns are exactly grid cells 2*column and 2*column + 1
  for (std::size_t half = 0; half < 2; ++half) {
    std::size_t t = 2 * column + half;
    Rational xa = Hn.grid_x(t), xb = Hn.grid_x(t + 1);
    Rational va = Hn.value_at_grid(t), vb = Hn.value_at_grid(t + 1);
    Rational lo_y = y - threshold, hi_y = y + threshold;
    Rational rise = vb - va;
    if (rise == 0) {
      if (va < lo_y || va > hi_y) continue;
      out.intervals.emplace_back(xa, xb);
      continue;
    }
    Rational width = xb - xa;
    Rational x_at_lo = xa + (lo_y - va) * width / rise;
    Rational x_at_hi = xa + (hi_y - va) * width / rise;
    Rational lo_x = x_at_lo < x_at_hi ? x_at_lo : x_at_hi;
    Rational hi_x = x_at_lo < x_at_hi ? x_at_hi : x_at_lo;
    if (lo_x < xa) lo_x = xa;
    if (hi_x > xb) hi_x = xb;
    if (lo_x <= hi_x) out.intervals.emplace_back(lo_x, hi_x);
  }
  return out;
}

Int window_count_bound(const Rational& eta_value, int base, unsigned m) {
  Rational bound = (10 * eta_value + static_cast<long>(m) * eta_value + 4) *
                   Rational(pow_int(static_cast<unsigned long>(base), m));
  return ceil_to_int(bound);
}

Int localized_count_bound(const Rational& eta_value, int base, unsigned m) {
  return ceil_to_int(3 * (10 * eta_value + static_cast<long>(m) * eta_value + 4) *
                     Rational(pow_int(static_cast<unsigned long>(base), m)));
}

WindowCheck check_window_count(const StripCounter& counter, const Rational& eta_value, int base,
                               unsigned n, unsigned m, std::size_t column, const Rational& y) {
  Int bn = pow_int(static_cast<unsigned long>(base), n);
  Rational eps = eta_value * make_rational(1, bn);
  MeshWindow w = MeshWindow::box(make_rational(Int(static_cast<unsigned long>(column)), bn),
                                 make_rational(Int(static_cast<unsigned long>(column + 1)), bn),
                                 y - eps, y + eps);
  Int count = counter.count(w);
  Int bound = window_count_bound(eta_value, base, m);
  return WindowCheck{count, bound, count <= bound};
}

WindowCheck check_window_count(const CoefficientSequence& seq, unsigned n, unsigned m,
                               std::size_t column, const Rational& y, const BuildLimits& limits) {
  const Rational& eta_value = seq.eta().value();  // throws when infinite
  Strip strip = make_strip(seq, n + m, limits);
  Int bn = pow_int(static_cast<unsigned long>(seq.base()), n);
  Int hint = y.get_den() * eta_value.get_den() * bn;
  StripCounter counter(strip, n + m, hint);
  return check_window_count(counter, eta_value, seq.base(), n, m, column, y);
}

CountBounds localized_count(const CoefficientSequence& seq, const Rational& x0, unsigned n,
                            unsigned m, const LocalizedOptions& options) {
  if (x0 < 0 || x0 > 1) throw DomainError("x0 outside [0,1]");
  auto level = b_adic_level(x0, seq.base());
  if (!level) throw DomainError("x0 must be b-adic so f(x0) is exact");
  const unsigned N = n + m;
  const Int bn = pow_int(static_cast<unsigned long>(seq.base()), n);
  const Rational step = make_rational(1, bn);

  Int j = x0.get_num() * pow_int(static_cast<unsigned long>(seq.base()), *level) / x0.get_den();
  Rational y0 = eval_exact(seq, j, *level);

  MeshWindow q_window = MeshWindow::box(x0 - step, x0 + step, y0 - step, y0 + step);

  Int lower = graph_point_lower_count(
      seq, N, q_window, LowerCountOptions{options.refinement, options.mode, options.workers});

  Int upper(0);
  if (options.want_upper) {
    const Rational& eta_value = seq.eta().value();
    Rational eps = eta_value * step;
    Int i = floor_to_int(x0 * bn);
    // the three level-n columns covering [x0 - b^-n, x0 + b^-n]
    MeshWindow wide = MeshWindow::box(Rational(i - 1) * step, Rational(i + 2) * step, y0 - eps,
                                      y0 + eps);
    Strip strip = make_strip(seq, N, options.limits);
    Int hint = y0.get_den() * eps.get_den();
    StripCounter counter(strip, N, hint);
    upper = counter.count(wide, options.workers);
  }
  return CountBounds{lower, upper, N, q_window};
}

}  // namespace takagi
