#include "takagi/dimension.hpp"

#include <cmath>
#include <map>

#include "takagi/errors.hpp"
#include "takagi/evaluation.hpp"
#include "takagi/grid_eval.hpp"

namespace takagi {

DimensionEstimate ols_fit(std::vector<std::pair<double, double>> points) {
  if (points.size() < 3)
    throw InsufficientDataError("least-squares fit needs at least 3 points, got " +
                                std::to_string(points.size()));
  double sx = 0, sy = 0;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) throw InsufficientDataError("degenerate fit: all abscissae equal");
  DimensionEstimate est;
  est.slope = sxy / sxx;
  est.intercept = my - est.slope * mx;
  double ss = 0;
  for (const auto& [x, y] : points) {
    double r = y - (est.intercept + est.slope * x);
    ss += r * r;
  }
  est.residual_rms = std::sqrt(ss / n);
  est.points = std::move(points);
  return est;
}

namespace {

double log_count(const Int& c) {
  if (c <= 0) throw InsufficientDataError("cannot fit a zero cell count");
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, c.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

unsigned auto_refinement(const Int& upper, unsigned N, int base, unsigned cap) {
  // aim the sample count at a few times the expected cell count
  double target = 4.0 * to_double(Rational(upper)) /
                  std::pow(static_cast<double>(base), static_cast<double>(N));
  unsigned q = 0;
  double have = 1.0;
  while (have < target && q < cap) {
    have *= base;
    ++q;
  }
  return q;
}

}  // namespace

BoxDimResult box_dimension_fit(const CoefficientSequence& seq, const BoxDimOptions& options) {
  if (options.N_max < options.N_min + 2)
    throw InsufficientDataError("box-dimension fit needs N_max >= N_min + 2");
  BoxDimResult result;
  const double logb = std::log(static_cast<double>(seq.base()));
  std::vector<std::pair<double, double>> mid, lows, ups;
  for (unsigned N = options.N_min; N <= options.N_max; ++N) {
    Strip strip = make_strip(seq, N, options.limits);
    Int upper = StripCounter(strip, N).count({}, options.workers);
    unsigned q = options.refinement >= 0
                     ? static_cast<unsigned>(options.refinement)
                     : auto_refinement(upper, N, seq.base(), options.refinement_cap);
    Int lower = graph_point_lower_count(seq, N, {},
                                        LowerCountOptions{q, options.mode, options.workers});
    double x = static_cast<double>(N) * logb;
    double ll = log_count(lower), lu = log_count(upper);
    mid.emplace_back(x, (ll + lu) / 2.0);
    lows.emplace_back(x, ll);
    ups.emplace_back(x, lu);
    result.table.push_back(BoxScalePoint{N, lower, upper, q});
  }
  result.fit = ols_fit(std::move(mid));
  result.fit_lower = ols_fit(std::move(lows));
  result.fit_upper = ols_fit(std::move(ups));
  return result;
}

AssouadProfile assouad_profile(const CoefficientSequence& seq, const AssouadOptions& options) {
  if (options.want_upper && !seq.eta().is_finite())
    throw EtaInfiniteError("upper localized profile needs a finite eta certificate; "
                           "request the lower profile only");
  AssouadProfile profile;
  profile.base = seq.base();
  profile.has_upper = options.want_upper;
  profile.has_lower = options.want_lower;
  const unsigned long ub = static_cast<unsigned long>(seq.base());

  std::map<unsigned, Strip> strip_cache;
  auto strip_at = [&](unsigned N) -> Strip& {
    auto it = strip_cache.find(N);
    if (it == strip_cache.end())
      it = strip_cache.emplace(N, make_strip(seq, N, options.limits)).first;
    return it->second;
  };

  for (unsigned n : options.n_list) {
    // x0 family for this window level, with exact f(x0)
    std::vector<std::pair<Rational, Rational>> points;  // (x0, y0)
    Int y_dens(1);
    if (options.strategy == X0Strategy::grid_points) {
      Int bn = pow_int(ub, n);
      for (Int j(0); j <= bn; ++j) {
        Rational x0 = make_rational(j, bn);
        Rational y0 = eval_exact(seq, j, n);
        mpz_lcm(y_dens.get_mpz_t(), y_dens.get_mpz_t(), y0.get_den().get_mpz_t());
        points.emplace_back(std::move(x0), std::move(y0));
      }
    } else {
      unsigned level = n + 2;
      Int bl = pow_int(ub, level);
      for (std::size_t t = 0; t < options.sample_size; ++t) {
        std::uint64_t raw = splitmix64(options.seed + 0x51ED270B * static_cast<std::uint64_t>(n) +
                                       static_cast<std::uint64_t>(t));
        Int j(static_cast<unsigned long>(raw));
        mpz_mod(j.get_mpz_t(), j.get_mpz_t(), Int(bl + 1).get_mpz_t());
        Rational x0 = make_rational(j, bl);
        Rational y0 = eval_exact(seq, j, level);
        mpz_lcm(y_dens.get_mpz_t(), y_dens.get_mpz_t(), y0.get_den().get_mpz_t());
        points.emplace_back(std::move(x0), std::move(y0));
      }
    }

    const Int bn = pow_int(ub, n);
    const Rational step = make_rational(1, bn);

    for (unsigned m : options.m_list) {
      const unsigned N = n + m;
      AssouadRow row{n, m, Int(0), Int(0), Int(0)};

      if (options.want_upper) {
        const Rational& eta_value = seq.eta().value();
        Rational eps = eta_value * step;
        row.bound = localized_count_bound(eta_value, seq.base(), m);
        Int hint = y_dens * eps.get_den();
        StripCounter counter(strip_at(N), N, hint);
        for (const auto& [x0, y0] : points) {
          Int i = floor_to_int(x0 * bn);
          MeshWindow wide = MeshWindow::box(Rational(i - 1) * step, Rational(i + 2) * step,
                                            y0 - eps, y0 + eps);
          Int c = counter.count(wide, options.workers);
          if (c > row.max_upper) row.max_upper = c;
        }
      }
      if (options.want_lower) {
        for (const auto& [x0, y0] : points) {
          MeshWindow q_window = MeshWindow::box(x0 - step, x0 + step, y0 - step, y0 + step);
          Int c = graph_point_lower_count(
              seq, N, q_window,
              LowerCountOptions{options.refinement, options.mode, options.workers});
          if (c > row.max_lower) row.max_lower = c;
        }
      }
      profile.rows.push_back(std::move(row));
    }
  }
  return profile;
}

DimensionEstimate assouad_slope(const AssouadProfile& profile, CountSide side) {
  if ((side == CountSide::upper && !profile.has_upper) ||
      (side == CountSide::lower && !profile.has_lower))
    throw InsufficientDataError("profile does not carry the requested count side");
  std::map<unsigned, Int> best;
  for (const auto& row : profile.rows) {
    const Int& c = side == CountSide::upper ? row.max_upper : row.max_lower;
    auto it = best.find(row.m);
    if (it == best.end() || c > it->second) best[row.m] = c;
  }
  if (best.size() < 3)
    throw InsufficientDataError("localized slope needs at least 3 values of m");
  const double logb = std::log(static_cast<double>(profile.base));
  std::vector<std::pair<double, double>> pts;
  for (const auto& [m, c] : best) pts.emplace_back(static_cast<double>(m) * logb, log_count(c));
  return ols_fit(std::move(pts));
}

}  // namespace takagi
