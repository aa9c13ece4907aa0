#include "takagi/verify.hpp"

#include <algorithm>
#include <map>

#include "takagi/errors.hpp"
#include "takagi/evaluation.hpp"
#include "takagi/oracle.hpp"
#include "takagi/piecewise_linear.hpp"

namespace takagi {

VerifyOutcome verify_window_counts(const CoefficientSequence& seq, const VerifyOptions& options,
                                   std::ostream* os) {
  const Rational& eta_value = seq.eta().value();
  const int b = seq.base();
  const unsigned long ub = static_cast<unsigned long>(b);
  VerifyOutcome outcome;

  std::map<unsigned, Strip> strips;
  auto strip_at = [&](unsigned N) -> Strip& {
    auto it = strips.find(N);
    if (it == strips.end()) it = strips.emplace(N, make_strip(seq, N, options.limits)).first;
    return it->second;
  };

  if (os) write_verify_header(*os);
  for (unsigned n = 0; n <= options.n_max; ++n) {
    PiecewiseLinearFunction Hn = build_partial_sum(seq, n, options.limits);
    Int bn = pow_int(ub, n);
    Rational eps = eta_value * make_rational(1, bn);
    const Rational offsets[5] = {Rational(0), eps, -eps, 2 * eps, -2 * eps};
    Int hint;
    mpz_lcm(hint.get_mpz_t(), Hn.denominator().get_mpz_t(), eps.get_den().get_mpz_t());

    for (unsigned m = 1; m <= options.m_max; ++m) {
      StripCounter counter(strip_at(n + m), n + m, hint);
      std::size_t n_cols = static_cast<std::size_t>(bn.get_ui());
      for (std::size_t col = 0; col < n_cols; ++col) {
        std::vector<Rational> ys;
        for (std::size_t t = 2 * col; t <= 2 * col + 2; ++t) {
          Rational v = Hn.value_at_grid(t);
          for (const Rational& off : offsets) ys.push_back(v + off);
        }
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        for (const Rational& y : ys) {
          WindowCheck check = check_window_count(counter, eta_value, b, n, m, col, y);
          ++outcome.windows;
          if (!check.ok) ++outcome.violations;
          if (os)
            write_verify_row(*os, VerifyCsvRow{n, m, col, y, check.count, check.bound, check.ok});
        }
      }
    }
  }
  return outcome;
}

VerifyOutcome verify_localized_counts(const CoefficientSequence& seq,
                                      const VerifyOptions& options, std::ostream* os) {
  const Rational& eta_value = seq.eta().value();
  const int b = seq.base();
  const unsigned long ub = static_cast<unsigned long>(b);
  VerifyOutcome outcome;

  std::map<unsigned, Strip> strips;
  auto strip_at = [&](unsigned N) -> Strip& {
    auto it = strips.find(N);
    if (it == strips.end()) it = strips.emplace(N, make_strip(seq, N, options.limits)).first;
    return it->second;
  };

  if (os) write_localized_header(*os);
  for (unsigned n = 0; n <= options.n_max; ++n) {
    const unsigned x0_level = n + 1;
    Int bl = pow_int(ub, x0_level);
    Int bn = pow_int(ub, n);
    Rational step = make_rational(1, bn);
    Rational eps = eta_value * step;

    std::vector<std::pair<Rational, Rational>> points;
    Int y_dens(1);
    for (Int j(0); j <= bl; ++j) {
      Rational x0 = make_rational(j, bl);
      Rational y0 = eval_exact(seq, j, x0_level);
      mpz_lcm(y_dens.get_mpz_t(), y_dens.get_mpz_t(), y0.get_den().get_mpz_t());
      points.emplace_back(std::move(x0), std::move(y0));
    }

    for (unsigned m = 1; m <= options.m_max; ++m) {
      const unsigned N = n + m;
      Int bound = localized_count_bound(eta_value, b, m);
      Int hint = y_dens;
      mpz_lcm(hint.get_mpz_t(), hint.get_mpz_t(), eps.get_den().get_mpz_t());
      StripCounter counter(strip_at(N), N, hint);
      for (const auto& [x0, y0] : points) {
        Int i = floor_to_int(x0 * bn);
        MeshWindow wide =
            MeshWindow::box(Rational(i - 1) * step, Rational(i + 2) * step, y0 - eps, y0 + eps);
        Int upper = counter.count(wide, options.workers);
        MeshWindow q_window = MeshWindow::box(x0 - step, x0 + step, y0 - step, y0 + step);
        Int lower = graph_point_lower_count(seq, N, q_window,
                                            LowerCountOptions{1, SampleMode::points, 1});
        ++outcome.windows;
        if (upper > bound || lower > upper) ++outcome.violations;
        if (os) write_localized_row(*os, LocalizedCsvRow{x0, n, m, lower, upper, bound});
      }
    }
  }
  return outcome;
}

namespace {

// counter-based uniform draw in [0, n]
Int draw_mod(std::uint64_t seed, std::uint64_t t, const Int& n_inclusive) {
  Int r(static_cast<unsigned long>(splitmix64(seed + t)));
  Int span = n_inclusive + 1;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), span.get_mpz_t());
  return r;
}

}  // namespace

std::vector<PropertySuite> verify_lemma_properties(const CoefficientSequence& seq,
                                                   const PropertyOptions& options) {
  const int b = seq.base();
  const unsigned long ub = static_cast<unsigned long>(b);
  const bool eta_finite = seq.eta().is_finite();
  std::vector<PropertySuite> suites;

  // strip containment at exact b-adic points: |f(x) - H_n(x)| <= tail_bound(n)
  {
    PropertySuite s{"containment", 0, 0};
    const unsigned level = std::min<unsigned>(14, 60 / static_cast<unsigned>(b));
    Int bl = pow_int(ub, level);
    for (std::size_t t = 0; t < options.samples; ++t) {
      Int j = draw_mod(options.seed * 2 + 1, t, bl);
      unsigned n = static_cast<unsigned>(
          splitmix64(options.seed * 3 + t) % static_cast<std::uint64_t>(options.n_cap + 1));
      Rational x = make_rational(j, bl);
      Rational gap = eval_exact(seq, j, level) - partial_sum_at(seq, n, x);
      if (gap < 0) gap = -gap;
      ++s.checks;
      if (gap > seq.tail_bound(n)) ++s.failures;
      if (eta_finite && gap > seq.eta().value() * make_rational(1, pow_int(ub, n))) ++s.failures;
    }
    suites.push_back(std::move(s));
  }

  // exact linearity of H_n across each level-n cell midpoint
  {
    PropertySuite s{"linearity", 0, 0};
    for (unsigned n = 0; n <= std::min(options.n_cap, 10u); ++n) {
      PiecewiseLinearFunction Hn = build_partial_sum(seq, n);
      std::size_t cells = Hn.grid_size() - 1;
      std::size_t step = std::max<std::size_t>(1, cells / 64);
      for (std::size_t c = 0; c < cells; c += step) {
        Rational mid = (Hn.grid_x(c) + Hn.grid_x(c + 1)) / 2;
        ++s.checks;
        if (partial_sum_at(seq, n, mid) != Hn.eval(mid)) ++s.failures;
      }
    }
    suites.push_back(std::move(s));
  }

  // Lipschitz bounds n*eta and m*eta (finite-eta sequences)
  if (eta_finite) {
    PropertySuite s{"lipschitz", 0, 0};
    const Rational& eta_value = seq.eta().value();
    Int grid = pow_int(2, 24);
    for (std::size_t t = 0; t < options.samples; ++t) {
      Rational x1 = make_rational(draw_mod(options.seed * 5 + 2, t, grid), grid);
      Rational x2 = make_rational(draw_mod(options.seed * 7 + 3, t, grid), grid);
      unsigned n = 1 + static_cast<unsigned>(splitmix64(options.seed * 11 + t) %
                                             static_cast<std::uint64_t>(options.n_cap));
      unsigned m = 1 + static_cast<unsigned>(splitmix64(options.seed * 13 + t) %
                                             static_cast<std::uint64_t>(options.n_cap));
      Rational dist = x1 < x2 ? x2 - x1 : x1 - x2;
      Rational dn = partial_sum_at(seq, n, x1) - partial_sum_at(seq, n, x2);
      if (dn < 0) dn = -dn;
      Rational dw = window_sum_at(seq, n, m, x1) - window_sum_at(seq, n, m, x2);
      if (dw < 0) dw = -dw;
      s.checks += 2;
      if (dn > static_cast<long>(n) * eta_value * dist) ++s.failures;
      if (dw > static_cast<long>(m) * eta_value * dist) ++s.failures;
    }
    suites.push_back(std::move(s));
  }

  // per-column cell count against oscillation/r + 2
  {
    PropertySuite s{"column-count", 0, 0};
    for (unsigned n = 1; n <= std::min(options.n_cap, 12u); n += 2) {
      PiecewiseLinearFunction Hn = build_partial_sum(seq, n);
      ++s.checks;
      if (!check_column_bound(Hn, n)) ++s.failures;
    }
    suites.push_back(std::move(s));
  }

  // H_{n+m} = H_n + H_{n,m} exactly at shared grid points
  {
    PropertySuite s{"telescoping", 0, 0};
    for (unsigned n = 0; n <= 4; ++n) {
      for (unsigned m = 1; m <= 4; ++m) {
        PiecewiseLinearFunction full = build_partial_sum(seq, n + m);
        PiecewiseLinearFunction head = build_partial_sum(seq, n);
        PiecewiseLinearFunction window = build_window_sum(seq, n, m);
        std::size_t pts = full.grid_size();
        std::size_t step = std::max<std::size_t>(1, pts / 64);
        for (std::size_t t = 0; t < pts; t += step) {
          Rational x = full.grid_x(t);
          ++s.checks;
          if (full.value_at_grid(t) != head.eval(x) + window.value_at_grid(t)) ++s.failures;
        }
      }
    }
    suites.push_back(std::move(s));
  }

  // certified evaluation brackets the exact value at b-adic points
  {
    PropertySuite s{"certified-brackets", 0, 0};
    const unsigned level = 10;
    Int bl = pow_int(ub, level);
    for (std::size_t t = 0; t < std::min<std::size_t>(options.samples, 200); ++t) {
      Int j = draw_mod(options.seed * 17 + 7, t, bl);
      Rational x = make_rational(j, bl);
      Rational exact = eval_exact(seq, j, level);
      Rational eps = make_rational(1, pow_int(10, 1 + t % 8));
      ++s.checks;
      if (!eval_certified(seq, x, eps).contains(exact)) ++s.failures;
    }
    suites.push_back(std::move(s));
  }

  return suites;
}

}  // namespace takagi
