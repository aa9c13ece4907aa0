#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "takagi/dimension.hpp"
#include "takagi/errors.hpp"
#include "test_support.hpp"

using namespace takagi;
using namespace takagi::test;

TEST_CASE("least squares") {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 6; ++i) pts.emplace_back(i, 2.0 * i + 1.0);
  auto fit = ols_fit(pts);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.residual_rms == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(ols_fit({{0, 0}, {1, 1}}), InsufficientDataError);
  CHECK_THROWS_AS(ols_fit({{1, 0}, {1, 1}, {1, 2}}), InsufficientDataError);
}

TEST_CASE("box fit on the zero function is exactly one") {
  auto zero = CoefficientSequence::explicit_list(2, {}, Rational(0));
  BoxDimOptions opts;
  opts.N_min = 2;
  opts.N_max = 6;
  auto result = box_dimension_fit(zero, opts);
  for (const auto& p : result.table) {
    CHECK(p.lower == pow_int(2, p.N));
    CHECK(p.upper == pow_int(2, p.N));
  }
  CHECK(std::abs(result.fit.slope - 1.0) < 1e-9);
  CHECK(std::abs(result.fit_lower.slope - 1.0) < 1e-9);
  CHECK(std::abs(result.fit_upper.slope - 1.0) < 1e-9);
}

TEST_CASE("box fit range validation") {
  BoxDimOptions opts;
  opts.N_min = 4;
  opts.N_max = 5;
  CHECK_THROWS_AS(box_dimension_fit(classical(), opts), InsufficientDataError);
}

TEST_CASE("box fit on the classical sequence near one") {
  BoxDimOptions opts;
  opts.N_min = 4;
  opts.N_max = 10;
  auto result = box_dimension_fit(classical(), opts);
  CHECK(result.fit.slope > 0.85);
  CHECK(result.fit.slope < 1.2);
  CHECK(result.fit_lower.slope <= result.fit_upper.slope + 0.05);
  for (const auto& p : result.table) CHECK(p.lower <= p.upper);
}

TEST_CASE("localized profile of the zero function scales exactly linearly") {
  auto zero = CoefficientSequence::explicit_list(2, {}, Rational(0));
  AssouadOptions opts;
  opts.n_list = {2, 3};
  opts.m_list = {1, 2, 3, 4};
  auto profile = assouad_profile(zero, opts);
  auto fit = assouad_slope(profile, CountSide::upper);
  CHECK(std::abs(fit.slope - 1.0) < 1e-9);
  auto lower_fit = assouad_slope(profile, CountSide::lower);
  CHECK(std::abs(lower_fit.slope - 1.0) < 1e-9);
}

TEST_CASE("localized profile of the classical sequence") {
  AssouadOptions opts;
  opts.n_list = {2, 3, 4};
  opts.m_list = {1, 2, 3, 4, 5};
  opts.refinement = 4;
  auto profile = assouad_profile(classical(), opts);
  REQUIRE(profile.rows.size() == 15);
  for (const auto& row : profile.rows) {
    CHECK(row.max_lower >= 1);
    CHECK(row.max_lower <= row.max_upper);
    CHECK(row.max_upper <= row.bound);
  }
  auto fit = assouad_slope(profile, CountSide::upper);
  CHECK(fit.slope > 0.7);
  CHECK(fit.slope < 1.3);
}

TEST_CASE("upper profile refuses an infinite eta certificate") {
  AssouadOptions opts;
  opts.n_list = {2};
  opts.m_list = {1, 2, 3};
  CHECK_THROWS_AS(assouad_profile(steep_geometric(), opts), EtaInfiniteError);

  opts.want_upper = false;
  opts.strategy = X0Strategy::seeded;
  opts.sample_size = 4;
  auto profile = assouad_profile(steep_geometric(), opts);
  CHECK_THROWS_AS(assouad_slope(profile, CountSide::upper), InsufficientDataError);
  auto fit = assouad_slope(profile, CountSide::lower);
  CHECK(fit.slope > 0.0);
}

TEST_CASE("slope discrimination between flat and steep ratios") {
  AssouadOptions opts;
  opts.n_list = {3, 4};
  opts.m_list = {1, 2, 3, 4, 5, 6};
  opts.strategy = X0Strategy::seeded;
  opts.sample_size = 8;
  opts.seed = 11;
  opts.refinement = 6;
  opts.want_upper = false;

  auto steep = assouad_slope(assouad_profile(steep_geometric(), opts), CountSide::lower);
  auto flat = assouad_slope(assouad_profile(classical(), opts), CountSide::lower);
  CHECK(steep.slope - flat.slope >= 0.15);
}

TEST_CASE("profiles are deterministic for a fixed seed") {
  AssouadOptions opts;
  opts.n_list = {3};
  opts.m_list = {1, 2, 3};
  opts.strategy = X0Strategy::seeded;
  opts.sample_size = 6;
  opts.seed = 99;
  auto a = assouad_profile(classical(), opts);
  auto b = assouad_profile(classical(), opts);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].max_lower == b.rows[i].max_lower);
    CHECK(a.rows[i].max_upper == b.rows[i].max_upper);
  }
}
