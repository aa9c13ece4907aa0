#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "takagi/errors.hpp"
#include "takagi/evaluation.hpp"
#include "takagi/piecewise_linear.hpp"
#include "test_support.hpp"

using namespace takagi;
using namespace takagi::test;

TEST_CASE("partial sum values on the grid") {
  auto T = classical();

  auto H1 = build_partial_sum(T, 1);
  CHECK(H1.level() == 1);
  CHECK(H1.grid_size() == 5);
  CHECK(H1.value_at_grid(0) == rat(0));
  CHECK(H1.value_at_grid(1) == rat(1, 4));
  CHECK(H1.value_at_grid(2) == rat(1, 2));
  CHECK(H1.eval(rat(1, 2)) == rat(1, 2));
  CHECK(H1.eval(rat(1, 3)) == rat(1, 3));  // phi is the identity on [0,1/2]

  auto H2 = build_partial_sum(T, 2);
  CHECK(H2.eval(rat(1, 4)) == rat(1, 2));
  CHECK(H2.eval(rat(3, 8)) == rat(1, 2));
  CHECK(H2.eval(rat(1, 3)) == rat(1, 2));  // interpolation between equal values

  auto H0 = build_partial_sum(T, 0);
  for (std::size_t t = 0; t < H0.grid_size(); ++t) CHECK(H0.value_at_grid(t) == rat(0));
}

TEST_CASE("window sums and telescoping") {
  auto T = classical();
  auto sig = alternating_signal();

  auto W = build_window_sum(T, 1, 1);
  CHECK(W.eval(rat(1, 4)) == rat(1, 4));
  auto Ws = build_window_sum(sig, 1, 1);
  CHECK(Ws.eval(rat(1, 4)) == rat(-1, 4));

  // window starting at zero reproduces the plain partial sum
  auto H2 = build_partial_sum(T, 2);
  auto W02 = build_window_sum(T, 0, 2);
  for (std::size_t t = 0; t < W02.grid_size(); ++t)
    CHECK(W02.value_at_grid(t) == H2.eval(W02.grid_x(t)));

  std::vector<CoefficientSequence> seqs = {classical(), alternating_signal(), steep_geometric(),
                                           base3()};
  for (const auto& seq : seqs) {
    for (unsigned n = 0; n <= 3; ++n) {
      for (unsigned m = 1; m <= 3; ++m) {
        auto full = build_partial_sum(seq, n + m);
        auto head = build_partial_sum(seq, n);
        auto window = build_window_sum(seq, n, m);
        REQUIRE(full.grid_size() == window.grid_size());
        for (std::size_t t = 0; t < full.grid_size(); ++t) {
          CHECK(full.value_at_grid(t) ==
                head.eval(full.grid_x(t)) + window.value_at_grid(t));
        }
      }
    }
  }
}

TEST_CASE("stored grid interpolation is exact for partial sums") {
  std::vector<CoefficientSequence> seqs = {classical(), alternating_signal(), steep_geometric()};
  for (const auto& seq : seqs) {
    for (unsigned n = 0; n <= 8; ++n) {
      auto Hn = build_partial_sum(seq, n);
      std::size_t cells = Hn.grid_size() - 1;
      std::size_t step = std::max<std::size_t>(1, cells / 32);
      for (std::size_t c = 0; c < cells; c += step) {
        Rational mid = (Hn.grid_x(c) + Hn.grid_x(c + 1)) / 2;
        CHECK(Hn.eval(mid) == partial_sum_at(seq, n, mid));
        Rational third = Hn.grid_x(c) + (Hn.grid_x(c + 1) - Hn.grid_x(c)) / 3;
        CHECK(Hn.eval(third) == partial_sum_at(seq, n, third));
      }
    }
  }
}

TEST_CASE("evaluation domain checks") {
  auto H1 = build_partial_sum(classical(), 1);
  CHECK_THROWS_AS(H1.eval(rat(2)), DomainError);
  CHECK_THROWS_AS(H1.eval(rat(-1, 8)), DomainError);
  CHECK(H1.eval(rat(1)) == rat(0));
  CHECK(H1.eval(rat(0)) == rat(0));
}

TEST_CASE("oscillation") {
  auto T = classical();
  auto H1 = build_partial_sum(T, 1);
  CHECK(H1.oscillation(rat(0), rat(1)) == rat(1, 2));
  CHECK(H1.oscillation(rat(1, 3), rat(1, 3)) == rat(0));

  auto H2 = build_partial_sum(T, 2);
  CHECK(H2.oscillation(rat(0), rat(1, 4)) == rat(1, 2));
  CHECK(H2.oscillation(rat(1, 4), rat(3, 4)) == rat(0));  // flat top

  CHECK_THROWS_AS(H1.oscillation(rat(0), rat(2)), DomainError);
}

TEST_CASE("variation") {
  auto T = classical();
  auto H1 = build_partial_sum(T, 1);
  CHECK(H1.variation(rat(0), rat(1)) == rat(1));
  // monotone stretch: variation equals oscillation
  CHECK(H1.variation(rat(0), rat(1, 2)) == H1.oscillation(rat(0), rat(1, 2)));
  CHECK(H1.variation(rat(1, 8), rat(3, 8)) == H1.oscillation(rat(1, 8), rat(3, 8)));

  auto zero = PiecewiseLinearFunction::zero(2, 2);
  CHECK(zero.variation(rat(0), rat(1)) == rat(0));

  // variation dominates oscillation
  auto H3 = build_partial_sum(T, 3);
  for (int i = 0; i < 8; ++i) {
    Rational u = rat(i, 11), v = rat(i + 3, 11);
    CHECK(H3.variation(u, v) >= H3.oscillation(u, v));
  }
}

TEST_CASE("grid cap is enforced") {
  BuildLimits limits;
  limits.max_grid_points = 100;
  CHECK_THROWS_AS(build_partial_sum(classical(), 10, limits), ResourceError);
  CHECK_NOTHROW(build_partial_sum(classical(), 5, limits));
}

TEST_CASE("construction validates shape") {
  CHECK_THROWS_AS(PiecewiseLinearFunction(2, 1, Int(1), {Int(0), Int(0)}), DomainError);
  CHECK_THROWS_AS(PiecewiseLinearFunction(2, 0, Int(0), {Int(0), Int(0), Int(0)}), DomainError);
}
