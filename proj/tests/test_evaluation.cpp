#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "takagi/errors.hpp"
#include "takagi/evaluation.hpp"
#include "takagi/grid_eval.hpp"
#include "test_support.hpp"

using namespace takagi;
using namespace takagi::test;

TEST_CASE("triangle wave") {
  CHECK(phi(rat(0)) == rat(0));
  CHECK(phi(rat(3, 4)) == rat(1, 4));
  CHECK(phi(rat(-1, 3)) == rat(1, 3));
  CHECK(phi(rat(1, 2)) == rat(1, 2));
  CHECK(phi(rat(5, 2)) == rat(1, 2));
  CHECK(phi(rat(7)) == rat(0));
  for (long k = -20; k < 20; ++k) {
    Rational t = make_rational(Int(k * 13 + 5), Int(37));
    CHECK(phi(t) == phi(-t));
    CHECK(phi(t) == phi(t + 1));
    CHECK(phi(t) >= 0);
    CHECK(phi(t) <= rat(1, 2));
  }
}

TEST_CASE("exact evaluation at b-adic points") {
  auto T = classical();
  CHECK(eval_exact(T, Int(1), 1) == rat(1, 2));
  CHECK(eval_exact(T, Int(1), 2) == rat(1, 2));
  CHECK(eval_exact(T, Int(1), 3) == rat(3, 8));
  CHECK(eval_exact(T, Int(0), 4) == rat(0));
  CHECK(eval_exact(T, Int(16), 4) == rat(0));

  auto sig = alternating_signal();
  CHECK(eval_exact(sig, Int(1), 2) == rat(0));
}

TEST_CASE("direct sums agree with eval_exact") {
  std::vector<CoefficientSequence> seqs = {classical(), alternating_signal(), steep_geometric(),
                                           base3(), finite_head()};
  for (const auto& seq : seqs) {
    const unsigned long ub = static_cast<unsigned long>(seq.base());
    for (unsigned level = 0; level <= 7; ++level) {
      Int bl = pow_int(ub, level);
      for (Int j(0); j <= bl; j += (bl > 16 ? Int(bl / 16) : Int(1))) {
        Rational x = make_rational(j, bl);
        CHECK(eval_exact(seq, j, level) == partial_sum_at(seq, level, x));
      }
    }
  }
}

TEST_CASE("window sums") {
  auto T = classical();
  CHECK(window_sum_at(T, 1, 1, rat(1, 4)) == rat(1, 4));
  auto sig = alternating_signal();
  CHECK(window_sum_at(sig, 1, 1, rat(1, 4)) == rat(-1, 4));
  // H_{n+m} = H_n + H_{n,m} pointwise
  for (int i = 0; i <= 8; ++i) {
    Rational x = rat(i, 8);
    CHECK(partial_sum_at(T, 5, x) == partial_sum_at(T, 2, x) + window_sum_at(T, 2, 3, x));
  }
}

TEST_CASE("b-adic level detection") {
  CHECK(b_adic_level(rat(5, 8), 2) == 3u);
  CHECK(b_adic_level(rat(0), 2) == 0u);
  CHECK(b_adic_level(rat(1), 2) == 0u);
  CHECK_FALSE(b_adic_level(rat(1, 3), 2).has_value());
  CHECK(b_adic_level(rat(1, 2), 10) == 1u);   // 5/10
  CHECK(b_adic_level(rat(3, 100), 10) == 2u);
  CHECK_FALSE(b_adic_level(rat(1, 7), 10).has_value());
}

TEST_CASE("certified evaluation") {
  auto T = classical();

  // f(1/3) = 2/3: every term contributes (1/2)^k * 1/3
  auto cv = eval_certified(T, rat(1, 3), rat(1, 1000000));
  CHECK(cv.radius <= rat(1, 1000000));
  CHECK(cv.contains(rat(2, 3)));
  Rational gap = cv.center - rat(2, 3);
  if (gap < 0) gap = -gap;
  CHECK(gap <= rat(1, 1000000));

  auto mid = eval_certified(T, rat(1, 2), rat(1, 4));
  CHECK(mid.contains(rat(1, 2)));

  auto zero = eval_certified(T, rat(0), rat(1, 10));
  CHECK(zero.center == rat(0));
  CHECK(zero.contains(rat(0)));

  CHECK_THROWS_AS(eval_certified(T, rat(2), rat(1, 10)), DomainError);
  CHECK_THROWS_AS(eval_certified(T, rat(1, 2), rat(0)), DomainError);

  // certified brackets the exact value at b-adic points
  for (int j = 0; j <= 32; ++j) {
    Rational x = rat(j, 32);
    CHECK(eval_certified(T, x, rat(1, 1 << 20)).contains(eval_exact(T, Int(j), 5)));
  }
}

TEST_CASE("grid evaluator matches direct sums") {
  std::vector<CoefficientSequence> seqs = {classical(), alternating_signal(), steep_geometric(),
                                           van_der_waerden(), base3(), finite_head()};
  for (const auto& seq : seqs) {
    unsigned level = seq.base() == 2 ? 8 : 4;
    GridEvaluator eval(seq, level);
    Int bl = pow_int(static_cast<unsigned long>(seq.base()), level);
    for (unsigned long j = 0; j <= bl.get_ui(); ++j) {
      Rational expected = eval_exact(seq, Int(j), level);
      CHECK(make_rational(eval.value_at(j), eval.denominator()) == expected);
    }
  }
}

TEST_CASE("grid evaluator streaming equals direct evaluation") {
  std::vector<CoefficientSequence> seqs = {classical(), alternating_signal(), steep_geometric(),
                                           van_der_waerden(), finite_head(), seeded_signal(3)};
  for (const auto& seq : seqs) {
    unsigned level = seq.base() == 2 ? 9 : 4;
    GridEvaluator eval(seq, level);
    Int bl = pow_int(static_cast<unsigned long>(seq.base()), level);
    // full sweep and an offset sweep, both checked pointwise
    for (unsigned long begin : {0ul, bl.get_ui() / 3 + 1}) {
      unsigned long end = std::min(bl.get_ui() + 1, begin + 700);
      std::size_t seen = 0;
      eval.stream(begin, end, [&](unsigned long j, const Int& value) {
        CHECK(value == eval.value_at(j));
        ++seen;
      });
      CHECK(seen == end - begin);
    }
  }
}

TEST_CASE("grid evaluator folds extra denominators") {
  auto T = classical();
  GridEvaluator eval(T, 5, {Int(12), Int(7)});
  CHECK(eval.denominator() % 12 == 0);
  CHECK(eval.denominator() % 7 == 0);
  CHECK(make_rational(eval.value_at(11), eval.denominator()) == eval_exact(T, Int(11), 5));
}
