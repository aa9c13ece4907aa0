#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "takagi/coefficients.hpp"
#include "takagi/errors.hpp"
#include "test_support.hpp"

using namespace takagi;
using namespace takagi::test;

TEST_CASE("coefficients of the three kinds") {
  auto T = classical();
  CHECK(T.coeff(3) == rat(1, 8));
  CHECK(T.coeff(0) == rat(1));

  auto sig = alternating_signal();
  CHECK(sig.coeff(0) == rat(1));
  CHECK(sig.coeff(1) == rat(-1, 2));
  CHECK(sig.coeff(2) == rat(1, 4));

  auto fin = finite_head();
  CHECK(fin.coeff(2) == rat(1, 4));
  CHECK(fin.coeff(5) == rat(0));
}

TEST_CASE("geometric coefficients match repeated multiplication") {
  auto seq = CoefficientSequence::geometric(2, Rational(3, 7));
  Rational acc(1);
  for (std::size_t k = 0; k <= 64; ++k) {
    CHECK(seq.coeff(k) == acc);
    acc *= Rational(3, 7);
  }
}

TEST_CASE("sign rules") {
  SignRule alt = SignRule::alternating();
  CHECK(alt.sign(0) == 1);
  CHECK(alt.sign(1) == -1);
  CHECK(alt.sign(7) == -1);

  SignRule pat = SignRule::literal({+1, -1, -1});
  CHECK(pat.sign(0) == 1);
  CHECK(pat.sign(1) == -1);
  CHECK(pat.sign(3) == 1);  // cycles

  SignRule s1 = SignRule::seeded(42);
  SignRule s2 = SignRule::seeded(42);
  for (std::size_t k = 0; k < 256; ++k) {
    CHECK(s1.sign(k) == s2.sign(k));
    CHECK((s1.sign(k) == 1 || s1.sign(k) == -1));
  }

  CHECK_THROWS_AS(SignRule::literal({}), DomainError);
  CHECK_THROWS_AS(SignRule::literal({0}), DomainError);
}

TEST_CASE("eta certificates") {
  CHECK(classical().eta().is_finite());
  CHECK(classical().eta().value() == rat(1));

  CHECK(alternating_signal().eta().value() == rat(1));

  CHECK_FALSE(steep_geometric().eta().is_finite());
  CHECK_THROWS_AS(steep_geometric().eta().value(), EtaInfiniteError);

  // explicit: sup_k b^k |c_k| over the head, here 4 * 1/4 ... head [1,0,1/4]
  auto fin = finite_head();
  CHECK(fin.eta().value() == rat(1));
  CHECK(fin.eta().attained_sup() == rat(1));

  auto big = CoefficientSequence::explicit_list(2, {rat(1), rat(3, 4)}, Rational(0));
  CHECK(big.eta().value() == rat(3, 2));  // 2 * 3/4

  // explicit with geometric tail at ratio 1/2 on base 2: tail keeps b^k|c_k| constant
  auto tailed = CoefficientSequence::explicit_list(2, {rat(1), rat(1, 2)}, Rational(1, 2));
  CHECK(tailed.eta().is_finite());
  CHECK(tailed.eta().value() == rat(1));

  auto blowup = CoefficientSequence::explicit_list(2, {rat(1), rat(1, 2)}, Rational(3, 4));
  CHECK_FALSE(blowup.eta().is_finite());
}

TEST_CASE("eta is monotone under termwise domination (explicit pairs)") {
  auto small = CoefficientSequence::explicit_list(2, {rat(1, 2), rat(1, 8), rat(1, 16)},
                                                  Rational(0));
  auto large = CoefficientSequence::explicit_list(2, {rat(1), rat(1, 4), rat(1, 8)}, Rational(0));
  for (std::size_t k = 0; k < 8; ++k) {
    Rational a = small.coeff(k), b = large.coeff(k);
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    CHECK(a <= b);
  }
  CHECK(small.eta().attained_sup() <= large.eta().attained_sup());
}

TEST_CASE("tail bounds") {
  auto T = classical();
  CHECK(T.tail_bound(1) == rat(1, 2));
  CHECK(T.tail_bound(4) == rat(1, 16));  // equals eta * b^-4 with equality

  auto single = CoefficientSequence::explicit_list(2, {rat(1)}, Rational(0));
  CHECK(single.tail_bound(1) == rat(0));

  // steep geometric: no eta cap, pure series tail
  CHECK(steep_geometric().tail_bound(4) == rat(2401, 6000));

  // explicit head + geometric tail: sum_{k>=2} (1/3)(1/5)^(k-1) = 1/12
  auto tailed = CoefficientSequence::explicit_list(2, {rat(1), rat(1, 3)}, Rational(1, 5));
  CHECK(tailed.tail_bound(2) == rat(1, 24));
}

TEST_CASE("tail bound properties") {
  std::vector<CoefficientSequence> seqs = {classical(), alternating_signal(), steep_geometric(),
                                           finite_head(), van_der_waerden(), base3()};
  for (const auto& seq : seqs) {
    for (unsigned n = 0; n < 24; ++n) {
      CHECK(seq.tail_bound(n + 1) <= seq.tail_bound(n));
      if (seq.eta().is_finite()) {
        Rational cap = seq.eta().value() *
                       make_rational(1, pow_int(static_cast<unsigned long>(seq.base()), n));
        CHECK(seq.tail_bound(n) <= cap);
      }
    }
  }
}

TEST_CASE("uncapped tail bounds satisfy the series recurrence") {
  std::vector<CoefficientSequence> seqs = {
      classical(), steep_geometric(),
      CoefficientSequence::explicit_list(2, {rat(1), rat(1, 3)}, Rational(1, 5))};
  for (const auto& seq : seqs) {
    for (unsigned n = 0; n < 20; ++n) {
      bool capped_n = false, capped_n1 = false;
      if (seq.eta().is_finite()) {
        Rational cap_n = seq.eta().value() *
                         make_rational(1, pow_int(static_cast<unsigned long>(seq.base()), n));
        Rational cap_n1 = seq.eta().value() *
                          make_rational(1, pow_int(static_cast<unsigned long>(seq.base()), n + 1));
        capped_n = seq.tail_bound(n) == cap_n;
        capped_n1 = seq.tail_bound(n + 1) == cap_n1;
      }
      if (!capped_n && !capped_n1) {
        Rational c = seq.coeff(n);
        if (c < 0) c = -c;
        CHECK(2 * (seq.tail_bound(n) - seq.tail_bound(n + 1)) == c);
      }
    }
  }
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(CoefficientSequence::geometric(1, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(CoefficientSequence::geometric(2, Rational(1)), DomainError);
  CHECK_THROWS_AS(CoefficientSequence::geometric(2, Rational(0)), DomainError);
  CHECK_THROWS_AS(CoefficientSequence::explicit_list(2, {rat(1)}, Rational(1)), DomainError);
}
