#pragma once

#include "takagi/coefficients.hpp"
#include "takagi/rational.hpp"

namespace takagi::test {

inline CoefficientSequence classical() {
  return CoefficientSequence::geometric(2, Rational(1, 2));
}

inline CoefficientSequence alternating_signal() {
  return CoefficientSequence::signed_power(2, SignRule::alternating());
}

inline CoefficientSequence seeded_signal(std::uint64_t seed) {
  return CoefficientSequence::signed_power(2, SignRule::seeded(seed));
}

inline CoefficientSequence steep_geometric() {  // a*b > 1: no finite eta
  return CoefficientSequence::geometric(2, Rational(7, 10));
}

inline CoefficientSequence van_der_waerden() {
  return CoefficientSequence::geometric(10, Rational(1, 10));
}

inline CoefficientSequence base3() {
  return CoefficientSequence::geometric(3, Rational(1, 3));
}

inline CoefficientSequence finite_head() {
  return CoefficientSequence::explicit_list(2, {Rational(1), Rational(0), Rational(1, 4)},
                                            Rational(0));
}

inline Rational rat(long num, long den = 1) { return make_rational(Int(num), Int(den)); }

}  // namespace takagi::test
