#pragma once

#include <optional>

#include "takagi/coefficients.hpp"
#include "takagi/rational.hpp"

namespace takagi {

// Distance from t to the nearest integer. Even, 1-periodic, range [0, 1/2].
Rational phi(const Rational& t);

// H_n(x) = sum_{k<n} c_k phi(b^k x), by direct summation. Exact for any
// rational x in [0,1].
Rational partial_sum_at(const CoefficientSequence& seq, unsigned n, const Rational& x);

// H_{n,m}(x) = sum_{k=n}^{n+m-1} c_k phi(b^k x).
Rational window_sum_at(const CoefficientSequence& seq, unsigned n, unsigned m, const Rational& x);

// f(j / b^level), exact. Terms of index >= level vanish at b-adic points,
// so the full series reduces to the finite sum H_level.
Rational eval_exact(const CoefficientSequence& seq, const Int& j, unsigned level);

// If x = p / b^k for some k <= max_level, returns k (minimal).
std::optional<unsigned> b_adic_level(const Rational& x, int base, unsigned max_level = 4096);

struct CertifiedValue {
  Rational center;
  Rational radius;  // >= 0; the true value lies in [center - radius, center + radius]
  unsigned terms;   // number of series terms evaluated

  Rational lo() const { return center - radius; }
  Rational hi() const { return center + radius; }
  bool contains(const Rational& v) const { return lo() <= v && v <= hi(); }
};

// Evaluates f(x) with an enclosure of half-width <= eps. The truncation
// level is the least N with tail_bound(N) <= eps (closed form, no
// iterative refinement), so the cost is predictable in eps.
CertifiedValue eval_certified(const CoefficientSequence& seq, const Rational& x,
                              const Rational& eps);

}  // namespace takagi
