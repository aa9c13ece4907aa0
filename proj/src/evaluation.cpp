#include "takagi/evaluation.hpp"

#include "takagi/errors.hpp"

namespace takagi {

Rational phi(const Rational& t) {
  // reduce to [0,1): t - floor(t)
  Rational frac = t - Rational(floor_to_int(t));
  Rational half(1, 2);
  if (frac <= half) return frac;
  return Rational(1) - frac;
}

Rational partial_sum_at(const CoefficientSequence& seq, unsigned n, const Rational& x) {
  Rational sum(0);
  Rational scaled = x;
  for (unsigned k = 0; k < n; ++k) {
    sum += seq.coeff(k) * phi(scaled);
    scaled *= seq.base();
  }
  return sum;
}

Rational window_sum_at(const CoefficientSequence& seq, unsigned n, unsigned m, const Rational& x) {
  Rational sum(0);
  Rational scaled = x * pow_int(static_cast<unsigned long>(seq.base()), n);
  for (unsigned k = n; k < n + m; ++k) {
    sum += seq.coeff(k) * phi(scaled);
    scaled *= seq.base();
  }
  return sum;
}

Rational eval_exact(const CoefficientSequence& seq, const Int& j, unsigned level) {
  Int bn = pow_int(static_cast<unsigned long>(seq.base()), level);
  if (j < 0 || j > bn) throw DomainError("grid index out of range");
  // phi(b^k j / b^level) = min(r, P-r)/P with P = b^(level-k), r = j mod P;
  // zero for k >= level.
  Rational sum(0);
  for (unsigned k = 0; k < level; ++k) {
    Int period = pow_int(static_cast<unsigned long>(seq.base()), level - k);
    Int r;
    mpz_mod(r.get_mpz_t(), j.get_mpz_t(), period.get_mpz_t());
    Int tri = r * 2 <= period ? r : Int(period - r);
    if (tri != 0) sum += seq.coeff(k) * make_rational(tri, period);
  }
  return sum;
}

std::optional<unsigned> b_adic_level(const Rational& x, int base, unsigned max_level) {
  Int den = x.get_den();
  Int b(base);
  unsigned level = 0;
  while (den != 1) {
    if (level >= max_level) return std::nullopt;
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), b.get_mpz_t());
    if (g == 1) return std::nullopt;
    den /= g;
    ++level;
  }
  return level;
}

CertifiedValue eval_certified(const CoefficientSequence& seq, const Rational& x,
                              const Rational& eps) {
  if (x < 0 || x > 1) throw DomainError("evaluation point outside [0,1]");
  if (!(eps > 0)) throw DomainError("eps must be positive");
  unsigned n = 0;
  Rational w = seq.tail_bound(0);
  while (w > eps) {
    ++n;
    w = seq.tail_bound(n);
  }
  return CertifiedValue{partial_sum_at(seq, n, x), w, n};
}

}  // namespace takagi
