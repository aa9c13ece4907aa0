#include "takagi/grid_eval.hpp"

#include "takagi/errors.hpp"

namespace takagi {

GridEvaluator::GridEvaluator(const CoefficientSequence& seq, unsigned level,
                             const std::vector<Int>& extra_denominators)
    : base_(seq.base()), level_(level) {
  const unsigned long ub = static_cast<unsigned long>(base_);
  denom_ = pow_int(ub, level);
  std::vector<Rational> coeffs(level);
  for (unsigned k = 0; k < level; ++k) {
    coeffs[k] = seq.coeff(k);
    Int term_den = coeffs[k].get_den() * pow_int(ub, level - k);
    Int l;
    mpz_lcm(l.get_mpz_t(), denom_.get_mpz_t(), term_den.get_mpz_t());
    denom_ = l;
  }
  for (const Int& d : extra_denominators) {
    if (d == 0) continue;
    Int l;
    mpz_lcm(l.get_mpz_t(), denom_.get_mpz_t(), d.get_mpz_t());
    denom_ = l;
  }
  weights_.resize(level);
  for (unsigned k = 0; k < level; ++k) {
    Int term_den = coeffs[k].get_den() * pow_int(ub, level - k);
    weights_[k] = coeffs[k].get_num() * (denom_ / term_den);
  }
}

Int GridEvaluator::value_at(unsigned long j) const {
  const unsigned long ub = static_cast<unsigned long>(base_);
  Int sum(0);
  Int jz(static_cast<unsigned long>(j));
  for (unsigned k = 0; k < level_; ++k) {
    Int p = pow_int(ub, level_ - k);
    Int r;
    mpz_mod(r.get_mpz_t(), jz.get_mpz_t(), p.get_mpz_t());
    Int tri = (2 * r <= p) ? r : Int(p - r);
    if (tri != 0) sum += weights_[k] * tri;
  }
  return sum;
}

}  // namespace takagi
