#pragma once

#include <vector>

#include "takagi/coefficients.hpp"
#include "takagi/rational.hpp"

namespace takagi {

// Exact evaluation of f at consecutive grid points x = j / b^level, scaled
// to integers: value(j) = f(j / b^level) * denominator(). The denominator is
// a multiple of b^level and of every entry in extra_denominators, so callers
// can fold window bounds and mesh rows into the same integer scale.
//
// For even bases, stream() walks the grid with amortized O(1) big-integer
// work per point: each series term is a triangle wave in j whose slope only
// flips at trough/peak steps, so the running first difference is maintained
// from the trailing-digit structure of j.
class GridEvaluator {
 public:
  GridEvaluator(const CoefficientSequence& seq, unsigned level,
                const std::vector<Int>& extra_denominators = {});

  const Int& denominator() const { return denom_; }
  unsigned level() const { return level_; }
  int base() const { return base_; }

  // Direct O(level) evaluation.
  Int value_at(unsigned long j) const;

  bool streaming_supported() const { return base_ % 2 == 0; }

  // emit(j, scaled_value) for j = begin .. end-1 in order.
  template <typename Emit>
  void stream(unsigned long begin, unsigned long end, Emit&& emit) const {
    if (begin >= end) return;
    if (!streaming_supported()) {
      for (unsigned long j = begin; j < end; ++j) emit(j, value_at(j));
      return;
    }
    const unsigned M = level_;
    const unsigned long ub = static_cast<unsigned long>(base_);
    Int value = value_at(begin);
    // slope state: s_k = +1 while j mod b^(M-k) < b^(M-k)/2, else -1
    std::vector<int> slope(M, +1);
    Int delta(0);
    {
      Int r(begin);
      // r mod P_k, largest period first
      for (unsigned k = 0; k < M; ++k) {
        Int p = pow_int(ub, M - k);
        Int rk;
        mpz_mod(rk.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        slope[k] = (2 * rk < p) ? +1 : -1;
        if (slope[k] > 0)
          delta += weights_[k];
        else
          delta -= weights_[k];
      }
    }
    emit(begin, value);
    const unsigned long half = ub / 2;
    for (unsigned long j = begin + 1; j < end; ++j) {
      value += delta;
      // trailing zero digits of j in base b, and the lowest nonzero digit
      unsigned long rest = j;
      unsigned v = 0;
      while (rest % ub == 0) {
        rest /= ub;
        ++v;
      }
      unsigned long digit = rest % ub;
      // troughs: every term k >= M - v restarts ascending
      for (unsigned k = (v >= M ? 0 : M - v); k < M; ++k) {
        if (slope[k] < 0) {
          slope[k] = +1;
          delta += 2 * weights_[k];
        }
      }
      // peak: the term whose period has j exactly at its half point
      if (digit == half && v < M) {
        unsigned k = M - v - 1;
        if (slope[k] > 0) {
          slope[k] = -1;
          delta -= 2 * weights_[k];
        }
      }
      emit(j, value);
    }
  }

 private:
  int base_;
  unsigned level_;
  Int denom_;
  std::vector<Int> weights_;  // weights_[k] = c_k * denom / b^(level-k)
};

}  // namespace takagi
