#include "takagi/piecewise_linear.hpp"

#include <algorithm>

#include "takagi/errors.hpp"

namespace takagi {

PiecewiseLinearFunction::PiecewiseLinearFunction(int base, unsigned level, Int denom,
                                                 std::vector<Int> numerators)
    : base_(base), level_(level), denom_(std::move(denom)), nums_(std::move(numerators)) {
  if (base_ < 2) throw DomainError("base must be >= 2");
  if (denom_ <= 0) throw DomainError("denominator must be positive");
  Int expected = 2 * pow_int(static_cast<unsigned long>(base_), level_) + 1;
  if (Int(static_cast<unsigned long>(nums_.size())) != expected)
    throw DomainError("grid size does not match level");
}

PiecewiseLinearFunction PiecewiseLinearFunction::zero(int base, unsigned level) {
  Int n = 2 * pow_int(static_cast<unsigned long>(base), level) + 1;
  return PiecewiseLinearFunction(base, level, Int(1),
                                 std::vector<Int>(n.get_ui(), Int(0)));
}

Rational PiecewiseLinearFunction::grid_x(std::size_t t) const {
  return make_rational(Int(static_cast<unsigned long>(t)),
                       Int(static_cast<unsigned long>(nums_.size() - 1)));
}

Rational PiecewiseLinearFunction::value_at_grid(std::size_t t) const {
  return make_rational(nums_[t], denom_);
}

Rational PiecewiseLinearFunction::eval(const Rational& x) const {
  if (x < 0 || x > 1) throw DomainError("evaluation point outside [0,1]");
  Rational pos = x * Int(static_cast<unsigned long>(nums_.size() - 1));
  Int t0 = floor_to_int(pos);
  std::size_t t = t0.get_ui();
  if (t + 1 >= nums_.size()) return value_at_grid(nums_.size() - 1);
  Rational theta = pos - Rational(t0);
  if (theta == 0) return value_at_grid(t);
  return value_at_grid(t) + theta * (value_at_grid(t + 1) - value_at_grid(t));
}

void PiecewiseLinearFunction::check_interval(const Rational& u, const Rational& v) const {
  if (u < 0 || v > 1) throw DomainError("interval not contained in [0,1]");
}

Rational PiecewiseLinearFunction::oscillation(const Rational& u, const Rational& v) const {
  check_interval(u, v);
  if (u >= v) return Rational(0);
  Rational lo = eval(u), hi = lo;
  auto consider = [&](const Rational& y) {
    if (y < lo) lo = y;
    if (y > hi) hi = y;
  };
  consider(eval(v));
  Int last(static_cast<unsigned long>(nums_.size() - 1));
  Int t_first = floor_to_int(u * last) + 1;
  Int t_last = ceil_to_int(v * last) - 1;
  for (Int t = t_first; t <= t_last; ++t) consider(value_at_grid(t.get_ui()));
  return hi - lo;
}

Rational PiecewiseLinearFunction::variation(const Rational& u, const Rational& v) const {
  check_interval(u, v);
  if (u >= v) return Rational(0);
  Rational total(0);
  Rational prev = eval(u);
  Int last(static_cast<unsigned long>(nums_.size() - 1));
  Int t_first = floor_to_int(u * last) + 1;
  Int t_last = ceil_to_int(v * last) - 1;
  for (Int t = t_first; t <= t_last; ++t) {
    Rational cur = value_at_grid(t.get_ui());
    Rational d = cur - prev;
    total += (d < 0 ? Rational(-d) : d);
    prev = cur;
  }
  Rational end = eval(v);
  Rational d = end - prev;
  total += (d < 0 ? Rational(-d) : d);
  return total;
}

Rational PiecewiseLinearFunction::min_value() const {
  return value_at_grid(static_cast<std::size_t>(
      std::min_element(nums_.begin(), nums_.end()) - nums_.begin()));
}

Rational PiecewiseLinearFunction::max_value() const {
  return value_at_grid(static_cast<std::size_t>(
      std::max_element(nums_.begin(), nums_.end()) - nums_.begin()));
}

namespace {

PiecewiseLinearFunction build_sum(const CoefficientSequence& seq, unsigned k_begin,
                                  unsigned k_end, unsigned level, const BuildLimits& limits) {
  const unsigned long ub = static_cast<unsigned long>(seq.base());
  Int grid_points = 2 * pow_int(ub, level) + 1;
  if (grid_points > Int(static_cast<unsigned long>(limits.max_grid_points)))
    throw ResourceError("partial-sum grid of " + grid_points.get_str() +
                        " points exceeds the configured cap of " +
                        std::to_string(limits.max_grid_points));
  std::size_t n_points = grid_points.get_ui();

  // Common denominator: every term c_k phi(b^k t/(2 b^level)) is a multiple
  // of 1 / (den(c_k) * 2 b^(level-k)).
  Int denom = 2 * pow_int(ub, level);
  std::vector<Rational> coeffs;
  for (unsigned k = k_begin; k < k_end; ++k) {
    coeffs.push_back(seq.coeff(k));
    Int term_den = coeffs.back().get_den() * 2 * pow_int(ub, level - k);
    Int l;
    mpz_lcm(l.get_mpz_t(), denom.get_mpz_t(), term_den.get_mpz_t());
    denom = l;
  }

  std::vector<Int> nums(n_points, Int(0));
  for (unsigned k = k_begin; k < k_end; ++k) {
    const Rational& c = coeffs[k - k_begin];
    if (c == 0) continue;
    unsigned long period = 2 * pow_int(ub, level - k).get_ui();
    Int weight = c.get_num() * (denom / (c.get_den() * Int(period)));
    for (std::size_t t = 0; t < n_points; ++t) {
      unsigned long r = t % period;
      unsigned long tri = std::min(r, period - r);
      if (tri != 0) nums[t] += weight * static_cast<unsigned long>(tri);
    }
  }
  return PiecewiseLinearFunction(seq.base(), level, std::move(denom), std::move(nums));
}

}  // namespace

PiecewiseLinearFunction build_partial_sum(const CoefficientSequence& seq, unsigned n,
                                          const BuildLimits& limits) {
  return build_sum(seq, 0, n, n, limits);
}

PiecewiseLinearFunction build_window_sum(const CoefficientSequence& seq, unsigned n, unsigned m,
                                         const BuildLimits& limits) {
  if (m == 0) throw DomainError("window sum needs m >= 1");
  return build_sum(seq, n, n + m, n + m, limits);
}

}  // namespace takagi
