#include "takagi/coefficients.hpp"

#include <sstream>

#include "takagi/errors.hpp"

namespace takagi {

SignRule SignRule::alternating() {
  SignRule r;
  r.mode_ = Mode::literal;
  r.pattern_ = {+1, -1};
  return r;
}

SignRule SignRule::literal(std::vector<int> pattern) {
  if (pattern.empty()) throw DomainError("sign pattern must be nonempty");
  for (int s : pattern) {
    if (s != 1 && s != -1) throw DomainError("sign pattern entries must be +1 or -1");
  }
  SignRule r;
  r.mode_ = Mode::literal;
  r.pattern_ = std::move(pattern);
  return r;
}

SignRule SignRule::seeded(std::uint64_t seed) {
  SignRule r;
  r.mode_ = Mode::seeded;
  r.seed_ = seed;
  return r;
}

int SignRule::sign(std::size_t k) const {
  if (mode_ == Mode::literal) return pattern_[k % pattern_.size()];
  return (splitmix64(seed_ + static_cast<std::uint64_t>(k)) >> 63) ? -1 : +1;
}

std::string SignRule::describe() const {
  if (mode_ == Mode::seeded) return "seeded:" + std::to_string(seed_);
  if (pattern_.size() == 2 && pattern_[0] == 1 && pattern_[1] == -1) return "alternating";
  std::string s;
  for (int v : pattern_) s += (v > 0 ? '+' : '-');
  return s;
}

EtaCertificate EtaCertificate::finite(Rational value, Rational attained_sup) {
  EtaCertificate c;
  c.finite_ = true;
  c.value_ = std::move(value);
  c.sup_ = std::move(attained_sup);
  return c;
}

EtaCertificate EtaCertificate::infinite() { return EtaCertificate{}; }

const Rational& EtaCertificate::value() const {
  if (!finite_) throw EtaInfiniteError("eta certificate is infinite");
  return value_;
}

const Rational& EtaCertificate::attained_sup() const {
  if (!finite_) throw EtaInfiniteError("eta certificate is infinite");
  return sup_;
}

namespace {

Rational abs_rational(const Rational& x) { return x < 0 ? Rational(-x) : x; }

EtaCertificate compute_eta(int base, const std::variant<Geometric, SignedPower, Explicit>& kind) {
  const Rational one(1);
  if (std::holds_alternative<Geometric>(kind)) {
    const auto& g = std::get<Geometric>(kind);
    Rational ab = g.ratio * base;
    if (ab > 1) return EtaCertificate::infinite();
    // base^k c_k = (ratio*base)^k, maximal at k = 0.
    return EtaCertificate::finite(one, one);
  }
  if (std::holds_alternative<SignedPower>(kind)) {
    return EtaCertificate::finite(one, one);
  }
  const auto& e = std::get<Explicit>(kind);
  Rational sup(0);
  Rational bk(1);
  for (const auto& h : e.head) {
    Rational v = abs_rational(h) * bk;
    if (v > sup) sup = v;
    bk *= base;
  }
  if (!e.head.empty() && e.tail_ratio != 0 && e.head.back() != 0) {
    // tail terms: |head.back()| * ratio^(j) * base^(H-1+j), j >= 1
    Rational rb = e.tail_ratio * base;
    Rational last = abs_rational(e.head.back()) * (bk / base);  // |c_{H-1}| b^{H-1}
    if (rb > 1) return EtaCertificate::infinite();
    Rational tail_sup = last * rb;  // decreasing (rb < 1) or constant (rb == 1): max at j = 1
    if (tail_sup > sup) sup = tail_sup;
  }
  Rational value = sup > 1 ? sup : one;
  return EtaCertificate::finite(value, sup);
}

}  // namespace

CoefficientSequence::CoefficientSequence(int base,
                                         std::variant<Geometric, SignedPower, Explicit> kind)
    : base_(base), kind_(std::move(kind)), eta_(compute_eta(base, kind_)) {}

CoefficientSequence CoefficientSequence::geometric(int base, Rational ratio) {
  if (base < 2) throw DomainError("base must be >= 2");
  if (!(ratio > 0 && ratio < 1)) throw DomainError("geometric ratio must satisfy 0 < a < 1");
  return CoefficientSequence(base, Geometric{std::move(ratio)});
}

CoefficientSequence CoefficientSequence::signed_power(int base, SignRule signs) {
  if (base < 2) throw DomainError("base must be >= 2");
  return CoefficientSequence(base, SignedPower{std::move(signs)});
}

CoefficientSequence CoefficientSequence::explicit_list(int base, std::vector<Rational> head,
                                                       Rational tail_ratio) {
  if (base < 2) throw DomainError("base must be >= 2");
  if (!(tail_ratio >= 0 && tail_ratio < 1))
    throw DomainError("tail_ratio must satisfy 0 <= r < 1");
  return CoefficientSequence(base, Explicit{std::move(head), std::move(tail_ratio)});
}

Rational CoefficientSequence::coeff(std::size_t k) const {
  if (std::holds_alternative<Geometric>(kind_)) {
    return pow_rational(std::get<Geometric>(kind_).ratio, k);
  }
  if (std::holds_alternative<SignedPower>(kind_)) {
    const auto& sp = std::get<SignedPower>(kind_);
    Rational mag = make_rational(1, pow_int(static_cast<unsigned long>(base_), k));
    return sp.signs.sign(k) < 0 ? Rational(-mag) : mag;
  }
  const auto& e = std::get<Explicit>(kind_);
  if (k < e.head.size()) return e.head[k];
  if (e.head.empty() || e.tail_ratio == 0) return Rational(0);
  return e.head.back() * pow_rational(e.tail_ratio, k - e.head.size() + 1);
}

Rational CoefficientSequence::raw_tail_sum(std::size_t n) const {
  if (std::holds_alternative<Geometric>(kind_)) {
    const auto& g = std::get<Geometric>(kind_);
    // sum_{k>=n} a^k = a^n / (1-a)
    return pow_rational(g.ratio, n) / (Rational(1) - g.ratio);
  }
  if (std::holds_alternative<SignedPower>(kind_)) {
    Rational bn = make_rational(1, pow_int(static_cast<unsigned long>(base_), n));
    return bn * base_ / (Rational(base_) - 1);
  }
  const auto& e = std::get<Explicit>(kind_);
  Rational sum(0);
  for (std::size_t k = n; k < e.head.size(); ++k) sum += abs_rational(e.head[k]);
  if (!e.head.empty() && e.tail_ratio != 0 && e.head.back() != 0) {
    std::size_t first = n > e.head.size() ? n : e.head.size();
    // sum_{k>=first} |last| r^(k-H+1) = |last| r^(first-H+1) / (1-r)
    Rational r = e.tail_ratio;
    Rational lead = abs_rational(e.head.back()) * pow_rational(r, first - e.head.size() + 1);
    sum += lead / (Rational(1) - r);
  }
  return sum;
}

Rational CoefficientSequence::tail_bound(std::size_t n) const {
  Rational w = raw_tail_sum(n) / 2;
  if (eta_.is_finite()) {
    Rational cap = eta_.value() * make_rational(1, pow_int(static_cast<unsigned long>(base_), n));
    if (cap < w) return cap;
  }
  return w;
}

Rational CoefficientSequence::abs_sum() const { return raw_tail_sum(0); }

std::string CoefficientSequence::describe() const {
  std::ostringstream os;
  os << "base=" << base_;
  if (std::holds_alternative<Geometric>(kind_)) {
    os << " kind=geometric a=" << std::get<Geometric>(kind_).ratio.get_str();
  } else if (std::holds_alternative<SignedPower>(kind_)) {
    os << " kind=signed_power signs=" << std::get<SignedPower>(kind_).signs.describe();
  } else {
    const auto& e = std::get<Explicit>(kind_);
    os << " kind=explicit head=[";
    for (std::size_t i = 0; i < e.head.size(); ++i) {
      if (i) os << ",";
      os << e.head[i].get_str();
    }
    os << "] tail_ratio=" << e.tail_ratio.get_str();
  }
  return os.str();
}

}  // namespace takagi
