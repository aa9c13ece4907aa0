#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "takagi/rational.hpp"

namespace takagi {

// Sign rule for signed-power sequences: sign(k) in {+1, -1} for every k.
// Literal rules repeat their pattern periodically; "alternating" is the
// 2-cycle +,-. Seeded rules take bit 63 of splitmix64(seed + k), so a rule
// is a pure function of (seed, k).
class SignRule {
 public:
  static SignRule alternating();
  static SignRule literal(std::vector<int> pattern);
  static SignRule seeded(std::uint64_t seed);

  int sign(std::size_t k) const;
  std::string describe() const;

 private:
  SignRule() = default;
  enum class Mode { literal, seeded };
  Mode mode_ = Mode::literal;
  std::vector<int> pattern_;
  std::uint64_t seed_ = 0;
};

struct Geometric {
  Rational ratio;  // c_k = ratio^k, 0 < ratio < 1
};

struct SignedPower {
  SignRule signs;  // c_k = sign(k) * base^-k
};

struct Explicit {
  std::vector<Rational> head;  // c_k = head[k] for k < head.size()
  Rational tail_ratio;         // beyond the head: c_k = head.back() * tail_ratio^(k-head.size()+1)
};

// Certificate for eta = max(1, sup_k base^k |c_k|). The sup-based value is
// an upper bound for the limit-superior form of the same constant, and it
// makes every strip containment hold for all n, not just eventually.
class EtaCertificate {
 public:
  static EtaCertificate finite(Rational value, Rational attained_sup);
  static EtaCertificate infinite();

  bool is_finite() const { return finite_; }
  const Rational& value() const;         // throws EtaInfiniteError when infinite
  const Rational& attained_sup() const;  // sup_k base^k |c_k| (finite case)

 private:
  bool finite_ = false;
  Rational value_;
  Rational sup_;
};

// The series c = {c_k} together with its dilation base. All three kinds are
// absolutely summable by construction and expose exact closed forms for the
// coefficients, eta, and tail bounds.
class CoefficientSequence {
 public:
  static CoefficientSequence geometric(int base, Rational ratio);
  static CoefficientSequence signed_power(int base, SignRule signs);
  static CoefficientSequence explicit_list(int base, std::vector<Rational> head,
                                           Rational tail_ratio);

  int base() const { return base_; }
  const std::variant<Geometric, SignedPower, Explicit>& kind() const { return kind_; }

  // c_k, exact.
  Rational coeff(std::size_t k) const;

  const EtaCertificate& eta() const { return eta_; }

  // Exact W_n with sum_{k>=n} |c_k| / 2 <= W_n; tight for every kind, and
  // additionally capped at eta * base^-n when eta is finite. Valid enclosure
  // half-width for |f - H_n|.
  Rational tail_bound(std::size_t n) const;

  // Exact value of sum_k |c_k| (equals 2 * tail_bound(0) before the cap).
  Rational abs_sum() const;

  std::string describe() const;

 private:
  CoefficientSequence(int base, std::variant<Geometric, SignedPower, Explicit> kind);

  Rational raw_tail_sum(std::size_t n) const;  // sum_{k>=n} |c_k|, exact

  int base_;
  std::variant<Geometric, SignedPower, Explicit> kind_;
  EtaCertificate eta_;
};

}  // namespace takagi
