#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace takagi {

// All arithmetic in this library is exact. Rational is the public value
// type; Int shows up wherever counts or scaled numerators are exchanged.
using Int = mpz_class;
using Rational = mpq_class;

Int pow_int(unsigned long base, unsigned long exp);

Rational pow_rational(const Rational& base, unsigned long exp);

// Floor division a/b for b > 0 (round toward -infinity).
Int floor_div(const Int& a, const Int& b);

Int floor_to_int(const Rational& x);
Int ceil_to_int(const Rational& x);

Rational make_rational(const Int& num, const Int& den);

// Accepts "p/q", integers, and finite decimal/scientific literals
// ("0.7", "1e-6", "-3/8"). Every accepted form converts exactly; anything
// that would need rounding (inf, nan, hex floats) is a ParseError.
Rational parse_rational(const std::string& text);

// Fixed-point decimal rendering with the given number of fractional digits,
// rounding half away from zero. Exact and platform-independent, which is
// what keeps CSV/SVG output byte-reproducible.
std::string decimal_string(const Rational& x, int digits);

double to_double(const Rational& x);

// splitmix64; used for seeded sign rules and seeded sample draws so that
// outputs are a pure function of (seed, index) on every platform.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace takagi
