#include "takagi/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "takagi/errors.hpp"

namespace takagi {

Int pow_int(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Rational pow_rational(const Rational& base, unsigned long exp) {
  Rational r(1);
  Rational b = base;
  unsigned long e = exp;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_to_int(const Rational& x) {
  return floor_div(x.get_num(), x.get_den());
}

Int ceil_to_int(const Rational& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw ParseError("empty numeric literal");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(s.begin());
  }
  if (s.empty()) throw ParseError("sign without digits: '" + text + "'");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction: '" + text + "'");
    Int n, d;
    if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0 ||
        mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0)
      throw ParseError("malformed fraction: '" + text + "'");
    if (d == 0) throw ParseError("zero denominator: '" + text + "'");
    Rational r = make_rational(n, d);
    return negative ? Rational(-r) : r;
  }

  // decimal with optional exponent
  std::string mantissa = s;
  long exponent = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = s.substr(0, epos);
    std::string es = s.substr(epos + 1);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = (es[0] == '-');
      es.erase(es.begin());
    }
    if (!all_digits(es)) throw ParseError("malformed exponent: '" + text + "'");
    exponent = std::strtol(es.c_str(), nullptr, 10);
    if (eneg) exponent = -exponent;
  }

  std::string digits;
  long frac_digits = 0;
  auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    std::string ip = mantissa.substr(0, dot);
    std::string fp = mantissa.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("malformed number: '" + text + "'");
    if (!ip.empty() && !all_digits(ip)) throw ParseError("malformed number: '" + text + "'");
    if (!fp.empty() && !all_digits(fp)) throw ParseError("malformed number: '" + text + "'");
    digits = ip + fp;
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) throw ParseError("malformed number: '" + text + "'");
    digits = mantissa;
  }
  if (digits.empty()) throw ParseError("malformed number: '" + text + "'");

  Int n;
  if (mpz_set_str(n.get_mpz_t(), digits.c_str(), 10) != 0)
    throw ParseError("malformed number: '" + text + "'");
  long net = exponent - frac_digits;
  Rational r;
  if (net >= 0) {
    r = Rational(n * pow_int(10, static_cast<unsigned long>(net)));
  } else {
    r = make_rational(n, pow_int(10, static_cast<unsigned long>(-net)));
  }
  return negative ? Rational(-r) : r;
}

std::string decimal_string(const Rational& x, int digits) {
  if (digits < 0) digits = 0;
  Int num = x.get_num();
  Int den = x.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  Int scale = pow_int(10, static_cast<unsigned long>(digits));
  Int scaled = num * scale;
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  // round half away from zero
  if (2 * r >= den) q += 1;
  std::string body = q.get_str();
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    if (static_cast<long>(body.size()) <= digits)
      body.insert(0, static_cast<std::size_t>(digits + 1 - body.size()), '0');
    out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
  }
  if (neg && q != 0) out.insert(out.begin(), '-');
  return out;
}

double to_double(const Rational& x) { return x.get_d(); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace takagi
