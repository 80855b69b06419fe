#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "mockeis/errors.hpp"

namespace mockeis {

// Exact rational arithmetic. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as every value entering it is canonical,
// which the constructors below guarantee.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Always "num/den", also for integers: the wire form used by JSON output.
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// "num/den" when the denominator is not 1, otherwise just "num".
inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "n", "-n", "n/d". Throws InvalidArgument on malformed input or d = 0.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    Integer num(s.substr(0, slash), 10);
    Integer den = 1;
    if (slash != std::string::npos) den = Integer(s.substr(slash + 1), 10);
    if (den == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("malformed rational '" + s + "'");
  }
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer ipow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// 2^e for any sign of e.
inline Rational pow2(int e) {
  Integer p = ipow(2, static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? make_rational(Integer(1), p) : Rational(p);
}

inline Rational pow(const Rational& base, unsigned e) {
  return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

}  // namespace mockeis
