#pragma once

#include <gmpxx.h>

#include <string>

namespace homvec {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

// "p/q" with q omitted when 1; always canonical.
inline std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational r(s);
  r.canonicalize();
  return r;
}

inline BigInt pow_int(long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
  if (base < 0 && (e % 2) == 1) r = -r;
  return r;
}

}  // namespace homvec
