#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kzeta {

// Exact arbitrary-precision rational, always kept in lowest terms with a
// positive denominator (mpq_class canonicalizes on construction from
// integers; we canonicalize explicitly where a raw num/den pair is set).
using BigRational = mpq_class;
using BigInt = mpz_class;

inline BigRational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

// Canonical string form: "p/q", or just "p" when q = 1.
inline std::string rat_str(const BigRational& q) { return q.get_str(); }

// b^e with e any integer; e < 0 requires b != 0.
inline BigRational pow_int(const BigRational& b, long e) {
  if (e == 0) return BigRational(1);
  if (b == 0 && e < 0) throw std::invalid_argument("pow_int: 0 to negative power");
  BigRational base = e > 0 ? b : BigRational(1) / b;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  BigRational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline double to_double(const BigRational& q) { return q.get_d(); }

}  // namespace kzeta
