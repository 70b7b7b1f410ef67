#pragma once

#include <complex>

#include "kzeta/cyc8.hpp"

namespace kzeta {

// Exact value of the shape  coeff * pi^pi_pow / sqrt(sqrt_arg)  with coeff a
// Gaussian rational and sqrt_arg a positive squarefree integer.  This is the
// closed ring in which the special L-values and the residues/coefficients of
// the Kloosterman zeta live; sums are only defined between values sharing the
// same (pi_pow, sqrt_arg) signature.
class MonomialValue {
 public:
  MonomialValue() : coeff_(), pi_pow_(0), sqrt_arg_(1) {}
  // Normalizes: the square part of radicand is folded into the coefficient
  // (value = coeff * pi^pi_pow / sqrt(radicand), radicand >= 1).
  MonomialValue(GaussianRational coeff, int pi_pow, long long radicand);

  static MonomialValue from_rational(const BigRational& q) {
    return MonomialValue({q, BigRational(0)}, 0, 1);
  }

  const GaussianRational& coeff() const { return coeff_; }
  int pi_pow() const { return pi_pow_; }
  long long sqrt_arg() const { return sqrt_arg_; }

  bool is_zero() const { return coeff_.re == 0 && coeff_.im == 0; }
  // True when the value lies in Q (no pi, no radical, no imaginary part).
  bool is_rational() const {
    return is_zero() || (pi_pow_ == 0 && sqrt_arg_ == 1 && coeff_.im == 0);
  }
  BigRational rational_value() const;

  MonomialValue operator*(const MonomialValue& o) const;
  MonomialValue operator*(const BigRational& s) const;
  MonomialValue operator*(const GaussianRational& s) const;
  MonomialValue operator/(const MonomialValue& o) const;
  // Throws std::domain_error when signatures differ (and neither side is 0).
  MonomialValue operator+(const MonomialValue& o) const;
  MonomialValue operator-(const MonomialValue& o) const;
  bool operator==(const MonomialValue& o) const;

  std::complex<double> embed() const;

 private:
  GaussianRational coeff_;
  int pi_pow_;
  long long sqrt_arg_;  // squarefree, >= 1
};

}  // namespace kzeta
