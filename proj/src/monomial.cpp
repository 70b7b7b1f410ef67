#include "kzeta/monomial.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kzeta/arith.hpp"

namespace kzeta {

MonomialValue::MonomialValue(GaussianRational coeff, int pi_pow, long long radicand)
    : coeff_(std::move(coeff)), pi_pow_(pi_pow), sqrt_arg_(1) {
  if (radicand <= 0) throw std::invalid_argument("MonomialValue: radicand must be positive");
  // radicand = g^2 * d with d squarefree: 1/sqrt(radicand) = (1/g) / sqrt(d).
  long long g = 1, d = 1;
  for (const auto& [p, e] : factor(radicand)) {
    if (e & 1) d *= p;
    for (int i = 0; i < e / 2; ++i) g *= p;
  }
  coeff_ = coeff_ * (BigRational(1) / BigRational(static_cast<long>(g)));
  sqrt_arg_ = d;
  if (is_zero()) {
    pi_pow_ = 0;
    sqrt_arg_ = 1;
  }
}

BigRational MonomialValue::rational_value() const {
  if (!is_rational()) throw std::domain_error("MonomialValue: value is not rational");
  return coeff_.re;
}

MonomialValue MonomialValue::operator*(const MonomialValue& o) const {
  // sqrt(d1)*sqrt(d2) = g*sqrt(d3) with d1*d2 = g^2*d3; here the radicals sit
  // in the denominator, so the product picks up 1/(g*sqrt(d3)).
  MonomialValue r(coeff_ * o.coeff_, pi_pow_ + o.pi_pow_, 1);
  return MonomialValue(r.coeff_, r.pi_pow_, sqrt_arg_ * o.sqrt_arg_);
}

MonomialValue MonomialValue::operator*(const BigRational& s) const {
  MonomialValue r = *this;
  r.coeff_ = r.coeff_ * s;
  if (r.is_zero()) {
    r.pi_pow_ = 0;
    r.sqrt_arg_ = 1;
  }
  return r;
}

MonomialValue MonomialValue::operator*(const GaussianRational& s) const {
  MonomialValue r = *this;
  r.coeff_ = r.coeff_ * s;
  if (r.is_zero()) {
    r.pi_pow_ = 0;
    r.sqrt_arg_ = 1;
  }
  return r;
}

MonomialValue MonomialValue::operator/(const MonomialValue& o) const {
  if (o.is_zero()) throw std::invalid_argument("MonomialValue: division by zero");
  // 1/sqrt(d) inverts to sqrt(d) = d/sqrt(d).
  GaussianRational c = coeff_ / o.coeff_;
  c = c * BigRational(static_cast<long>(o.sqrt_arg_));
  MonomialValue r(c, pi_pow_ - o.pi_pow_, 1);
  return MonomialValue(r.coeff_, r.pi_pow_, sqrt_arg_ * o.sqrt_arg_);
}

MonomialValue MonomialValue::operator+(const MonomialValue& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (pi_pow_ != o.pi_pow_ || sqrt_arg_ != o.sqrt_arg_)
    throw std::domain_error("MonomialValue: sum of incompatible signatures");
  MonomialValue r = *this;
  r.coeff_ = r.coeff_ + o.coeff_;
  if (r.is_zero()) {
    r.pi_pow_ = 0;
    r.sqrt_arg_ = 1;
  }
  return r;
}

MonomialValue MonomialValue::operator-(const MonomialValue& o) const {
  return *this + (o * BigRational(-1));
}

bool MonomialValue::operator==(const MonomialValue& o) const {
  return coeff_ == o.coeff_ && pi_pow_ == o.pi_pow_ && sqrt_arg_ == o.sqrt_arg_;
}

std::complex<double> MonomialValue::embed() const {
  double scale = std::pow(std::numbers::pi, pi_pow_) /
                 std::sqrt(static_cast<double>(sqrt_arg_));
  return coeff_.embed() * scale;
}

}  // namespace kzeta
