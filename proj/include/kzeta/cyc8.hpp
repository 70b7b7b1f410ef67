#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include "kzeta/rational.hpp"

namespace kzeta {

// Exact element of Q(i): re + im*i.
struct GaussianRational {
  BigRational re{0}, im{0};

  GaussianRational() = default;
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator*(const BigRational& c) const { return {re * c, im * c}; }
  GaussianRational operator/(const GaussianRational& o) const {
    BigRational n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::invalid_argument("GaussianRational: division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
  GaussianRational conj() const { return {re, BigRational(-im)}; }
  std::complex<double> embed() const { return {to_double(re), to_double(im)}; }
};

// Exact element of the 8th cyclotomic field Q(zeta8), stored on the basis
// 1, zeta8, zeta8^2, zeta8^3 with zeta8^4 = -1.  Note zeta8^2 = i and
// zeta8 + zeta8^(-1) = sqrt(2), so Q(i) and Q(sqrt 2) sit inside.
class Cyc8 {
 public:
  Cyc8() : c_{BigRational(0), BigRational(0), BigRational(0), BigRational(0)} {}
  explicit Cyc8(const BigRational& r)
      : c_{r, BigRational(0), BigRational(0), BigRational(0)} {}
  Cyc8(BigRational a0, BigRational a1, BigRational a2, BigRational a3)
      : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

  static Cyc8 gaussian(const BigRational& re, const BigRational& im) {
    return Cyc8(re, BigRational(0), im, BigRational(0));
  }
  static Cyc8 i() { return gaussian(BigRational(0), BigRational(1)); }
  // zeta8^k for any integer k.
  static Cyc8 zeta8_pow(long k);
  static Cyc8 sqrt2() {
    return Cyc8(BigRational(0), BigRational(1), BigRational(0), BigRational(-1));
  }

  const BigRational& coord(int j) const { return c_[j]; }

  Cyc8 operator+(const Cyc8& o) const;
  Cyc8 operator-(const Cyc8& o) const;
  Cyc8 operator-() const;
  Cyc8 operator*(const Cyc8& o) const;
  Cyc8 operator*(const BigRational& s) const;
  bool operator==(const Cyc8& o) const { return c_ == o.c_; }
  bool is_zero() const;

  // Complex conjugation: zeta8 -> zeta8^(-1) = -zeta8^3.
  Cyc8 conj() const { return Cyc8(c_[0], -c_[3], -c_[2], -c_[1]); }

  Cyc8 pow(long e) const;

  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_gaussian() const { return c_[1] == 0 && c_[3] == 0; }
  BigRational rational_part() const;    // throws unless is_rational()
  GaussianRational gaussian_part() const;  // throws unless is_gaussian()

  // Numeric embedding with zeta8 = exp(pi*i/4).
  std::complex<double> embed() const;

 private:
  std::array<BigRational, 4> c_;
};

inline Cyc8 operator*(const BigRational& s, const Cyc8& z) { return z * s; }

// epsilon_d for odd d: 1 if d ≡ 1 (mod 4), i if d ≡ 3 (mod 4).
Cyc8 epsilon_unit(long long d);

// Spec'd name for the numeric embedding.
std::complex<double> cyc8_embed(const Cyc8& z);

}  // namespace kzeta
