#include "kzeta/cyc8.hpp"

#include <cmath>

namespace kzeta {

Cyc8 Cyc8::zeta8_pow(long k) {
  k %= 8;
  if (k < 0) k += 8;
  Cyc8 z;
  if (k < 4)
    z.c_[k] = BigRational(1);
  else
    z.c_[k - 4] = BigRational(-1);
  return z;
}

Cyc8 Cyc8::operator+(const Cyc8& o) const {
  Cyc8 r;
  for (int j = 0; j < 4; ++j) r.c_[j] = c_[j] + o.c_[j];
  return r;
}

Cyc8 Cyc8::operator-(const Cyc8& o) const {
  Cyc8 r;
  for (int j = 0; j < 4; ++j) r.c_[j] = c_[j] - o.c_[j];
  return r;
}

Cyc8 Cyc8::operator-() const {
  Cyc8 r;
  for (int j = 0; j < 4; ++j) r.c_[j] = -c_[j];
  return r;
}

Cyc8 Cyc8::operator*(const Cyc8& o) const {
  Cyc8 r;
  for (int a = 0; a < 4; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (o.c_[b] == 0) continue;
      int k = a + b;
      if (k < 4)
        r.c_[k] += c_[a] * o.c_[b];
      else
        r.c_[k - 4] -= c_[a] * o.c_[b];  // zeta8^4 = -1
    }
  }
  return r;
}

Cyc8 Cyc8::operator*(const BigRational& s) const {
  Cyc8 r;
  for (int j = 0; j < 4; ++j) r.c_[j] = c_[j] * s;
  return r;
}

bool Cyc8::is_zero() const {
  for (int j = 0; j < 4; ++j)
    if (c_[j] != 0) return false;
  return true;
}

Cyc8 Cyc8::pow(long e) const {
  if (e < 0) throw std::invalid_argument("Cyc8::pow: negative exponent");
  Cyc8 acc{BigRational(1)};
  Cyc8 base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

BigRational Cyc8::rational_part() const {
  if (!is_rational()) throw std::domain_error("Cyc8: value is not rational");
  return c_[0];
}

GaussianRational Cyc8::gaussian_part() const {
  if (!is_gaussian()) throw std::domain_error("Cyc8: value is not in Q(i)");
  return {c_[0], c_[2]};
}

std::complex<double> Cyc8::embed() const {
  static const double h = std::sqrt(0.5);  // cos(pi/4) = sin(pi/4)
  double re = to_double(c_[0]) + h * (to_double(c_[1]) - to_double(c_[3]));
  double im = to_double(c_[2]) + h * (to_double(c_[1]) + to_double(c_[3]));
  return {re, im};
}

Cyc8 epsilon_unit(long long d) {
  long long r = ((d % 4) + 4) % 4;
  if (r == 1) return Cyc8(BigRational(1));
  if (r == 3) return Cyc8::i();
  throw std::invalid_argument("epsilon_unit: d must be odd");
}

std::complex<double> cyc8_embed(const Cyc8& z) { return z.embed(); }

}  // namespace kzeta
