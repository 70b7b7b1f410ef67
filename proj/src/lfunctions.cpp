#include "kzeta/lfunctions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kzeta {

BigRational l_chi_zero(long long t) {
  if (!is_fundamental_discriminant(t))
    throw std::invalid_argument("l_chi_zero: t must be a fundamental discriminant");
  if (t == 1) return rat(-1, 2);  // zeta(0)
  long long a_abs = t < 0 ? -t : t;
  BigInt sum(0);
  for (long long a = 1; a <= a_abs; ++a)
    sum += BigInt(kronecker(t, a)) * BigInt(static_cast<long>(a));
  BigRational r(sum, BigInt(static_cast<long>(a_abs)));
  r.canonicalize();
  return -r;
}

BigRational zeta_minus_one() { return rat(-1, 12); }

BigRational l_incomplete_zero_exact(long long t, long long level) {
  return l_chi_zero(t) * euler_factor(t, 0, level);
}

MonomialValue l_one_exact(long long t) {
  if (t >= 0 || !is_fundamental_discriminant(t))
    throw std::invalid_argument("l_one_exact: t must be a negative fundamental discriminant");
  return MonomialValue({l_chi_zero(t), BigRational(0)}, 1, -t);
}

double l_one_numeric(long long t) {
  if (t <= 1 || !is_fundamental_discriminant(t))
    throw std::invalid_argument("l_one_numeric: t must be a fundamental discriminant > 1");
  double s = 0.0;
  for (long long a = 1; a < t; ++a) {
    int chi = kronecker(t, a);
    if (chi)
      s += chi * std::log(2.0 * std::sin(std::numbers::pi * a / static_cast<double>(t)));
  }
  return -s / std::sqrt(static_cast<double>(t));
}

LNumeric l_numeric(long long t, double s, long terms) {
  if (terms < 1) throw std::invalid_argument("l_numeric: need at least one term");
  if (s <= 1.0) throw std::invalid_argument("l_numeric: requires s > 1");
  double v = 0.0;
  for (long n = 1; n <= terms; ++n) {
    int chi = kronecker(t, n);
    if (chi) v += chi * std::pow(static_cast<double>(n), -s);
  }
  double tail = std::pow(static_cast<double>(terms), 1.0 - s) / (s - 1.0);
  return {v, tail};
}

double hurwitz_zeta_em(double x, double a) {
  if (x <= 0.0 || x == 1.0)
    throw std::invalid_argument("hurwitz_zeta_em: requires x > 0, x != 1");
  if (a <= 0.0 || a > 1.0) throw std::invalid_argument("hurwitz_zeta_em: requires 0 < a <= 1");
  const int T = 32;
  double s = 0.0;
  for (int k = 0; k < T; ++k) s += std::pow(k + a, -x);
  const double z = T + a;
  s += std::pow(z, 1.0 - x) / (x - 1.0);
  s += 0.5 * std::pow(z, -x);
  // Euler-Maclaurin tail: sum_j B_{2j}/(2j)! * (x)(x+1)...(x+2j-2) * z^(1-x-2j).
  static const double b2jf[] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600};
  double rising = x;  // product x*(x+1)*...*(x+2j-2)
  double zp = std::pow(z, -x - 1.0);
  for (int j = 1; j <= 4; ++j) {
    s += b2jf[j - 1] * rising * zp;
    rising *= (x + 2 * j - 1) * (x + 2 * j);
    zp /= z * z;
  }
  return s;
}

double zeta_em(double x) { return hurwitz_zeta_em(x, 1.0); }

double l_chi_em(long long t, double x) {
  if (t == 1) return zeta_em(x);
  if (!is_fundamental_discriminant(t))
    throw std::invalid_argument("l_chi_em: t must be a fundamental discriminant");
  // The Hurwitz-zeta pieces each have a pole at x = 1; exactly there, use the
  // classical evaluations instead (the series is regular for chi nontrivial).
  if (x == 1.0) return t < 0 ? l_one_exact(t).embed().real() : l_one_numeric(t);
  long long q = t < 0 ? -t : t;
  double s = 0.0;
  for (long long a = 1; a <= q; ++a) {
    int chi = kronecker(t, a);
    if (chi) s += chi * hurwitz_zeta_em(x, static_cast<double>(a) / q);
  }
  return s * std::pow(static_cast<double>(q), -x);
}

double l_incomplete_em(long long t, double x, long long level) {
  double prod = 1.0;
  for (const auto& [p, e] : factor(level)) {
    (void)e;
    prod *= 1.0 - kronecker(t, p) * std::pow(static_cast<double>(p), -x);
  }
  return l_chi_em(t, x) * prod;
}

}  // namespace kzeta
