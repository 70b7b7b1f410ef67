#include "kzeta/local.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kzeta/arith.hpp"
#include "kzeta/lfunctions.hpp"

namespace kzeta {

std::complex<double> SqrtScaled::embed() const {
  std::complex<double> v = base.embed();
  return has_sqrt ? v * std::sqrt(static_cast<double>(p)) : v;
}

static long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

static void require_prime(long long p, const char* who) {
  if (p < 2) throw std::invalid_argument(std::string(who) + ": p must be prime");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument(std::string(who) + ": p must be prime");
}

SqrtScaled gauss_local_exact(long long p, int j, long long n) {
  if (j < 1) throw std::invalid_argument("gauss_local_exact: j must be >= 1");
  SqrtScaled out;
  out.p = p;
  if (p == 2) {
    if (j == 1) {
      // Outside the closed-form table; from the defining sum, a(2,n) = (-1)^n.
      out.base = Cyc8(BigRational((n % 2 == 0) ? 1 : -1));
      return out;
    }
    if (j % 2 == 0) {
      long long d = pow_ll(2, j - 2);
      if (n % d != 0) return out;  // zero
      long long m = n / d;
      // e^(pi i/4) 2^(j-3/2) = (1+i) 2^(j-2); the extra phase is i^m (m even)
      // or i^(m-1) (m odd), so always an integer power of i = zeta8^2.
      long long ipow = (m % 2 == 0) ? m : m - 1;
      out.base = Cyc8::gaussian(BigRational(static_cast<long>(d)),
                                BigRational(static_cast<long>(d))) *
                 Cyc8::zeta8_pow(2 * (((ipow % 4) + 4) % 4));
      return out;
    }
    // odd j >= 3: nonzero only for n = 2^(j-3) u with u ≡ 1 (mod 4);
    // value e^(pi i/4) 2^(j-1) e^(pi i (u-1)/4) = zeta8^(1 + 4(u-1)/4) 2^(j-1).
    long long d = pow_ll(2, j - 3);
    if (n % d != 0) return out;
    long long u = n / d;
    if (u % 2 == 0) return out;
    long long u4 = ((u % 4) + 4) % 4;
    if (u4 != 1) return out;
    long long q = (u - 1) / 4;
    out.base = Cyc8::zeta8_pow(1 + 4 * (q % 2)) * BigRational(static_cast<long>(pow_ll(2, j - 1)));
    return out;
  }
  // odd prime p
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("gauss_local_exact: p must be prime");
  long long pj1 = pow_ll(p, j - 1);
  if (n % pj1 != 0) return out;
  bool top = (n % (pj1 * p) == 0);  // p^j | n
  if (j % 2 == 1) {
    if (top) return out;
    int chi = kronecker(n / pj1, p);
    out.base = Cyc8(BigRational(chi * static_cast<long>(pj1)));
    out.has_sqrt = true;  // value chi * p^(j - 1/2)
    return out;
  }
  if (top)
    out.base = Cyc8(BigRational(static_cast<long>(pj1 * (p - 1))));  // phi(p^j)
  else
    out.base = Cyc8(BigRational(-static_cast<long>(pj1)));
  return out;
}

std::complex<double> gauss_local_numeric(long long p, int j, long long n) {
  if (j < 1) throw std::invalid_argument("gauss_local_numeric: j must be >= 1");
  long long q = pow_ll(p, j);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(q);
  long long nn = ((n % q) + q) % q;
  std::complex<double> sum = 0.0;
  if (p == 2) {
    for (long long r = 1; r <= q; r += 2) {
      double ang = w * static_cast<double>(nn * r % q);
      std::complex<double> eps = (r & 3) == 1 ? std::complex<double>(1, 0)
                                              : std::complex<double>(0, 1);
      sum += static_cast<double>(kronecker(q, r)) * eps *
             std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return sum;
  }
  for (long long r = 1; r <= q; ++r) {
    int chi = kronecker(r, q);
    if (!chi) continue;
    double ang = w * static_cast<double>(nn * r % q);
    sum += static_cast<double>(chi) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  std::complex<double> eps = (q & 3) == 1 ? std::complex<double>(1, 0)
                                          : std::complex<double>(0, 1);
  return std::conj(eps) * sum;  // eps_{p^j}^(-1)
}

Cyc8 local_density_A(long long p, long long n) {
  require_prime(p, "local_density_A");
  if (p == 2) {
    if (n == 0) return Cyc8::gaussian(rat(1, 4), rat(1, 4));
    int nu = valuation(n, 2);
    BigRational r;
    if (nu % 2 == 1) {
      r = BigRational(1) - rat(3) * pow_int(rat(1, 2), (nu + 1) / 2);
    } else {
      long long core = n >> nu;
      long long c8 = ((core % 8) + 8) % 8;
      if (c8 % 4 == 3)
        r = BigRational(1) - rat(3) * pow_int(rat(1, 2), nu / 2 + 1);
      else if (c8 == 1)
        r = BigRational(1);
      else  // core ≡ 5 (mod 8)
        r = BigRational(1) - pow_int(rat(1, 2), nu / 2);
    }
    return Cyc8::gaussian(r / 4, r / 4);  // (1+i)/4 * r
  }
  if (n == 0) return Cyc8(rat(1, static_cast<long>(p)));
  int nu = valuation(n, p);
  BigRational pinv = rat(1, static_cast<long>(p));
  if (nu % 2 == 1)
    return Cyc8(pinv - BigRational(static_cast<long>(p + 1)) *
                           pow_int(pinv, (nu + 3) / 2));
  long long core = n / pow_ll(p, nu);
  int chi = kronecker(core, p);
  if (chi == 1) return Cyc8(pinv);
  return Cyc8(pinv - rat(2) * pow_int(pinv, nu / 2 + 1));
}

std::complex<double> local_density_A_general(long long p, long long n, double s) {
  require_prime(p, "local_density_A_general");
  auto pw = [](double b, double e) { return std::pow(b, e); };
  if (p == 2) {
    if (n == 0) {
      // geometric: sum over even j >= 2 of (1+i) 2^(j-2) 2^(-j(s+1/2))
      double x = pw(4.0, 0.5 - s);  // ratio per step j -> j+2
      double sum = 0.25 * x / (1.0 - x);
      return std::complex<double>(sum, sum);
    }
    int nu = valuation(n, 2);
    double den = pw(2.0, 2 * s) - 2.0;
    double r;
    if (nu % 2 == 1) {
      r = pw(2.0, -nu * s) *
          (pw(2.0, (nu + 1) * s) - pw(2.0, (nu + 1) / 2.0) * (pw(2.0, 2 * s) - 1.0)) / den;
    } else {
      long long core = n >> nu;
      long long c8 = ((core % 8) + 8) % 8;
      if (c8 % 4 == 3) {
        r = pw(2.0, -(nu + 1) * s) *
            (pw(2.0, (nu + 2) * s) - pw(2.0, nu / 2.0 + 2 * s + 1.0) +
             pw(2.0, nu / 2.0 + 1.0)) /
            den;
      } else if (c8 == 1) {
        r = pw(2.0, -(nu + 2) * s) *
            (pw(2.0, nu / 2.0 + 1.0) * (pw(2.0, s) - 2.0) * (pw(2.0, s) + 1.0) +
             pw(2.0, (nu + 3) * s)) /
            den;
      } else {  // core ≡ 5 (mod 8)
        r = pw(2.0, -(nu + 2) * s) *
            (-pw(2.0, nu / 2.0 + 1.0) * (pw(2.0, s) + pw(2.0, 2 * s) - 2.0) +
             pw(2.0, (nu + 3) * s)) /
            den;
      }
    }
    // prefactor (1+i)/2^(s+1)
    double c = pw(2.0, -s - 1.0) * r;
    return {c, c};
  }
  double P = static_cast<double>(p);
  if (n == 0) {
    double x = pw(P, 2.0 * (1.0 - (s + 0.5)));  // p^(2(1/2 - s))
    return (1.0 - 1.0 / P) * x / (1.0 - x);
  }
  int nu = valuation(n, p);
  double p2s = pw(P, 2 * s);
  double v;
  if (nu % 2 == 1) {
    v = (1.0 - pw(P, -2 * s)) *
            (pw(P, s * (1 - nu) + (nu + 1) / 2.0) - p2s) / (P - p2s) -
        1.0;
  } else {
    long long core = n / pow_ll(p, nu);
    int chi = kronecker(core, p);
    double common = pw(P, nu / 2.0 - nu * s);
    double inner = chi == 1 ? (p2s - pw(P, 1.0 - s) + pw(P, s) - P + 1.0)
                            : (p2s + pw(P, 1.0 - s) - pw(P, s) - P + 1.0);
    v = (-common * p2s + common * inner + p2s - 1.0) / (p2s - P) - 1.0;
  }
  return {v, 0.0};
}

Cyc8 pei_wang_A1(long long p, long long n) {
  if (p == 2) {
    BigRational r;
    if (n == 0) {
      r = rat(2);
    } else {
      int nu = valuation(n, 2);
      if (nu % 2 == 1) {
        r = rat(2) - rat(3) * pow_int(rat(1, 2), (nu - 1) / 2);
      } else {
        long long core = n >> nu;
        long long c4 = ((core % 4) + 4) % 4;
        BigRational h = pow_int(rat(1, 2), nu / 2);
        if (c4 == 1) {
          r = rat(2) - rat(3) * h;
        } else {
          // core ≡ 3 (mod 4): extra symbol (-core|2)
          r = rat(2) - rat(2) * h + h * BigRational(1 + kronecker(-core, 2));
        }
      }
    }
    // prefactor (1-i)/8
    return Cyc8::gaussian(r / 8, -r / 8);
  }
  BigRational pinv = rat(1, static_cast<long>(p));
  if (n == 0) return Cyc8(pinv);
  int nu = valuation(n, p);
  if (nu % 2 == 1) {
    BigRational r = (BigRational(1) - pow_int(pinv, (nu - 1) / 2)) * pinv -
                    pow_int(pinv, (nu + 1) / 2 + 1);
    return Cyc8(r);
  }
  long long core = n / pow_ll(p, nu);
  int chi = kronecker(-core, p);
  BigRational r = (BigRational(1) - pow_int(pinv, nu / 2)) * pinv +
                  BigRational(chi) * pow_int(pinv, nu / 2 + 1);
  return Cyc8(r);
}

std::complex<double> two_factor(long long n, double sexp) {
  if (n == 0) {
    double x = std::pow(4.0, 1.0 - sexp);
    double g = 0.25 * x / (1.0 - x) + std::pow(2.0, -2.0 * sexp);
    return {g, g};  // both pieces carry (1+i)
  }
  int nu = valuation(n, 2);
  std::complex<double> sum = 0.0;
  for (int j = 2; j <= nu + 3; ++j)
    sum += gauss_local_exact(2, j, n).embed() * std::pow(2.0, -j * sexp);
  sum += gauss_local_exact(2, 2, n).embed() * std::pow(2.0, -2.0 * sexp);
  return sum;
}

std::complex<double> odd_factor(long long p, long long n, double sexp) {
  double P = static_cast<double>(p);
  if (n == 0) {
    double x = std::pow(P, 2.0 * (1.0 - sexp));
    return {(1.0 - 1.0 / P) * x / (1.0 - x), 0.0};
  }
  int nu = valuation(n, p);
  std::complex<double> sum = 0.0;
  for (int j = 1; j <= nu + 1; ++j)
    sum += gauss_local_exact(p, j, n).embed() * std::pow(P, -j * sexp);
  return sum;
}

Cyc8 two_factor_exact(long long n) {
  SqrtScaled a4 = gauss_local_exact(2, 2, n);
  return local_density_A(2, n) + a4.base * rat(1, 8);
}

static BigRational sigma_coprime_pow(long long M, long k, long long r) {
  BigRational s(0);
  for (long long e : divisors(r))
    if (std::gcd(e, M) == 1) s += pow_int(BigRational(static_cast<long>(e)), k);
  return s;
}

BigRational t_sum(long long M, long s, long long t, long long m) {
  BigRational total(0);
  for (long long d : divisors(m)) {
    if (std::gcd(d, M) != 1) continue;
    int mu = moebius(d);
    if (!mu) continue;
    int chi = kronecker(t, d);
    if (!chi) continue;
    total += BigRational(mu * chi) * pow_int(BigRational(static_cast<long>(d)), s - 1) *
             sigma_coprime_pow(M, 2 * s - 1, m / d);
  }
  return total;
}

double t_sum_numeric(long long M, double s, long long t, long long m) {
  double total = 0.0;
  for (long long d : divisors(m)) {
    if (std::gcd(d, M) != 1) continue;
    int mu = moebius(d);
    if (!mu) continue;
    int chi = kronecker(t, d);
    if (!chi) continue;
    double sig = 0.0;
    for (long long e : divisors(m / d))
      if (std::gcd(e, M) == 1) sig += std::pow(static_cast<double>(e), 2.0 * s - 1.0);
    total += mu * chi * std::pow(static_cast<double>(d), s - 1.0) * sig;
  }
  return total;
}

std::complex<double> kz_factored(long long n, long long N, double s) {
  if (N < 1 || N % 2 == 0 || !is_squarefree(N))
    throw std::invalid_argument("kz_factored: N must be odd and squarefree");
  const double sexp = s + 0.5;
  const double E2 = l_incomplete_em(1, 2.0 * s, 4 * N);
  std::complex<double> loc = two_factor(n, sexp);
  for (const auto& [p, e] : factor(N)) {
    (void)e;
    loc *= odd_factor(p, n, sexp);
  }
  if (n == 0) return (l_incomplete_em(1, 2.0 * s - 1.0, 4 * N) / E2) * loc;
  auto [t, m] = decompose_discriminant(n);
  double lr = l_incomplete_em(t, s, 4 * N) / E2;
  double T = t_sum_numeric(4 * N, 1.0 - s, t, m);
  return lr * T * loc;
}

MonomialValue residue_multiplier(long long N) {
  BigRational c = rat(1, 2);
  for (const auto& [p, e] : factor(N)) {
    (void)e;
    c /= BigRational(static_cast<long>(p) + 1);
  }
  return MonomialValue({c, BigRational(0)}, -1, 1);
}

MonomialValue residue_r(long long n, long long N) {
  if (n < 0 || (n > 0 && !is_perfect_square(n))) return MonomialValue();
  BigRational c = (n == 0) ? rat(3, 8) : rat(3, 4);
  for (const auto& [p, e] : factor(N)) {
    (void)e;
    c /= BigRational(static_cast<long>(p) + 1);
  }
  return MonomialValue({c, c}, -2, 1);
}

// prod_{p | level} (1 - p^(-x)), the finite Euler product for the trivial
// character.
static double trivial_euler(double x, long long level) {
  double prod = 1.0;
  for (const auto& [p, e] : factor(level)) {
    (void)e;
    prod *= 1.0 - std::pow(static_cast<double>(p), -x);
  }
  return prod;
}

// f(n, u) = two_factor * odd factors * T_{4N, 3/2 - u}(sqrt n), the regular
// part of the factored zeta at a square (or zero) index.
static std::complex<double> square_part(long long n, long long N, double u) {
  std::complex<double> v = two_factor(n, u);
  for (const auto& [p, e] : factor(N)) {
    (void)e;
    v *= odd_factor(p, n, u);
  }
  if (n > 0) v *= t_sum_numeric(4 * N, 1.5 - u, 1, isqrt(n));
  return v;
}

SpecialZetaValue c_frak(long long n, long long N) {
  if (N < 1 || N % 2 == 0 || !is_squarefree(N))
    throw std::invalid_argument("c_frak: N must be odd and squarefree");
  long long r4 = ((n % 4) + 4) % 4;
  if (r4 == 2 || r4 == 3) throw std::invalid_argument("c_frak: n must be 0 or 1 mod 4");
  SpecialZetaValue out;

  if (n < 0) {
    // Regular point, exact: L_{4N}(1, chi_t)/L_{4N}(2, id) * T * local data.
    auto [t, m] = decompose_discriminant(n);
    MonomialValue num = l_one_exact(t) * euler_factor(t, 1, 4 * N);
    MonomialValue den({BigRational(euler_factor(1, 2, 4 * N)) / 6, BigRational(0)}, 2, 1);
    MonomialValue v = num / den;
    v = v * t_sum(4 * N, 0, t, m);
    v = v * two_factor_exact(n).gaussian_part();
    for (const auto& [p, e] : factor(N)) {
      (void)e;
      v = v * local_density_A(p, n).rational_part();
    }
    out.tag = SpecialZetaValue::Tag::exact;
    out.exact = v;
    out.approx = v.embed();
    return out;
  }

  if (n > 0 && !is_perfect_square(n)) {
    out.approx = kz_factored(n, N, 1.0);  // Dirichlet argument 3/2
    return out;
  }

  // n = 0 or a positive square: pole of s -> K(0,n;2s) at s = 3/4.  With
  // h = s - 3/4 and the leading factor (s-3/4) zeta(a + b h) = 1/b + gamma h
  // + O(h^2) (b = 4 resp. 2), the regularized derivative is
  //   (gamma R(3/4) + (1/b) R'(3/4)) f(3/2) + (1/b) R(3/4) d/ds f(2s)|_{3/4}
  // where R collects the finite Euler factors over the L in the denominator.
  const double gamma = 0.577215664901532860606512090082;
  const long long lev = 4 * N;
  const double b = (n == 0) ? 4.0 : 2.0;
  auto R = [&](double s) {
    double numx = (n == 0) ? 4.0 * s - 2.0 : 2.0 * s - 0.5;
    return trivial_euler(numx, lev) / l_incomplete_em(1, 4.0 * s - 1.0, lev);
  };
  auto f2s = [&](double s) { return square_part(n, N, 2.0 * s); };
  const double h = 1e-5;
  double R0 = R(0.75);
  double Rp = (R(0.75 + h) - R(0.75 - h)) / (2.0 * h);
  std::complex<double> F0 = f2s(0.75);
  std::complex<double> Fp = (f2s(0.75 + h) - f2s(0.75 - h)) / (2.0 * h);
  out.approx = (gamma * R0 + Rp / b) * F0 + (R0 / b) * Fp;
  return out;
}

}  // namespace kzeta
