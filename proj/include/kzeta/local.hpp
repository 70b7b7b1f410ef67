#pragma once

#include <complex>

#include "kzeta/cyc8.hpp"
#include "kzeta/monomial.hpp"
#include "kzeta/rational.hpp"

namespace kzeta {

// Exact local Gauss sum value; for odd p at odd j the closed form carries an
// explicit sqrt(p), recorded in has_sqrt (the embedded value is
// base * sqrt(p)^has_sqrt).  These radicals must cancel in any downstream
// rational identity; keeping the flag explicit makes that checkable.
struct SqrtScaled {
  Cyc8 base;
  bool has_sqrt = false;
  long long p = 1;
  std::complex<double> embed() const;
};

// a(p^j, n): the normalized local Gauss sum
//   p = 2:  sum_{r=1}^{2^j} (2^j|r) eps_r e(n r / 2^j)
//   p odd:  eps_{p^j}^(-1) sum_{r=1}^{p^j} (r|p^j) e(n r / p^j)
// in closed form.  j = 1, p = 2 falls outside the closed-form table and is
// pinned to the defining sum, a(2, n) = (-1)^n.
SqrtScaled gauss_local_exact(long long p, int j, long long n);

// The defining sum, evaluated term by term (the oracle).
std::complex<double> gauss_local_numeric(long long p, int j, long long n);

// Local density A(p, n): sum_{j>=1} a(p^j,n) p^(-3j/2) for odd p and
// sum_{j>=2} a(2^j,n) 2^(-3j/2) for p = 2, via the closed forms.  Values lie
// in Q(i) (the sqrt(p) cancels against p^(-j-1/2)).
Cyc8 local_density_A(long long p, long long n);

// The same local series with exponent s + 1/2 in place of 3/2, numerically,
// from the closed rational expressions in p^s; agrees with local_density_A
// at s = 1.
std::complex<double> local_density_A_general(long long p, long long n, double s);

// Conjugate-side local factor A_1(p, n), satisfying
// A(p, n) = conj(A_1(p, -n)); rational for odd p.
Cyc8 pei_wang_A1(long long p, long long n);

// Numeric local factors of the factored zeta (sexp is the literal exponent):
//   two_factor(n, sexp)    = sum_{j>=2} a(2^j,n) 2^(-j sexp) + a(4,n) 2^(-2 sexp)
//   odd_factor(p, n, sexp) = sum_{j>=1} a(p^j,n) p^(-j sexp)
// (geometric closed forms at n = 0, finite sums otherwise).
std::complex<double> two_factor(long long n, double sexp);
std::complex<double> odd_factor(long long p, long long n, double sexp);

// Exact two_factor at sexp = 3/2: A(2,n) + a(4,n)/8, a Gaussian rational.
Cyc8 two_factor_exact(long long n);

// T^chi_t_{M,s}(m) = sum_{d|m, gcd(d,M)=1} mu(d) (t|d) d^(s-1) sigma_{M,2s-1}(m/d)
// with sigma_{M,k}(r) = sum_{e|r, gcd(e,M)=1} e^k.  The exact form requires an
// integral s so that all divisor powers stay rational.
BigRational t_sum(long long M, long s, long long t, long long m);
double t_sum_numeric(long long M, double s, long long t, long long m);

// Factored evaluation of the Kloosterman zeta at spectral parameter s
// (Dirichlet-series argument s + 1/2), for n ≡ 0, 1 (mod 4):
//   n != 0:  L_{4N}(s, chi_t)/L_{4N}(2s, id) * T_{4N,1-s}(m) * local factors
//   n  = 0:  L_{4N}(2s-1, id)/L_{4N}(2s, id) * local factors.
std::complex<double> kz_factored(long long n, long long N, double s);

// rho(N) = (1/2 pi) prod_{p|N} 1/(p+1).
MonomialValue residue_multiplier(long long N);

// Residue at the central point s = 3/4 of s -> K(0, n; 2s):
// (3/2pi)(1+i) rho(N) for positive squares, half that for n = 0, else 0.
MonomialValue residue_r(long long n, long long N);

// Central-point coefficient c(n) of the Kloosterman zeta: the plain value of
// the factored zeta at Dirichlet argument 3/2 when that is regular (n < 0 and
// nonsquare n >= 0), and the regularized derivative
//   d/ds [(s - 3/4) K(0,n;2s)] at s = 3/4
// at the poles (n = 0 and positive squares).  Exact monomial for n < 0;
// numeric (Euler-Mascheroni enters) at the poles.
struct SpecialZetaValue {
  enum class Tag { exact, numeric };
  Tag tag = Tag::numeric;
  MonomialValue exact;          // meaningful when tag == exact
  std::complex<double> approx;  // always populated
};
SpecialZetaValue c_frak(long long n, long long N);

}  // namespace kzeta
