#pragma once

#include "kzeta/rational.hpp"

namespace kzeta {

// sum_{d | r, gcd(d, N) = 1} d.
long long sigma_coprime(long long N, long long r);

// sum_{d | r, gcd(d, ell) = 1, gcd(r/d, N/ell) = 1} d   (ell | N).
long long sigma_ell(long long ell, long long N, long long r);

// Hurwitz class number H(n): the weighted count of SL2(Z)-classes of
// positive-definite binary quadratic forms of discriminant -n, with the
// classes of a(x^2+y^2) and a(x^2+xy+y^2) weighted 1/2 and 1/3.  H(0) =
// -1/12, and H(n) = 0 for n ≡ 1, 2 (mod 4).  Computed from the exact
// L-value formula; results are cached.
BigRational hurwitz(long long n);

// Generalized class number H_{ell,N}(n) for N odd squarefree and ell | N:
//   H_{ell,N}(n) = L_ell(0, chi_t)
//                  * prod_{p | N/ell} (1 - chi_t(p)/p) / (1 - p^(-2))
//                  * sum_{a | m, gcd(a,N)=1} mu(a) chi_t(a) sigma_ell(m/a)
// where -n = t*m^2 with t fundamental, together with
// H_{N,N}(0) = zeta(-1) * prod_{p|N} (1 - p) and H_{ell,N}(0) = 0 otherwise.
// H_{1,1} = H.
BigRational gen_hurwitz(long long ell, long long N, long long n);

// Independent brute-force H(n): direct enumeration of reduced forms
// (a, b, c), |b| <= a <= c, b >= 0 when |b| = a or a = c, with the boundary
// weights above.
BigRational hurwitz_oracle(long long n);

}  // namespace kzeta
