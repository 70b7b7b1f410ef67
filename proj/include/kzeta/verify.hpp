#pragma once

#include <string>

#include "kzeta/monomial.hpp"
#include "kzeta/rational.hpp"

namespace kzeta {

struct VerifyReport {
  bool ok = true;
  long checked = 0;     // indices (or cases) compared
  long first_fail = -1; // index of the first mismatch, -1 if none
  std::string detail;   // short human-oriented summary
};

// Exact coefficient g(n) of the holomorphic correction series, computed from
// the Kloosterman-zeta side:
//   g(n) = (1/3) (24 pi rho(N) H(n) - 4 pi (1+i) conj(K(0,-n;3/2)) sqrt(n)),
// which collapses to a rational number.  n >= 1, n ≡ 0, 3 (mod 4).
BigRational shadow_coefficient_zeta(long long n, long long N);

// The same coefficient from the class-number side:
//   4 P H(n) - (4/N) sum_{l | N} l [prod_{p|l} 1/(1-p)] H_{l,N}(n),
// P = prod_{p|N} 1/(p+1).
BigRational shadow_coefficient_class(long long n, long long N);

// Level identity: for prime N, coefficientwise
//   (1/(1-N)) H_{N,N}(n) = H(n) - ((N+1)/N) H_{1,N}(n);
// for composite N,  P * H(n) - (1/N) H_{1,N}(n)  against
//   (1/4) g(n) + (1/N) sum_{l>1, l|N} l [prod_{p|l} 1/(1-p)] H_{l,N}(n).
VerifyReport verify_thm11(long long N, long prec);

// N = 5: 3 * sum H_{5,5}(n) q^n equals the theta series of
// 7x^2+3y^2+7z^2+2xy-6xz+2yz; N = 7: twice the H_{7,7} series equals the
// theta series of 4x^2+7y^2+8z^2-4xz.
VerifyReport verify_example(long long N, long prec);

// Both routes to g(n) agree exactly for all n < prec (plus the constant
// term 1/3 - P/3 both ways).
VerifyReport verify_shadow(long long N, long prec);

// Theta^3 = 12 sum (H(4n) - 2H(n)) q^n, with the left side enumerated from
// the identity ternary form.
VerifyReport verify_theta3(long prec);

// Exact product expansion of the generalized class numbers through the local
// factors: for l | N, l > 1, n ≡ 0, 3 (mod 4),
//   H_{l,N}(n) = [4 pi (1+i)/12] prod_{p|l}(1-p)
//                * L_{4N}(1,chi_t)/L_{4N}(2,id) * T_{4N,0}(m)
//                * prod_{p|l}(A_1(p,n) - 1/p) * (A_1(2,n) + (1-i)/8) * sqrt(n).
VerifyReport verify_lemma52(long long N, long prec);

// Kohnen's identities relating K at modulus 4Nc (c odd) to the companion
// sums at Nc (n ≡ 0 mod 4) and to K at modulus 8Nc ((-1)^(k-1/2) n ≡ 1 mod 4).
VerifyReport verify_kohnen(long long N, long long cmax, long long mn_max, double tol);

// Factored Kloosterman zeta against the direct truncated double sum at
// spectral parameter 2, cutoff 1e4, pairs (n,N) = (-3,1), (-4,5), (5,1), (12,7).
VerifyReport verify_prop33(double tol);

}  // namespace kzeta
