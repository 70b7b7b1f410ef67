#pragma once

#include <complex>

namespace kzeta {

// Inverse of a mod m (m >= 1, gcd(a, m) = 1).
long long inv_mod(long long a, long long m);

// Half-integral weight Kloosterman sum in Kohnen's normalization, for
// weight k = two_k/2 (two_k in {1, 3}) and 4 | c:
//   K_k(m,n;c) = (1/c) sum_{r mod c, gcd(r,c)=1}
//                  (c|r) eps_r^{2k} e((m r^* + n r)/c),
// where r r^* ≡ 1 (mod c) and eps_r = 1 or i as r ≡ 1 or 3 (mod 4).
std::complex<double> kloosterman(int two_k, long long m, long long n, long long c);

// Companion sum at odd modulus M:
//   ((-1)^(k-1/2) i / 4) * (4|-M) * eps_M^(-2k)
//     * sum_{r mod M} (r|M) e((m (4r)^* + n r)/M).
std::complex<double> modified_kloosterman(int two_k, long long m, long long n, long long M);

// Direct truncation of the Kloosterman zeta attached to level N at spectral
// parameter s (the Dirichlet series argument is s + 1/2):
//   (sum_{c <= C} + sum_{c <= C odd}) K_{1/2}(0,n;4Nc) / (4Nc)^(s - 1/2).
// Deliberately evaluates every sum term-by-term -- this is the oracle the
// factored evaluation is checked against.
std::complex<double> kz_truncated(long long n, long long N, double s, long long cutoff);

}  // namespace kzeta
