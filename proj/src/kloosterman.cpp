#include "kzeta/kloosterman.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "kzeta/arith.hpp"

namespace kzeta {

long long inv_mod(long long a, long long m) {
  if (m < 1) throw std::invalid_argument("inv_mod: modulus must be positive");
  if (m == 1) return 0;
  long long r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw std::invalid_argument("inv_mod: argument not invertible");
  return ((t0 % m) + m) % m;
}

static std::complex<double> eps_pow(long long r, int two_k) {
  // eps_r^(2k): eps_r = 1 (r ≡ 1 mod 4) or i (r ≡ 3 mod 4); i^3 = -i.
  if ((r & 3) == 1) return {1.0, 0.0};
  return two_k == 1 ? std::complex<double>(0.0, 1.0) : std::complex<double>(0.0, -1.0);
}

std::complex<double> kloosterman(int two_k, long long m, long long n, long long c) {
  if (two_k != 1 && two_k != 3) throw std::invalid_argument("kloosterman: weight must be 1/2 or 3/2");
  if (c <= 0 || c % 4 != 0) throw std::invalid_argument("kloosterman: modulus must be positive, 4 | c");
  const double w = 2.0 * std::numbers::pi / static_cast<double>(c);
  long long mm = ((m % c) + c) % c, nn = ((n % c) + c) % c;
  std::complex<double> sum = 0.0;
  for (long long r = 1; r < c; r += 2) {
    if (std::gcd(r, c) != 1) continue;
    long long rinv = inv_mod(r, c);
    long long ph = (mm * rinv + nn * r) % c;
    double ang = w * static_cast<double>(ph);
    sum += static_cast<double>(kronecker(c, r)) * eps_pow(r, two_k) *
           std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return sum / static_cast<double>(c);
}

std::complex<double> modified_kloosterman(int two_k, long long m, long long n, long long M) {
  if (two_k != 1 && two_k != 3)
    throw std::invalid_argument("modified_kloosterman: weight must be 1/2 or 3/2");
  if (M < 1 || M % 2 == 0)
    throw std::invalid_argument("modified_kloosterman: modulus must be odd and positive");
  const int sgn = two_k == 1 ? 1 : -1;  // (-1)^(k - 1/2)
  // eps_M^(-2k): for 2k = 1 the inverse of eps_M, for 2k = 3 eps_M itself.
  std::complex<double> eps = (M & 3) == 1 ? std::complex<double>(1.0, 0.0)
                                          : std::complex<double>(0.0, 1.0);
  std::complex<double> epsfac = two_k == 1 ? std::conj(eps) : eps;
  std::complex<double> front =
      std::complex<double>(0.0, 0.25 * sgn) * static_cast<double>(kronecker(4, -M)) * epsfac;
  if (M == 1) return front;  // single residue class, symbol and phase both 1
  const double w = 2.0 * std::numbers::pi / static_cast<double>(M);
  long long mm = ((m % M) + M) % M, nn = ((n % M) + M) % M;
  std::complex<double> sum = 0.0;
  for (long long r = 1; r < M; ++r) {
    int chi = kronecker(r, M);
    if (chi == 0) continue;
    long long rinv4 = inv_mod(4 * r % M, M);
    long long ph = (mm * rinv4 + nn * r) % M;
    double ang = w * static_cast<double>(ph);
    sum += static_cast<double>(chi) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return front * sum;
}

std::complex<double> kz_truncated(long long n, long long N, double s, long long cutoff) {
  if (N < 1 || cutoff < 1) throw std::invalid_argument("kz_truncated: bad parameters");
  const long long top = 4 * N * cutoff;
  static thread_local std::vector<int32_t> spf;
  if (static_cast<long long>(spf.size()) <= top) spf = spf_sieve(top);

  std::vector<int8_t> chi;  // reused per modulus
  chi.reserve(top);
  std::complex<double> total = 0.0;
  const double sexp = s + 0.5;

  for (long long c = 1; c <= cutoff; ++c) {
    const long long cp = 4 * N * c;
    chi.assign(cp, 0);
    chi[1] = 1;
    for (long long r = 2; r < cp; ++r) {
      int32_t p = spf[r];
      chi[r] = (p == r) ? static_cast<int8_t>(kronecker(cp, r))
                        : static_cast<int8_t>(chi[p] * chi[r / p]);
    }
    // sum_{r odd mod cp} (cp|r) eps_r e(n r / cp), accumulated as S1 + i*S3
    // over the classes r ≡ 1, 3 (mod 4).
    const long long k = ((n % cp) + cp) % cp;
    const double w = 2.0 * std::numbers::pi / static_cast<double>(cp);
    const std::complex<double> step(std::cos(2.0 * w * k), std::sin(2.0 * w * k));
    std::complex<double> z(std::cos(w * k), std::sin(w * k));  // e(n*1/cp)
    std::complex<double> s1 = 0.0, s3 = 0.0;
    for (long long r = 1; r < cp; r += 2) {
      if (chi[r]) {
        if ((r & 3) == 1)
          s1 += static_cast<double>(chi[r]) * z;
        else
          s3 += static_cast<double>(chi[r]) * z;
      }
      if ((r & 4095) == 4095) {
        long long ph = (r + 2) % cp * k % cp;
        z = {std::cos(w * static_cast<double>(ph)), std::sin(w * static_cast<double>(ph))};
      } else {
        z *= step;
      }
    }
    std::complex<double> K = (s1 + std::complex<double>(0.0, 1.0) * s3) / static_cast<double>(cp);
    double weight = (1.0 + ((c & 1) ? 1.0 : 0.0)) * std::pow(static_cast<double>(cp), 1.0 - sexp);
    total += K * weight;
  }
  return total;
}

}  // namespace kzeta
