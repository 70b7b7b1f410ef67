#include "kzeta/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kzeta {

int kronecker(long long a, long long b) {
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (((a | b) & 1) == 0) return 0;  // both even
  int k = 1;
  int v = 0;
  while ((b & 1) == 0) {
    b >>= 1;
    ++v;
  }
  if (v & 1) {
    // (a|2) for odd a: +1 iff a ≡ ±1 (mod 8).
    long long a8 = ((a % 8) + 8) % 8;
    if (a8 == 3 || a8 == 5) k = -k;
  }
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  a %= b;
  if (a < 0) a += b;
  // Binary reciprocity loop; b stays odd and positive.
  while (a != 0) {
    int v2 = 0;
    while ((a & 1) == 0) {
      a >>= 1;
      ++v2;
    }
    if (v2 & 1) {
      long long b8 = b % 8;
      if (b8 == 3 || b8 == 5) k = -k;
    }
    if ((a & 3) == 3 && (b & 3) == 3) k = -k;
    long long t = b % a;
    b = a;
    a = t;
  }
  return b == 1 ? k : 0;
}

int moebius(long long n) {
  if (n <= 0) throw std::invalid_argument("moebius: n must be positive");
  int mu = 1;
  for (long long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

int valuation(long long n, long long p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<std::pair<long long, int>> factor(long long n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::invalid_argument("factor: n must be nonzero");
  std::vector<std::pair<long long, int>> f;
  for (long long p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> d{1};
  for (const auto& [p, e] : factor(n)) {
    size_t sz = d.size();
    long long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) d.push_back(d[j] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

bool is_squarefree(long long n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factor(n))
    if (e >= 2) return false;
  return true;
}

long long isqrt(long long n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(long long n) {
  if (n < 0) return false;
  long long r = isqrt(n);
  return r * r == n;
}

DiscriminantSplit decompose_discriminant(long long D) {
  if (D == 0) throw std::invalid_argument("decompose_discriminant: D must be nonzero");
  long long r = ((D % 4) + 4) % 4;
  if (r == 2 || r == 3)
    throw std::invalid_argument("decompose_discriminant: D must be 0 or 1 mod 4");
  long long absd = D < 0 ? -D : D;
  long long core = 1, f = 1;
  for (const auto& [p, e] : factor(absd)) {
    if (e & 1) core *= p;
    for (int i = 0; i < e / 2; ++i) f *= p;
  }
  long long t0 = D < 0 ? -core : core;
  if (((t0 % 4) + 4) % 4 == 1) return {t0, f};
  // t0 ≡ 2, 3 mod 4: the fundamental discriminant is 4*t0 and f is even.
  return {4 * t0, f / 2};
}

bool is_fundamental_discriminant(long long D) {
  if (D == 0) return false;
  long long r = ((D % 4) + 4) % 4;
  if (r == 2 || r == 3) return false;
  return decompose_discriminant(D).m == 1;
}

std::vector<int32_t> spf_sieve(long long limit) {
  std::vector<int32_t> spf(limit + 1, 0);
  for (long long i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      for (long long j = i; j <= limit; j += i)
        if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
    }
  }
  return spf;
}

std::vector<long long> primes_up_to(long long limit) {
  std::vector<long long> primes;
  if (limit < 2) return primes;
  std::vector<bool> comp(limit + 1, false);
  for (long long i = 2; i <= limit; ++i) {
    if (!comp[i]) {
      primes.push_back(i);
      for (long long j = i * i; j <= limit; j += i) comp[j] = true;
    }
  }
  return primes;
}

BigRational euler_factor_local(long long t, long s, long long p) {
  return BigRational(1) -
         BigRational(kronecker(t, p)) * pow_int(BigRational(static_cast<long>(p)), -s);
}

BigRational euler_factor(long long t, long s, long long level) {
  BigRational prod(1);
  for (const auto& [p, e] : factor(level)) {
    (void)e;
    prod *= euler_factor_local(t, s, p);
  }
  return prod;
}

}  // namespace kzeta
