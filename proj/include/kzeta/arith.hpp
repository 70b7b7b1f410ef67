#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kzeta/rational.hpp"

namespace kzeta {

// Kronecker symbol (a|b), extended to all integers: completely multiplicative
// in both arguments, (a|2) = 0 for even a and (-1)^((a^2-1)/8) for odd a,
// (a|-1) = sign of a (taken as +1 for a = 0), and (a|0) = 1 iff |a| = 1.
int kronecker(long long a, long long b);

// Moebius function of n >= 1.
int moebius(long long n);

// Exponent of the prime p in n (n != 0).
int valuation(long long n, long long p);

// Prime factorization of |n| as (prime, exponent) pairs, ascending.
std::vector<std::pair<long long, int>> factor(long long n);

// All positive divisors of |n|, ascending.
std::vector<long long> divisors(long long n);

bool is_squarefree(long long n);

// Largest integer r with r^2 <= n.
long long isqrt(long long n);

bool is_perfect_square(long long n);

// Splits a discriminant D (D ≡ 0, 1 mod 4, D != 0) as D = t * m^2 with t a
// fundamental discriminant.  Positive perfect squares yield t = 1, so that
// the Kronecker character (t|.) is the trivial one.
struct DiscriminantSplit {
  long long t;
  long long m;
};
DiscriminantSplit decompose_discriminant(long long D);

bool is_fundamental_discriminant(long long D);

// Smallest-prime-factor table for 0..limit (spf[0] = spf[1] = 0).
std::vector<int32_t> spf_sieve(long long limit);

std::vector<long long> primes_up_to(long long limit);

// 1 - chi_t(p) * p^(-s) for integer s; chi_t = Kronecker (t|.).
BigRational euler_factor_local(long long t, long s, long long p);

// prod_{p | level} (1 - chi_t(p) p^(-s)), the factor converting an L-value
// into its level-incomplete counterpart L_level(s, chi_t).
BigRational euler_factor(long long t, long s, long long level);

}  // namespace kzeta
