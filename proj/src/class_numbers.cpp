#include "kzeta/class_numbers.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "kzeta/arith.hpp"
#include "kzeta/lfunctions.hpp"

namespace kzeta {

long long sigma_coprime(long long N, long long r) {
  long long s = 0;
  for (long long d : divisors(r))
    if (std::gcd(d, N) == 1) s += d;
  return s;
}

long long sigma_ell(long long ell, long long N, long long r) {
  long long s = 0;
  for (long long d : divisors(r))
    if (std::gcd(d, ell) == 1 && std::gcd(r / d, N / ell) == 1) s += d;
  return s;
}

static void check_level(long long ell, long long N) {
  if (N < 1 || N % 2 == 0 || !is_squarefree(N))
    throw std::invalid_argument("gen_hurwitz: N must be odd and squarefree");
  if (ell < 1 || N % ell != 0)
    throw std::invalid_argument("gen_hurwitz: ell must divide N");
}

BigRational gen_hurwitz(long long ell, long long N, long long n) {
  check_level(ell, N);
  if (n < 0) throw std::invalid_argument("gen_hurwitz: n must be nonnegative");
  if (n == 0) {
    if (ell != N) return BigRational(0);
    BigRational v = zeta_minus_one();
    for (const auto& [p, e] : factor(N)) {
      (void)e;
      v *= BigRational(1 - static_cast<long>(p));
    }
    return v;
  }
  long long r4 = n % 4;
  if (r4 == 1 || r4 == 2) return BigRational(0);

  auto [t, m] = decompose_discriminant(-n);
  BigRational value = l_chi_zero(t) * euler_factor(t, 0, ell);
  for (const auto& [p, e] : factor(N / ell)) {
    (void)e;
    value *= euler_factor_local(t, 1, p) / euler_factor_local(1, 2, p);
  }
  BigRational s(0);
  for (long long a : divisors(m)) {
    if (std::gcd(a, N) != 1) continue;
    int mu = moebius(a);
    if (mu == 0) continue;
    s += BigRational(mu * kronecker(t, a)) *
         BigRational(static_cast<long>(sigma_ell(ell, N, m / a)));
  }
  return value * s;
}

BigRational hurwitz(long long n) {
  static std::map<long long, BigRational> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  BigRational v = gen_hurwitz(1, 1, n);
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(n, std::move(v)).first->second;
}

BigRational hurwitz_oracle(long long n) {
  if (n < 0) throw std::invalid_argument("hurwitz_oracle: n must be nonnegative");
  if (n == 0) return rat(-1, 12);
  long long r4 = n % 4;
  if (r4 == 1 || r4 == 2) return BigRational(0);
  BigRational total(0);
  for (long long b = (n & 1) ? 1 : 0; 3 * b * b <= n; b += 2) {
    long long M = (n + b * b) / 4;
    for (long long a : divisors(M)) {
      if (a * a > M) break;
      if (a < b || a < 1) continue;
      long long c = M / a;
      if (b == 0)
        total += (a == c) ? rat(1, 2) : BigRational(1);
      else if (a == b)
        total += (a == c) ? rat(1, 3) : BigRational(1);
      else
        total += (a == c) ? BigRational(1) : BigRational(2);
    }
  }
  return total;
}

}  // namespace kzeta
