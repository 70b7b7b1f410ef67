#include <cmath>
#include <complex>
#include <numeric>

#include "doctest.h"
#include "kzeta/kloosterman.hpp"

using namespace kzeta;

namespace {
const std::complex<double> I(0.0, 1.0);
bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-12) {
  return std::abs(a - b) < tol;
}
}  // namespace

TEST_CASE("modular inverse") {
  CHECK(inv_mod(3, 10) == 7);
  CHECK(inv_mod(1, 1) == 0);
  CHECK(inv_mod(-3, 10) == 3);
  CHECK(inv_mod(7, 4) == 3);
  CHECK_THROWS(inv_mod(2, 4));
  CHECK_THROWS(inv_mod(5, 0));
  for (long long m : {5, 12, 101}) {
    for (long long a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      CAPTURE(m);
      CAPTURE(a);
      REQUIRE(a * inv_mod(a, m) % m == 1);
    }
  }
}

TEST_CASE("hand-evaluated Kloosterman sums at modulus 4") {
  CHECK(close(kloosterman(1, 0, 0, 4), (1.0 + I) / 4.0));
  CHECK(close(kloosterman(1, 0, 1, 4), (1.0 + I) / 4.0));
  CHECK(close(kloosterman(1, 0, 2, 4), (-1.0 - I) / 4.0));
  CHECK(close(kloosterman(1, 0, 3, 4), (-1.0 - I) / 4.0));
  CHECK_THROWS(kloosterman(1, 0, 0, 6));
  CHECK_THROWS(kloosterman(2, 0, 0, 4));
}

TEST_CASE("weights 1/2 and 3/2 are related by negation of the indices") {
  for (long long c : {4, 8, 12, 20, 28, 44}) {
    for (long long m : {-5, 0, 1, 3}) {
      for (long long n : {-2, 0, 1, 7}) {
        CAPTURE(c);
        CAPTURE(m);
        CAPTURE(n);
        REQUIRE(close(kloosterman(3, m, n, c), -I * kloosterman(1, -m, -n, c), 1e-10));
      }
    }
  }
}

TEST_CASE("Kloosterman sums are periodic in m and n") {
  for (long long c : {4, 12}) {
    CHECK(close(kloosterman(1, 3, 5, c), kloosterman(1, 3 + c, 5 - 2 * c, c)));
    CHECK(close(kloosterman(3, -1, 2, c), kloosterman(3, c - 1, 2 + c, c)));
  }
}

TEST_CASE("modified Kloosterman sum: trivial modulus and small checks") {
  CHECK(close(modified_kloosterman(1, 0, 0, 1), 0.25 * I));
  CHECK(close(modified_kloosterman(3, 0, 0, 1), -0.25 * I));
  // Kohnen's identity instance: K_{1/2}(0, 4; 4) = (1 - i) K'(0, 1; 1).
  CHECK(close(kloosterman(1, 0, 4, 4), (1.0 - I) * modified_kloosterman(1, 0, 1, 1)));
  CHECK_THROWS(modified_kloosterman(1, 0, 0, 2));
}

TEST_CASE("truncated zeta equals the assembled Kloosterman sums") {
  const double s = 2.0;
  for (long long N : {1, 5}) {
    for (long long n : {-4, 0, 5, 12}) {
      std::complex<double> manual = 0.0;
      for (long long c = 1; c <= 6; ++c) {
        long long cp = 4 * N * c;
        double mult = (c % 2 == 1) ? 2.0 : 1.0;
        manual += mult * kloosterman(1, 0, n, cp) * std::pow(cp, 1.0 - (s + 0.5));
      }
      CAPTURE(N);
      CAPTURE(n);
      REQUIRE(close(kz_truncated(n, N, s, 6), manual, 1e-12));
    }
  }
}

TEST_CASE("truncated zeta: the incremental rotation stays accurate at larger moduli") {
  // One larger cutoff, compared against the direct per-term evaluation.
  const double s = 2.0;
  const long long N = 1, n = 5, C = 40;
  std::complex<double> manual = 0.0;
  for (long long c = 1; c <= C; ++c) {
    long long cp = 4 * N * c;
    double mult = (c % 2 == 1) ? 2.0 : 1.0;
    manual += mult * kloosterman(1, 0, n, cp) * std::pow(cp, 1.0 - (s + 0.5));
  }
  CHECK(close(kz_truncated(n, N, s, C), manual, 1e-10));
}
