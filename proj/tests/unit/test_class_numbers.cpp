#include "doctest.h"
#include "kzeta/class_numbers.hpp"
#include "kzeta/rational.hpp"

using namespace kzeta;

TEST_CASE("pinned Hurwitz class numbers") {
  CHECK(hurwitz(0) == rat(-1, 12));
  CHECK(hurwitz(3) == rat(1, 3));
  CHECK(hurwitz(4) == rat(1, 2));
  CHECK(hurwitz(7) == rat(1));
  CHECK(hurwitz(8) == rat(1));
  CHECK(hurwitz(11) == rat(1));
  CHECK(hurwitz(12) == rat(4, 3));
  CHECK(hurwitz(15) == rat(2));
  CHECK(hurwitz(16) == rat(3, 2));
  CHECK(hurwitz(19) == rat(1));
  CHECK(hurwitz(20) == rat(2));
  CHECK(hurwitz(23) == rat(3));
  CHECK(hurwitz(27) == rat(4, 3));
  CHECK(hurwitz(63) == rat(5));
  // Support: nothing at 1, 2 mod 4.
  CHECK(hurwitz(1) == rat(0));
  CHECK(hurwitz(2) == rat(0));
  CHECK(hurwitz(5) == rat(0));
  CHECK(hurwitz(2026) == rat(0));
  CHECK_THROWS(hurwitz(-4));
}

TEST_CASE("closed form equals the reduced-form enumeration") {
  for (long long n = 0; n <= 600; ++n) {
    CAPTURE(n);
    REQUIRE(hurwitz(n) == hurwitz_oracle(n));
  }
}

TEST_CASE("12 H(n) is a nonnegative integer") {
  for (long long n = 0; n <= 600; ++n) {
    BigRational v = hurwitz(n) * rat(12);
    CAPTURE(n);
    REQUIRE(v.get_den() == 1);
    if (n > 0) REQUIRE(v >= 0);
  }
}

TEST_CASE("generalized class numbers specialize to H at level 1") {
  for (long long n = 0; n <= 200; ++n) {
    CAPTURE(n);
    REQUIRE(gen_hurwitz(1, 1, n) == hurwitz(n));
  }
}

TEST_CASE("pinned generalized class numbers at level 5") {
  // Constant terms: only ell = N survives.
  CHECK(gen_hurwitz(5, 5, 0) == rat(1, 3));
  CHECK(gen_hurwitz(1, 5, 0) == rat(0));
  CHECK(gen_hurwitz(1, 5, 3) == rat(5, 12));
  CHECK(gen_hurwitz(5, 5, 3) == rat(2, 3));
  // 3 H_{5,5} has theta-series coefficients; at n = 7 the count is 6.
  CHECK(gen_hurwitz(5, 5, 7) == rat(2));
  CHECK(gen_hurwitz(5, 5, 1) == rat(0));
  CHECK(gen_hurwitz(5, 5, 2) == rat(0));
}

TEST_CASE("generalized class numbers validate their arguments") {
  CHECK_THROWS(gen_hurwitz(2, 6, 3));   // N even
  CHECK_THROWS(gen_hurwitz(3, 9, 3));   // N not squarefree
  CHECK_THROWS(gen_hurwitz(2, 15, 3));  // ell does not divide N
  CHECK_THROWS(gen_hurwitz(5, 5, -3));
}

TEST_CASE("divisor sums with coprimality constraints") {
  CHECK(sigma_coprime(1, 6) == 12);
  CHECK(sigma_coprime(2, 6) == 4);   // 1 + 3
  CHECK(sigma_coprime(3, 6) == 3);   // 1 + 2
  CHECK(sigma_coprime(6, 6) == 1);
  // sigma_{ell,N}: d | r with gcd(d, ell) = 1 and gcd(r/d, N/ell) = 1.
  CHECK(sigma_ell(1, 1, 12) == 28);
  CHECK(sigma_ell(5, 5, 10) == 3);   // d in {1, 2}
  CHECK(sigma_ell(1, 5, 10) == 15);  // d in {5, 10}: r/d coprime to 5
  CHECK(sigma_ell(3, 15, 6) == 3);   // d with 3∤d, gcd(6/d, 5) = 1: d in {1, 2}
}
