#pragma once

#include "kzeta/arith.hpp"
#include "kzeta/monomial.hpp"
#include "kzeta/rational.hpp"

namespace kzeta {

// L(0, chi_t) for a fundamental discriminant t, as the finite character sum
// -(1/|t|) * sum_{a=1}^{|t|} (t|a) * a.  For t = 1 this is zeta(0) = -1/2.
BigRational l_chi_zero(long long t);

// zeta(-1) = -1/12.
BigRational zeta_minus_one();

// L_level(0, chi_t) = L(0, chi_t) * prod_{p|level}(1 - chi_t(p)).
BigRational l_incomplete_zero_exact(long long t, long long level);

// L(1, chi_t) for t < 0 fundamental, exactly: pi * |t|^(-1/2) * L(0, chi_t).
MonomialValue l_one_exact(long long t);

// L(1, chi_t) for t > 1 fundamental, via the finite log-sine sum
// -(1/sqrt t) * sum_{a=1}^{t-1} (t|a) * log(2*sin(pi*a/t)).
double l_one_numeric(long long t);

// Plain Dirichlet partial sum with an a-priori tail estimate; the oracle
// against which the sharper evaluators are sanity-checked.
struct LNumeric {
  double value;
  double tail;  // bound terms^(1-s)/(s-1) on the dropped remainder
};
LNumeric l_numeric(long long t, double s, long terms);

// Hurwitz zeta sum_{k>=0} (k+a)^(-x) by Euler-Maclaurin; valid for x > 0,
// x != 1, 0 < a <= 1.  Accurate to ~1e-13 absolute.
double hurwitz_zeta_em(double x, double a);

// Riemann zeta via the same expansion (x > 0, x != 1).
double zeta_em(double x);

// L(x, chi_t) numerically, decomposing over residues mod |t| into Hurwitz
// zetas; handles x near 1 (t != 1) where raw partial sums are useless.
double l_chi_em(long long t, double x);

// L_level(x, chi_t) = L(x, chi_t) * prod_{p|level}(1 - chi_t(p) p^(-x)).
double l_incomplete_em(long long t, double x, long long level);

}  // namespace kzeta
