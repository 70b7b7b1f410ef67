#pragma once

#include <array>
#include <map>
#include <string>

#include "json.hpp"
#include "kzeta/rational.hpp"

namespace kzeta {

// Sparse exact q-expansion sum_n c(n) q^n, tracked for 0 <= n < precision().
class QSeries {
 public:
  explicit QSeries(long precision);

  long precision() const { return prec_; }
  BigRational at(long n) const;  // 0 off the support; throws for n >= precision
  void set(long n, const BigRational& v);

  QSeries operator+(const QSeries& o) const;  // precision = min of the two
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const BigRational& s) const;
  QSeries mul(const QSeries& o) const;
  bool operator==(const QSeries& o) const;  // equal coefficients on min precision

  // True when every nonzero coefficient sits in residue class a or b mod 4.
  bool support_mod4(int a, int b) const;

  const std::map<long, BigRational>& coeffs() const { return c_; }

  // {"precision": P, "coeffs": {"n": "p/q", ...}} with keys ascending.
  nlohmann::ordered_json to_json() const;
  // Header "n,numerator,denominator" then one row per nonzero coefficient.
  std::string to_csv() const;
  static QSeries from_json(const nlohmann::ordered_json& j);

 private:
  long prec_;
  std::map<long, BigRational> c_;
};

// Positive-definite ternary quadratic form Q(x) = (1/2) x^T G x with integer
// symmetric Gram matrix G, even diagonal.
class TernaryForm {
 public:
  // Upper-triangular entries g11, g12, g13, g22, g23, g33.
  TernaryForm(const std::array<long long, 6>& upper);

  long long gram(int i, int j) const { return g_[i][j]; }
  long long value(long long x, long long y, long long z) const;
  // Smallest eigenvalue of G/2 (bisection on the characteristic polynomial).
  double min_eigenvalue_half() const;

 private:
  long long g_[3][3];
};

// Theta series of x^2: 1 + 2 sum_{m >= 1} q^(m^2).
QSeries theta_series(long precision);

// Representation numbers of the ternary form: sum_x q^(Q(x)).
QSeries ternary_theta(const TernaryForm& Q, long precision);

// sum_n H_{ell,N}(n) q^n.
QSeries hurwitz_series(long long ell, long long N, long precision);

// Sturm bound floor(w/12 * [SL2(Z) : Gamma0(level)]) for weight w given as
// w_twice/2; the index is level * prod_{p|level} (1 + 1/p).
long sturm_bound(long w_twice, long long level);

}  // namespace kzeta
