#include "kzeta/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kzeta/arith.hpp"
#include "kzeta/class_numbers.hpp"

namespace kzeta {

QSeries::QSeries(long precision) : prec_(precision) {
  if (precision < 1) throw std::invalid_argument("QSeries: precision must be >= 1");
}

BigRational QSeries::at(long n) const {
  if (n < 0 || n >= prec_) throw std::out_of_range("QSeries: index beyond precision");
  auto it = c_.find(n);
  return it == c_.end() ? BigRational(0) : it->second;
}

void QSeries::set(long n, const BigRational& v) {
  if (n < 0 || n >= prec_) throw std::out_of_range("QSeries: index beyond precision");
  if (v == 0)
    c_.erase(n);
  else
    c_[n] = v;
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries r(std::min(prec_, o.prec_));
  for (const auto& [n, v] : c_)
    if (n < r.prec_) r.set(n, v);
  for (const auto& [n, v] : o.c_)
    if (n < r.prec_) r.set(n, r.at(n) + v);
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (o * BigRational(-1)); }

QSeries QSeries::operator*(const BigRational& s) const {
  QSeries r(prec_);
  if (s == 0) return r;
  for (const auto& [n, v] : c_) r.set(n, v * s);
  return r;
}

QSeries QSeries::mul(const QSeries& o) const {
  QSeries r(std::min(prec_, o.prec_));
  for (const auto& [n1, v1] : c_) {
    if (n1 >= r.prec_) break;
    for (const auto& [n2, v2] : o.c_) {
      if (n1 + n2 >= r.prec_) break;
      r.set(n1 + n2, r.at(n1 + n2) + v1 * v2);
    }
  }
  return r;
}

bool QSeries::operator==(const QSeries& o) const {
  long p = std::min(prec_, o.prec_);
  for (long n = 0; n < p; ++n)
    if (at(n) != o.at(n)) return false;
  return true;
}

bool QSeries::support_mod4(int a, int b) const {
  for (const auto& [n, v] : c_) {
    (void)v;
    int r = static_cast<int>(n % 4);
    if (r != a && r != b) return false;
  }
  return true;
}

nlohmann::ordered_json QSeries::to_json() const {
  nlohmann::ordered_json j;
  j["precision"] = prec_;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [n, v] : c_) coeffs[std::to_string(n)] = rat_str(v);
  j["coeffs"] = coeffs;
  return j;
}

std::string QSeries::to_csv() const {
  std::string out = "n,numerator,denominator\n";
  for (const auto& [n, v] : c_) {
    out += std::to_string(n);
    out += ',';
    out += v.get_num().get_str();
    out += ',';
    out += v.get_den().get_str();
    out += '\n';
  }
  return out;
}

QSeries QSeries::from_json(const nlohmann::ordered_json& j) {
  QSeries r(j.at("precision").get<long>());
  for (const auto& [key, val] : j.at("coeffs").items()) {
    BigRational v(val.get<std::string>());
    v.canonicalize();
    r.set(std::stol(key), v);
  }
  return r;
}

TernaryForm::TernaryForm(const std::array<long long, 6>& u) {
  g_[0][0] = u[0];
  g_[0][1] = g_[1][0] = u[1];
  g_[0][2] = g_[2][0] = u[2];
  g_[1][1] = u[3];
  g_[1][2] = g_[2][1] = u[4];
  g_[2][2] = u[5];
  if (g_[0][0] % 2 || g_[1][1] % 2 || g_[2][2] % 2)
    throw std::invalid_argument("TernaryForm: diagonal of the Gram matrix must be even");
  // Positive definiteness via leading principal minors.
  long long m1 = g_[0][0];
  long long m2 = g_[0][0] * g_[1][1] - g_[0][1] * g_[0][1];
  long long m3 = g_[0][0] * (g_[1][1] * g_[2][2] - g_[1][2] * g_[1][2]) -
                 g_[0][1] * (g_[0][1] * g_[2][2] - g_[1][2] * g_[0][2]) +
                 g_[0][2] * (g_[0][1] * g_[1][2] - g_[1][1] * g_[0][2]);
  if (m1 <= 0 || m2 <= 0 || m3 <= 0)
    throw std::invalid_argument("TernaryForm: form is not positive definite");
}

long long TernaryForm::value(long long x, long long y, long long z) const {
  return (g_[0][0] * x * x + g_[1][1] * y * y + g_[2][2] * z * z) / 2 +
         g_[0][1] * x * y + g_[0][2] * x * z + g_[1][2] * y * z;
}

double TernaryForm::min_eigenvalue_half() const {
  // Bisect for the smallest eigenvalue of G: all eigenvalues exceed t iff
  // G - t*I is positive definite (Sylvester's criterion on leading minors).
  auto all_above = [&](double t) {
    double a = g_[0][0] - t, b = g_[1][1] - t, c = g_[2][2] - t;
    double m2 = a * b - static_cast<double>(g_[0][1]) * g_[0][1];
    double m3 = a * (b * c - static_cast<double>(g_[1][2]) * g_[1][2]) -
                g_[0][1] * (g_[0][1] * c - static_cast<double>(g_[1][2]) * g_[0][2]) +
                g_[0][2] * (static_cast<double>(g_[0][1]) * g_[1][2] - b * g_[0][2]);
    return a > 0 && m2 > 0 && m3 > 0;
  };
  double lo = 0.0, hi = static_cast<double>(g_[0][0] + g_[1][1] + g_[2][2]);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (all_above(mid))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * lo;
}

QSeries theta_series(long precision) {
  QSeries r(precision);
  r.set(0, BigRational(1));
  for (long m = 1; m * m < precision; ++m) r.set(m * m, BigRational(2));
  return r;
}

QSeries ternary_theta(const TernaryForm& Q, long precision) {
  QSeries r(precision);
  double lam = Q.min_eigenvalue_half();
  long B = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(precision) / lam))) + 1;
  for (long long x = -B; x <= B; ++x)
    for (long long y = -B; y <= B; ++y)
      for (long long z = -B; z <= B; ++z) {
        long long v = Q.value(x, y, z);
        if (v < precision) r.set(v, r.at(v) + 1);
      }
  return r;
}

QSeries hurwitz_series(long long ell, long long N, long precision) {
  QSeries r(precision);
  for (long n = 0; n < precision; ++n) {
    BigRational v = gen_hurwitz(ell, N, n);
    if (v != 0) r.set(n, v);
  }
  return r;
}

long sturm_bound(long w_twice, long long level) {
  BigRational index(static_cast<long>(level));
  for (const auto& [p, e] : factor(level)) {
    (void)e;
    index *= BigRational(static_cast<long>(p) + 1, static_cast<long>(p));
  }
  BigRational bound = index * BigRational(w_twice, 24);
  BigInt num = bound.get_num(), den = bound.get_den();
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return static_cast<long>(q.get_si());
}

}  // namespace kzeta
