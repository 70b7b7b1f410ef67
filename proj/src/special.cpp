#include "kzeta/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kzeta/arith.hpp"
#include "kzeta/class_numbers.hpp"
#include "kzeta/local.hpp"
#include "kzeta/rational.hpp"

namespace kzeta {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// erfcx(x) = e^(x^2) erfc(x) for x >= 0: direct product while e^(x^2) is
// representable and erfc has not underflowed, else the asymptotic series
// erfcx(x) ~ (1/(x sqrt pi)) sum (-1)^k (2k-1)!!/(2x^2)^k.
double erfcx_pos(double x) {
  if (x * x <= 30.0) return std::exp(x * x) * std::erfc(x);
  double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 12; ++k) {
    term *= -(2 * k - 1) * inv2x2;
    sum += term;
    if (std::abs(term) < 1e-17) break;
  }
  return sum / (x * kSqrtPi);
}

// 15-point Kronrod / 7-point Gauss pair (standard abscissae and weights).
const double xgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                       0.741531185599394, 0.586087235467691, 0.405845151377397,
                       0.207784955007898, 0.0};
const double wgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                       0.140653259715525, 0.169004726639267, 0.190350578064785,
                       0.204432940075298, 0.209482141084728};
const double wg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                      0.417959183673469};

template <typename F>
void gk15(const F& f, double a, double b, double* result, double* err) {
  double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  double fc = f(c);
  double resg = fc * wg[3], resk = fc * wgk[7];
  for (int j = 0; j < 7; ++j) {
    double x = hw * xgk[j];
    double fsum = f(c - x) + f(c + x);
    resk += wgk[j] * fsum;
    if (j % 2 == 1) resg += wg[j / 2] * fsum;
  }
  *result = resk * hw;
  *err = std::abs((resk - resg) * hw);
}

template <typename F>
double quad_adaptive(const F& f, double a, double b, double tol, int depth = 0) {
  double r, e;
  gk15(f, a, b, &r, &e);
  // Accept on tolerance, when the estimate is at roundoff relative to the
  // local value (the halved tolerances would otherwise demand sub-eps
  // accuracy and force full-depth recursion), or at depth 24.
  if (e <= tol || e <= 1e-15 * std::abs(r) || depth >= 24) return r;
  double c = 0.5 * (a + b);
  return quad_adaptive(f, a, c, 0.5 * tol, depth + 1) +
         quad_adaptive(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace

double incomplete_gamma(int two_s, double y) {
  if (two_s == 1) {
    if (y < 0) throw std::invalid_argument("incomplete_gamma: y must be >= 0");
    return kSqrtPi * std::erfc(std::sqrt(y));
  }
  if (two_s == -1) {
    if (y <= 0) throw std::invalid_argument("incomplete_gamma: y must be > 0 for s = -1/2");
    return 2.0 * (std::exp(-y) / std::sqrt(y) - kSqrtPi * std::erfc(std::sqrt(y)));
  }
  throw std::invalid_argument("incomplete_gamma: order must be +-1/2");
}

double incomplete_gamma_mhalf_scaled(double y) {
  if (y <= 0) throw std::invalid_argument("incomplete_gamma_mhalf_scaled: y must be > 0");
  return 2.0 / std::sqrt(y) - 2.0 * kSqrtPi * erfcx_pos(std::sqrt(y));
}

double incomplete_gamma_half_scaled_half(double y) {
  if (y < 0) throw std::invalid_argument("incomplete_gamma_half_scaled_half: y must be >= 0");
  // sqrt(pi) erfc(sqrt y) e^(y/2) = sqrt(pi) erfcx(sqrt y) e^(-y/2).
  return kSqrtPi * erfcx_pos(std::sqrt(y)) * std::exp(-0.5 * y);
}

double alpha(double y) {
  if (y <= 0) throw std::invalid_argument("alpha: y must be > 0");
  // [0,1]: t = w^2 removes the endpoint singularity.
  auto g1 = [&](double w) { return std::log1p(w * w) * std::exp(-kPi * y * w * w); };
  // [1,T]: plain integrand, T far enough that the tail is below 1e-16.
  auto g2 = [&](double t) {
    return std::log1p(t) * std::exp(-kPi * y * t) / std::sqrt(t);
  };
  double T = std::max(2.0, 48.0 / (kPi * y));
  double I = 2.0 * quad_adaptive(g1, 0.0, 1.0, 1e-13) +
             quad_adaptive(g2, 1.0, T, 1e-13);
  return std::sqrt(y) * I;
}

double alpha_via_gamma(double y) {
  if (y <= 0) throw std::invalid_argument("alpha_via_gamma: y must be > 0");
  // Integrand t^(-1/2) Gamma(-1/2,t) e^t = 2/t - (2 sqrt(pi)/sqrt t) erfcx(sqrt t),
  // which decays like t^(-2); integrate to T and add the asymptotic tail.
  auto h = [&](double t) {
    double rt = std::sqrt(t);
    return 2.0 / t - 2.0 * kSqrtPi * erfcx_pos(rt) / rt;
  };
  double a = kPi * y;
  double T = std::max(300.0, 2.0 * a);
  double I = quad_adaptive(h, a, T, 1e-13);
  // int_T^inf h: h ~ sum_k (-1)^(k+1) (2k-1)!! 2 / (2^k t^(k+1)).
  double tail = 0.0, dfac = 1.0;
  for (int k = 1; k <= 6; ++k) {
    dfac *= (2 * k - 1);
    double term = 2.0 * dfac / (std::pow(2.0, k) * k * std::pow(T, k));
    tail += (k % 2 == 1) ? term : -term;
  }
  return 0.5 * (I + tail);
}

std::complex<double> eval_zagier_H(Tau tau, long prec) {
  if (tau.v <= 0) throw std::invalid_argument("eval_zagier_H: requires v > 0");
  const double v = tau.v;
  // Holomorphic tail estimate: |H(n)| <= n for n >= 1.
  double rho = std::exp(-2.0 * kPi * v);
  double tail = prec * std::pow(rho, static_cast<double>(prec)) / (1.0 - rho);
  if (!(tail < 1e-8))
    throw std::domain_error("eval_zagier_H: truncation tail exceeds 1e-8 at this point");

  std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) *
                                    std::complex<double>(tau.u, tau.v));
  std::complex<double> val = -1.0 / 12.0;
  std::complex<double> qn = 1.0;
  for (long n = 1; n < prec; ++n) {
    qn *= q;
    if (n % 4 == 0 || n % 4 == 3) val += to_double(hurwitz(n)) * qn;
  }
  val += 1.0 / (8.0 * kPi * std::sqrt(v));
  for (long n = 1;; ++n) {
    // Gamma(-1/2, 4 pi n^2 v) q^(-n^2) = scaled * e^(-2 pi n^2 v) e(-n^2 u).
    double t = 4.0 * kPi * n * n * v;
    double mag = incomplete_gamma_mhalf_scaled(t) * std::exp(-2.0 * kPi * n * n * v);
    if (n * std::abs(mag) < 1e-18 && n > 2) break;
    double ang = -2.0 * kPi * n * n * tau.u;
    val += (n / (4.0 * kSqrtPi)) * mag * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return val;
}

std::complex<double> theta_eval(Tau tau) {
  std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) *
                                    std::complex<double>(tau.u, tau.v));
  std::complex<double> val = 1.0;
  for (long m = 1;; ++m) {
    std::complex<double> term = std::pow(q, static_cast<double>(m) * m);
    val += 2.0 * term;
    if (std::abs(term) < 1e-18) break;
  }
  return val;
}

std::complex<double> eval_G(Tau tau, long long N, long prec) {
  if (tau.v <= 0) throw std::invalid_argument("eval_G: requires v > 0");
  const double v = tau.v;
  double P = 1.0;
  for (const auto& [p, e] : factor(N)) {
    (void)e;
    P /= static_cast<double>(p) + 1.0;
  }
  std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * kPi) *
                                    std::complex<double>(tau.u, tau.v));
  std::complex<double> val = (2.0 / 3.0) * std::sqrt(v) - std::log(16.0 * v) / (2.0 * kPi) * P;
  for (long m = 1; m * m < prec; ++m) {
    val += (P / kPi) * (EULER_GAMMA + std::log(kPi * m * m) + alpha(4.0 * m * m * v)) *
           std::pow(q, static_cast<double>(m) * m);
  }
  const std::complex<double> one_minus_i(1.0, -1.0);
  for (long n = 0; n < prec; ++n) {
    if (n % 4 > 1) continue;
    std::complex<double> c = c_frak(n, N).approx;
    val += (2.0 / 3.0) * one_minus_i * kPi * c * std::pow(q, static_cast<double>(n));
  }
  for (long n = -1; n > -prec; --n) {
    if (((n % 4) + 4) % 4 > 1) continue;
    std::complex<double> c = c_frak(n, N).approx;
    // Gamma(1/2, 4pi|n|v) q^n: |q^n| = e^(t/2) with t = 4pi|n|v, so the
    // product is exactly the half-scaled gamma -- no overflow.
    double t = 4.0 * kPi * std::abs(n) * v;
    double mag = incomplete_gamma_half_scaled_half(t);
    double ang = 2.0 * kPi * n * tau.u;
    val += (2.0 / 3.0) * one_minus_i * kSqrtPi * c * mag *
           std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return val;
}

std::complex<double> xi_operator_fd(const std::function<std::complex<double>(Tau)>& f,
                                    double k, Tau tau, double h) {
  auto xi_at = [&](double step) {
    std::complex<double> fu =
        (f({tau.u + step, tau.v}) - f({tau.u - step, tau.v})) / (2.0 * step);
    std::complex<double> fv =
        (f({tau.u, tau.v + step}) - f({tau.u, tau.v - step})) / (2.0 * step);
    std::complex<double> dbar = 0.5 * (fu + std::complex<double>(0.0, 1.0) * fv);
    return 2.0 * std::complex<double>(0.0, 1.0) * std::pow(tau.v, k) * std::conj(dbar);
  };
  std::complex<double> d1 = xi_at(h), d2 = xi_at(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;  // Richardson: error h^2 -> h^4
}

}  // namespace kzeta
