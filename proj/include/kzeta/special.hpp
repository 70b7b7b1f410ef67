#pragma once

#include <complex>
#include <functional>

namespace kzeta {

// Euler-Mascheroni constant (30 digits).
inline constexpr double EULER_GAMMA = 0.577215664901532860606512090082;

// Upper incomplete gamma Gamma(s, y) for the two half-integral orders used
// here: two_s = 1 (s = 1/2) and two_s = -1 (s = -1/2); y > 0 (y >= 0 for
// s = 1/2).  Built on erfc: Gamma(1/2, y) = sqrt(pi) erfc(sqrt y), and the
// recurrence Gamma(1/2, y) = -(1/2) Gamma(-1/2, y) + e^(-y)/sqrt(y).
double incomplete_gamma(int two_s, double y);

// e^y * Gamma(-1/2, y), stable for large y (erfcx asymptotics).
double incomplete_gamma_mhalf_scaled(double y);

// e^(y/2) * Gamma(1/2, y), likewise overflow-free.
double incomplete_gamma_half_scaled_half(double y);

// alpha(y) = sqrt(y) * int_0^inf log(t+1) t^(-1/2) e^(-pi y t) dt, by
// adaptive Gauss-Kronrod quadrature with the substitution t = w^2 on [0, 1].
double alpha(double y);

// The same value through the incomplete gamma:
// alpha(y) = (1/2) int_{pi y}^inf t^(-1/2) Gamma(-1/2, t) e^t dt.
double alpha_via_gamma(double y);

struct Tau {
  double u;
  double v;
};

// Truncated evaluation of Zagier's nonholomorphic Eisenstein series
//   -1/12 + sum H(n) q^n + 1/(8 pi sqrt v)
//   + (1/(4 sqrt pi)) sum_{n>=1} n Gamma(-1/2, 4 pi n^2 v) q^(-n^2).
// Throws if the dropped holomorphic tail cannot be bounded below 1e-8.
std::complex<double> eval_zagier_H(Tau tau, long prec);

// Truncated evaluation of the sesquiharmonic preimage at level N:
//   (2/3) v^(1/2) - (log(16 v)/(2 pi)) P
//   + (P/pi) sum_{m>=1} (gamma + log(pi m^2) + alpha(4 m^2 v)) q^(m^2)
//   + (2/3)(1-i) pi      sum_{n >= 0, n ≡ 0,1 (4)} c(n) q^n
//   + (2/3)(1-i) pi^(1/2) sum_{n < 0, n ≡ 0,1 (4)} c(n) Gamma(1/2, 4 pi|n|v) q^n
// with P = prod_{p|N} 1/(p+1) and c(n) the central Kloosterman-zeta data.
std::complex<double> eval_G(Tau tau, long long N, long prec);

// Theta(tau) = 1 + 2 sum e^(2 pi i m^2 tau).
std::complex<double> theta_eval(Tau tau);

// xi_k f = 2 i v^k conj(d f / d tau-bar) by central differences in u and v
// with one Richardson extrapolation step (h and h/2).
std::complex<double> xi_operator_fd(const std::function<std::complex<double>(Tau)>& f,
                                    double k, Tau tau, double h);

}  // namespace kzeta
