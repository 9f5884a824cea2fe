#ifndef ISOLYAP_SPECFUN_HPP
#define ISOLYAP_SPECFUN_HPP

// Scalar special functions used by the closed-form evaluators: log-Gamma,
// digamma, generalized Pochhammer ratios, Kummer and Tricomi confluent
// hypergeometrics, the Gauss hypergeometric, exponentially scaled modified
// Bessel I, and the exponential integral E1.

#include <complex>

namespace isolyap {
namespace specfun {

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431042;

struct SpecFunResult {
    double value = 0.0;
    double est_abs_error = 0.0;
};

// ln Gamma(x) for x > 0 (domain error otherwise).
double log_gamma(double x);

// Psi(x) = d/dx ln Gamma(x) for x > 0.
double digamma(double x);

// (c)_n = Gamma(c + n) / Gamma(c) for real n, computed via log-Gamma
// differences; requires c > 0 and c + n > 0.
double pochhammer(double c, double n);

// Kummer's M(a; b; x) = 1F1(a; b; x).  Real x uses the Taylor series, with
// the Kummer transform M(a;b;x) = e^x M(b-a;b;-x) applied for moderate x < 0
// so every retained series is cancellation-free, and the algebraic large-|x|
// asymptotic expansion for strongly negative x.  Purely imaginary x is
// supported via an extended-precision Taylor sum (|x| <= 30) or the large-|x|
// asymptotic expansion; general complex arguments are rejected.
std::complex<double> kummer_1f1(double a, double b, std::complex<double> x);
double kummer_1f1(double a, double b, double x);

// Stable M(a; b; x) - 1 for small |x| (direct series starting at the linear
// term; intended for |x| <= 1).
double kummer_1f1_m1(double a, double b, double x);

// Tricomi's U(a; b; x) for a > 0, x > 0, evaluated from the Laplace-type
// integral representation U = x^{-a}/Gamma(a) * int_0^inf e^-s s^{a-1}
// (1 + s/x)^{b-a-1} ds by double-exponential quadrature.
double tricomi_u(double a, double b, double x);

// Gauss 2F1(a, b; c; z) for c > 0 and z < 1: Taylor series for |z| <= 1/2,
// Euler-integral quadrature otherwise.
double gauss_2f1(double a, double b, double c, double z);

// e^{-x} I_nu(x) for x >= 0.  nu in (-1, 0) is served by the series branch;
// nu <= -1 is a domain error.
double bessel_i_scaled(double nu, double x);

// Exponential integral E1(x) = int_x^inf e^-t / t dt, x > 0.
double exp_e1(double x);

// E1 continued analytically to purely imaginary argument i*y (y != 0),
// needed when pairing Fourier coefficients with log-moments.
std::complex<double> exp_e1_imag(double y);

} // namespace specfun
} // namespace isolyap

#endif
