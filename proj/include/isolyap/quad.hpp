#ifndef ISOLYAP_QUAD_HPP
#define ISOLYAP_QUAD_HPP

// One-dimensional quadrature built on double-exponential (tanh-sinh /
// exp-sinh) transformations.  These rules converge super-algebraically for
// analytic integrands and tolerate integrable algebraic or logarithmic
// endpoint singularities, which covers every integral in this project:
// Frullani-type differences, Beta-weighted logarithms, and expectations of
// log(t/scale) against a density.

#include <functional>
#include <optional>

namespace isolyap {
namespace quad {

struct QuadratureResult {
    double value = 0.0;
    double est_abs_error = 0.0; // difference between the last two refinement levels
    long evaluations = 0;       // number of integrand evaluations
};

// Core rules.  `max_level` bounds the refinement depth; each level halves
// the node spacing.  A result is returned as soon as est_abs_error <= abs_tol;
// if the budget runs out with the estimate still far above target (20x), a
// ConvergenceError carrying the partial value is thrown.

// Integral of f over the finite interval [a, b].
QuadratureResult tanh_sinh(const std::function<double(double)>& f,
                           double a, double b,
                           double abs_tol = 1e-12, int max_level = 12);

// Integral of f over [a, infinity).
QuadratureResult exp_sinh(const std::function<double(double)>& f,
                          double a,
                          double abs_tol = 1e-12, int max_level = 12);

// integral_0^inf (exp(-t) - g(t)) dt / t  for g with g(0) = 1 and
// g(t) = O(t^{-tail_exponent}) as t -> infinity.  The integrand is evaluated
// in a cancellation-safe fused-difference form near t = 0:
// (expm1(-t) - (g(t)-1)) / t, with g(t)-1 taken from `g_minus_one` when the
// caller can supply it stably (recommended; the fallback computes g(t)-1.0
// directly, which costs ~1e-15 of absolute accuracy near the origin).
struct FrullaniIntegrand {
    std::function<double(double)> g;
    std::function<double(double)> g_minus_one; // optional stable g(t)-1
    double tail_exponent = 1.0;                // p > 0 with g = O(t^-p)
};
QuadratureResult integrate_frullani(const FrullaniIntegrand& f,
                                    double abs_tol = 1e-11, int max_level = 12);

// integral_0^1 x^{p-1} (1-x)^{q-1} ln(1 - u x) dx  for p, q > 0 and u < 1.
// Endpoint singularities (p < 1, q < 1) are admissible.  u >= 1 is a domain
// error.  Negative u is allowed (the logarithm stays regular).
QuadratureResult integrate_beta_log(double p, double q, double u,
                                    double abs_tol = 1e-11, int max_level = 12);

// integral over [lo, hi] of ln(t/scale) * pdf(t) dt.  `hi` may be +infinity.
// The density must integrate to 1 over [lo, hi] within 1e-8; a violation
// raises NormalizationError (distinct from ConvergenceError).  `peak` is an
// optional hint for where the density mass sits (defaults to `scale`); the
// integration range is split there so sharply localized densities are
// resolved.
struct LogDensityIntegrand {
    std::function<double(double)> pdf;
    double lo = 0.0;
    double hi = 0.0; // may be +infinity
    double scale = 1.0;
    std::optional<double> peak;
};
QuadratureResult integrate_logdensity(const LogDensityIntegrand& f,
                                      double abs_tol = 1e-9, int max_level = 14);

} // namespace quad
} // namespace isolyap

#endif
