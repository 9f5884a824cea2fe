#ifndef ISOLYAP_ERRORS_HPP
#define ISOLYAP_ERRORS_HPP

// Shared error types.  Domain violations use std::domain_error /
// std::invalid_argument directly; the types below carry extra state that
// callers may want to inspect (partial sums, iteration counts).

#include <stdexcept>
#include <string>

namespace isolyap {

// A series or quadrature scheme ran out of budget before reaching its
// target accuracy.  `partial` is the best value obtained so far.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double partial_value, long steps)
        : std::runtime_error(what), partial(partial_value), iterations(steps) {}
    double partial;
    long iterations;
};

// A density handed to integrate_logdensity does not integrate to 1.
class NormalizationError : public std::runtime_error {
public:
    NormalizationError(const std::string& what, double integral)
        : std::runtime_error(what), integral_value(integral) {}
    double integral_value;
};

// A requested moment does not exist (heavy-tailed weight), or a Monte-Carlo
// estimator would have infinite variance for the requested power.
class DivergentMomentError : public std::domain_error {
public:
    explicit DivergentMomentError(const std::string& what) : std::domain_error(what) {}
};

} // namespace isolyap

#endif
