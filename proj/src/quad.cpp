#include "isolyap/quad.hpp"
#include "isolyap/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isolyap {
namespace quad {

namespace {

constexpr double kUmax = 6.55;   // |u| range of the double-exponential rules
constexpr double kMinScan = 4.0; // always scan at least this far before truncating

// Shared level-refinement driver.  `row(level, step)` sums the new nodes of
// a level (all nodes at level 0, odd multiples of the step afterwards).
template <typename Row>
QuadratureResult refine(Row row, double abs_tol, int max_level, const char* what) {
    QuadratureResult res;
    double prev = 0.0;
    double value = 0.0;
    double est = std::numeric_limits<double>::infinity();
    for (int level = 0; level <= max_level; ++level) {
        const double d = std::ldexp(1.0, -level);
        const double partial = row(level, d, res.evaluations);
        value = (level == 0) ? d * partial : 0.5 * value + d * partial;
        if (level >= 2) {
            est = std::abs(value - prev);
            const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
            est = std::max(est, floor);
            if (est <= abs_tol) {
                res.value = value;
                res.est_abs_error = est;
                return res;
            }
        }
        prev = value;
    }
    res.value = value;
    res.est_abs_error = est;
    if (!(est <= 20.0 * abs_tol)) {
        throw ConvergenceError(std::string(what) + ": quadrature did not converge within budget",
                               value, res.evaluations);
    }
    return res;
}

// One half-line of tanh-sinh nodes.  `side` is +1 (toward b) or -1 (toward a).
double tanh_sinh_side(const std::function<double(double)>& f, double a, double b,
                      int side, int level, double d, long& evals) {
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    int small_run = 0;
    const int stride = (level == 0) ? 1 : 2;
    const int k0 = (level == 0) ? (side > 0 ? 0 : 1) : 1;
    for (int k = k0; k * d <= kUmax; k += stride) {
        const double u = side * k * d;
        const double s = 1.5707963267948966 * std::sinh(u);
        if (std::abs(s) > 350.0) break; // weight underflows
        const double sech = 1.0 / std::cosh(s);
        const double w = h * 1.5707963267948966 * std::cosh(u) * sech * sech;
        // distance from the nearer endpoint, computed without cancellation
        const double dist = h * 2.0 / (std::exp(2.0 * std::abs(s)) + 1.0);
        if (dist <= 0.0) break;
        const double x = (side > 0) ? b - dist : a + dist;
        if (x <= a || x >= b) break;
        const double fx = f(x);
        ++evals;
        const double term = w * fx; // u = 0 is visited by the positive side only
        if (std::isfinite(term)) {
            sum += term;
            if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-300)) {
                if (++small_run >= 2 && k * d >= kMinScan) break;
            } else {
                small_run = 0;
            }
        } else if (w < 1e-250) {
            break; // singular endpoint under a vanishing weight
        } else {
            sum = term; // propagate the non-finite value honestly
            break;
        }
    }
    return sum;
}

} // namespace

QuadratureResult tanh_sinh(const std::function<double(double)>& f,
                           double a, double b, double abs_tol, int max_level) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0, 0};
        throw std::domain_error("tanh_sinh: empty interval");
    }
    auto row = [&](int level, double d, long& evals) {
        // the u = 0 node belongs to level 0 only; split it between the sides
        return tanh_sinh_side(f, a, b, +1, level, d, evals) +
               tanh_sinh_side(f, a, b, -1, level, d, evals);
    };
    return refine(row, abs_tol, max_level, "tanh_sinh");
}

QuadratureResult exp_sinh(const std::function<double(double)>& f,
                          double a, double abs_tol, int max_level) {
    auto side = [&](int sgn, int level, double d, long& evals) {
        double sum = 0.0;
        int small_run = 0;
        const int stride = (level == 0) ? 1 : 2;
        const int k0 = (level == 0) ? (sgn > 0 ? 0 : 1) : 1;
        for (int k = k0; k * d <= kUmax; k += stride) {
            const double u = sgn * k * d;
            const double s = 1.5707963267948966 * std::sinh(u);
            if (s > 700.0) break; // exp overflow; integrand must have decayed
            const double es = std::exp(s);
            const double w = 1.5707963267948966 * std::cosh(u) * es;
            const double t = a + es;
            if (!(t > a)) break; // offset underflowed
            const double fx = f(t);
            ++evals;
            const double term = w * fx; // u = 0 belongs to the positive sweep only
            if (std::isfinite(term)) {
                sum += term;
                if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-300)) {
                    if (++small_run >= 2 && k * d >= kMinScan) break;
                } else {
                    small_run = 0;
                }
            } else if (w * std::min(1.0, es) < 1e-250) {
                break;
            } else {
                sum = term;
                break;
            }
        }
        return sum;
    };
    auto row = [&](int level, double d, long& evals) {
        return side(+1, level, d, evals) + side(-1, level, d, evals);
    };
    return refine(row, abs_tol, max_level, "exp_sinh");
}

QuadratureResult integrate_frullani(const FrullaniIntegrand& f,
                                    double abs_tol, int max_level) {
    if (!f.g) throw std::invalid_argument("integrate_frullani: missing integrand");
    if (!(f.tail_exponent > 0.0))
        throw std::domain_error("integrate_frullani: tail exponent must be positive");

    // [0, 1]: fused difference (expm1(-t) - (g(t)-1)) / t kills the 1 - 1
    // cancellation at the origin.
    auto near = [&](double t) {
        const double gm1 = f.g_minus_one ? f.g_minus_one(t) : f.g(t) - 1.0;
        return (std::expm1(-t) - gm1) / t;
    };
    // [1, inf): both terms are already small and of different scales.
    auto far = [&](double t) { return (std::exp(-t) - f.g(t)) / t; };

    QuadratureResult lo = tanh_sinh(near, 0.0, 1.0, 0.5 * abs_tol, max_level);
    QuadratureResult hi = exp_sinh(far, 1.0, 0.5 * abs_tol, max_level);
    return {lo.value + hi.value,
            lo.est_abs_error + hi.est_abs_error,
            lo.evaluations + hi.evaluations};
}

QuadratureResult integrate_beta_log(double p, double q, double u,
                                    double abs_tol, int max_level) {
    if (!(p > 0.0) || !(q > 0.0))
        throw std::domain_error("integrate_beta_log: p and q must be positive");
    if (!(u < 1.0))
        throw std::domain_error("integrate_beta_log: log singularity inside the interval (u >= 1)");

    // Split at 1/2 and fold each half so its singular endpoint sits at the
    // origin, where tanh-sinh keeps full precision in the small coordinate.
    auto left = [&](double x) { // x in (0, 1/2], weight x^{p-1}
        return std::pow(x, p - 1.0) * std::pow(1.0 - x, q - 1.0) * std::log1p(-u * x);
    };
    auto right = [&](double y) { // y = 1 - x in (0, 1/2], weight y^{q-1}
        const double om = (1.0 - u) + u * y; // 1 - u(1-y), exact to rounding
        return std::pow(y, q - 1.0) * std::pow(1.0 - y, p - 1.0) * std::log(om);
    };
    QuadratureResult l = tanh_sinh(left, 0.0, 0.5, 0.5 * abs_tol, max_level);
    QuadratureResult r = tanh_sinh(right, 0.0, 0.5, 0.5 * abs_tol, max_level);
    return {l.value + r.value,
            l.est_abs_error + r.est_abs_error,
            l.evaluations + r.evaluations};
}

QuadratureResult integrate_logdensity(const LogDensityIntegrand& f,
                                      double abs_tol, int max_level) {
    if (!f.pdf) throw std::invalid_argument("integrate_logdensity: missing density");
    if (!(f.scale > 0.0)) throw std::domain_error("integrate_logdensity: scale must be positive");
    const double inf = std::numeric_limits<double>::infinity();
    if (!(f.lo < f.hi)) throw std::domain_error("integrate_logdensity: empty support");

    double mid = f.peak.value_or(f.scale);
    const bool split = (mid > f.lo) && (mid < f.hi);

    auto run = [&](const std::function<double(double)>& h, double tol) {
        QuadratureResult total{0.0, 0.0, 0};
        auto acc = [&](QuadratureResult piece) {
            total.value += piece.value;
            total.est_abs_error += piece.est_abs_error;
            total.evaluations += piece.evaluations;
        };
        const double t0 = f.lo;
        const double t1 = split ? mid : f.hi;
        const double tol_piece = split ? 0.5 * tol : tol;
        if (t1 == inf) {
            acc(exp_sinh(h, t0, tol_piece, max_level));
            return total;
        }
        acc(tanh_sinh(h, t0, t1, tol_piece, max_level));
        if (split) {
            if (f.hi == inf) acc(exp_sinh(h, mid, tol_piece, max_level));
            else acc(tanh_sinh(h, mid, f.hi, tol_piece, max_level));
        }
        return total;
    };

    // normalization gate first, with its own (tight) tolerance
    QuadratureResult z = run([&](double t) { return f.pdf(t); }, std::min(abs_tol, 1e-9));
    if (std::abs(z.value - 1.0) > 1e-8) {
        throw NormalizationError("integrate_logdensity: density integrates to " +
                                     std::to_string(z.value) + ", not 1",
                                 z.value);
    }

    auto h = [&](double t) {
        const double pd = f.pdf(t);
        if (pd == 0.0) return 0.0; // avoid 0 * log(0) at support edges
        return std::log(t / f.scale) * pd;
    };
    QuadratureResult r = run(h, abs_tol);
    r.evaluations += z.evaluations;
    return r;
}

} // namespace quad
} // namespace isolyap
