#include "isolyap/exact.hpp"
#include "isolyap/errors.hpp"
#include "isolyap/quad.hpp"
#include "isolyap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

namespace isolyap {
namespace exact {

using ensembles::RowDistribution;
using ensembles::RowKind;

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// E[expm1(-t Y)] for Y ~ BetaPrime(a, b): the Laplace transform of one row
// entry's squared norm, minus one, free of 1 - 1 cancellation at small t.
// E[expm1(-t Y)] and E[exp(-t Y)] for Y ~ BetaPrime(a, b), integrated in
// z = b*y, which keeps the density's mass at z = O(1) however large b is
// (the z-density tends to Gamma(a) as b grows).  The expm1 form is accurate
// near t = 0; the plain form is accurate (and positive) for large t.
double beta_prime_laplace_m1(double a, double b, double t) {
    if (t == 0.0) return 0.0;
    const double ln_norm =
        std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b) + a * std::log(b);
    auto f = [&](double z) {
        return std::expm1(-(t / b) * z) *
               std::exp((a - 1.0) * std::log(z) - (a + b) * std::log1p(z / b) -
                        ln_norm);
    };
    return quad::exp_sinh(f, 0.0, 1e-12, 12).value;
}

double beta_prime_laplace(double a, double b, double t) {
    if (t == 0.0) return 1.0;
    const double ln_norm =
        std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b) + a * std::log(b);
    auto f = [&](double z) {
        return std::exp(-(t / b) * z + (a - 1.0) * std::log(z) -
                        (a + b) * std::log1p(z / b) - ln_norm);
    };
    return quad::exp_sinh(f, 0.0, 1e-12, 12).value;
}

void fill_diag(EvalDiagnostics* diag, const quad::QuadratureResult& r, double scale) {
    if (!diag) return;
    diag->est_abs_error = scale * r.est_abs_error;
    diag->evaluations = r.evaluations;
}

} // namespace

// ---- determinant moments and factorizations ------------------------------

double det_moment(const EnsembleSpec& spec, double alpha) {
    if (alpha == 0.0) return 1.0;
    const double beta = spec.field().beta();
    const int n = spec.n();
    if (!(alpha > -0.5 * beta))
        throw DivergentMomentError("det_moment: moment diverges for alpha <= -beta/2");
    double value = 1.0;
    for (int l = 1; l <= n; ++l) {
        const RowDistribution& row = spec.rows()[l - 1];
        const double half_dim = 0.5 * beta * (n - l + 1);
        switch (row.kind()) {
        case RowKind::Gaussian: {
            const double s2 = row.sigma() * row.sigma();
            value *= std::pow(2.0 * s2, alpha) * specfun::pochhammer(half_dim, alpha);
            break;
        }
        case RowKind::BetaOne:
            value *= specfun::pochhammer(half_dim, alpha) /
                     specfun::pochhammer(0.5 * beta * (n + row.nu()), alpha);
            break;
        case RowKind::BetaTwo: {
            const double half_omega = 0.5 * beta * row.omega();
            if (!(alpha < half_omega))
                throw DivergentMomentError(
                    "det_moment: heavy-tailed rows give a divergent moment for "
                    "alpha >= beta*omega/2");
            value *= specfun::pochhammer(half_dim, alpha) *
                     specfun::pochhammer(half_omega, -alpha);
            break;
        }
        }
    }
    return value;
}

std::vector<DistributionFactor> det_distribution(const EnsembleSpec& spec) {
    const double beta = spec.field().beta();
    const int n = spec.n();
    std::vector<DistributionFactor> factors;
    factors.reserve(n);
    for (int l = 1; l <= n; ++l) {
        const RowDistribution& row = spec.rows()[l - 1];
        switch (row.kind()) {
        case RowKind::Gaussian:
            factors.push_back({FactorKind::ChiSquared, row.sigma() * row.sigma(),
                               beta * l, 0.0});
            break;
        case RowKind::BetaOne: {
            const double b = 0.5 * beta * (row.nu() + l - 1);
            if (!(b > 0.0))
                throw std::domain_error("det_distribution: degenerate Beta factor "
                                        "(first row needs nu > 0)");
            factors.push_back({FactorKind::Beta, 1.0, 0.5 * beta * (n - l + 1), b});
            break;
        }
        case RowKind::BetaTwo:
            factors.push_back({FactorKind::BetaPrime, 1.0, 0.5 * beta * (n - l + 1),
                               0.5 * beta * row.omega()});
            break;
        }
    }
    return factors;
}

double factorization_moment(const std::vector<DistributionFactor>& factors, double alpha) {
    if (alpha == 0.0) return 1.0;
    double value = 1.0;
    for (const DistributionFactor& f : factors) {
        switch (f.kind) {
        case FactorKind::ChiSquared:
            if (!(alpha > -0.5 * f.a))
                throw DivergentMomentError("factorization_moment: chi-squared moment "
                                           "diverges for alpha <= -dof/2");
            value *= std::pow(2.0 * f.scale, alpha) * specfun::pochhammer(0.5 * f.a, alpha);
            break;
        case FactorKind::Beta:
            value *= std::pow(f.scale, alpha) * specfun::pochhammer(f.a, alpha) /
                     specfun::pochhammer(f.a + f.b, alpha);
            break;
        case FactorKind::BetaPrime:
            if (!(alpha < f.b))
                throw DivergentMomentError("factorization_moment: beta-prime moment "
                                           "diverges for alpha >= b");
            value *= std::pow(f.scale, alpha) * specfun::pochhammer(f.a, alpha) *
                     specfun::pochhammer(f.b, -alpha);
            break;
        }
    }
    return value;
}

// ---- Lyapunov exponent sums ----------------------------------------------

double lyapunov_sum(const EnsembleSpec& spec) {
    const double beta = spec.field().beta();
    const int n = spec.n();
    double sum = 0.0;
    for (int l = 1; l <= n; ++l) {
        const RowDistribution& row = spec.rows()[l - 1];
        const double lead = specfun::digamma(0.5 * beta * (n - l + 1));
        switch (row.kind()) {
        case RowKind::Gaussian:
            sum += std::log(2.0 * row.sigma() * row.sigma()) + lead;
            break;
        case RowKind::BetaOne:
            sum += lead - specfun::digamma(0.5 * beta * (n + row.nu()));
            break;
        case RowKind::BetaTwo:
            sum += lead - specfun::digamma(0.5 * beta * row.omega());
            break;
        }
    }
    return 0.5 * sum;
}

double lyapunov_partial_sum_gaussian(int n, int k, FieldIndex field, double sigma) {
    if (!(n >= 1) || !(k >= 1) || k > n)
        throw std::invalid_argument("lyapunov_partial_sum_gaussian: need 1 <= k <= n");
    if (!(sigma > 0.0))
        throw std::domain_error("lyapunov_partial_sum_gaussian: sigma must be positive");
    const double beta = field.beta();
    double sum = k * std::log(2.0 * sigma * sigma);
    for (int l = 1; l <= k; ++l) sum += specfun::digamma(0.5 * beta * (n - l + 1));
    return 0.5 * sum;
}

std::vector<double> lyapunov_spectrum_gaussian(int n, FieldIndex field, double sigma) {
    if (!(n >= 1)) throw std::invalid_argument("lyapunov_spectrum_gaussian: n >= 1");
    if (!(sigma > 0.0))
        throw std::domain_error("lyapunov_spectrum_gaussian: sigma must be positive");
    const double beta = field.beta();
    const double lead = std::log(2.0 * sigma * sigma);
    std::vector<double> mu(n);
    for (int k = 1; k <= n; ++k)
        mu[k - 1] = 0.5 * (lead + specfun::digamma(0.5 * beta * (n - k + 1)));
    return mu;
}

// ---- largest exponent: Gaussian rows -------------------------------------

double mu1_gaussian_general(const std::vector<double>& b, FieldIndex field,
                            EvalDiagnostics* diag) {
    if (b.empty()) throw std::invalid_argument("mu1_gaussian_general: empty rate list");
    for (double bl : b)
        if (!(bl > 0.0))
            throw std::domain_error("mu1_gaussian_general: rates must be positive");
    const double half_beta = 0.5 * field.beta();
    quad::FrullaniIntegrand f;
    f.g = [&, half_beta](double t) {
        double s = 0.0;
        for (double bl : b) s += std::log1p(t / bl);
        return std::exp(-half_beta * s);
    };
    f.g_minus_one = [&, half_beta](double t) {
        double s = 0.0;
        for (double bl : b) s += std::log1p(t / bl);
        return std::expm1(-half_beta * s);
    };
    f.tail_exponent = half_beta * static_cast<double>(b.size());
    quad::QuadratureResult r = quad::integrate_frullani(f, 1e-11, 12);
    fill_diag(diag, r, 0.5);
    return 0.5 * r.value;
}

std::vector<double> gaussian_rates(const EnsembleSpec& spec) {
    if (spec.kind() != RowKind::Gaussian)
        throw std::invalid_argument("gaussian_rates: spec does not have Gaussian rows");
    std::vector<double> b;
    b.reserve(spec.n());
    for (const RowDistribution& row : spec.rows())
        b.push_back(0.5 / (row.sigma() * row.sigma()));
    return b;
}

TwoBlockGaussianSpec::TwoBlockGaussianSpec(FieldIndex field, int n, int n0,
                                           double b1, double b2)
    : field_(field), n_(n), n0_(n0), b1_(b1), b2_(b2) {
    if (!(n >= 1)) throw std::invalid_argument("TwoBlockGaussianSpec: n >= 1");
    if (n0 < 0 || n0 > n)
        throw std::invalid_argument("TwoBlockGaussianSpec: need 0 <= n0 <= n");
    if (!(b1 > 0.0) || !(b2 > 0.0))
        throw std::domain_error("TwoBlockGaussianSpec: rates must be positive");
    if (!(b2 <= b1))
        throw std::invalid_argument("TwoBlockGaussianSpec: requires b2 <= b1");
}

double mu1_gaussian_two_block(const TwoBlockGaussianSpec& spec, EvalDiagnostics* diag) {
    const double beta = spec.field().beta();
    const double base = specfun::digamma(0.5 * beta * spec.n());
    if (diag) *diag = {};
    // n0 = 0 (and b1 = b2) by continuity: the averaged log term vanishes.
    if (spec.n0() == 0 || spec.b1() == spec.b2())
        return 0.5 * (base - std::log(spec.b2()));
    // n0 = n: the Beta weight degenerates to a point mass at x = 1.
    if (spec.n0() == spec.n()) return 0.5 * (base - std::log(spec.b1()));
    const double u = 1.0 - spec.b2() / spec.b1();
    const double p = 0.5 * beta * spec.n0();
    const double q = 0.5 * beta * (spec.n() - spec.n0());
    const double ln_beta_fn = std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
    double mean_log;
    if (ln_beta_fn > -600.0) {
        quad::QuadratureResult r = quad::integrate_beta_log(p, q, u, 1e-11, 12);
        const double inv_beta_fn = std::exp(-ln_beta_fn);
        fill_diag(diag, r, 0.5 * inv_beta_fn);
        mean_log = inv_beta_fn * r.value;
    } else {
        // Large p + q: 1/Beta(p,q) overflows, so fold the normalization into
        // the (then sharply peaked) integrand and split at the mass center.
        auto h = [&](double x) {
            return std::exp((p - 1.0) * std::log(x) + (q - 1.0) * std::log1p(-x) -
                            ln_beta_fn) *
                   std::log1p(-u * x);
        };
        const double xm = p / (p + q);
        quad::QuadratureResult lo = quad::tanh_sinh(h, 0.0, xm, 5e-12, 12);
        quad::QuadratureResult hi = quad::tanh_sinh(h, xm, 1.0, 5e-12, 12);
        if (diag) {
            diag->est_abs_error = 0.5 * (lo.est_abs_error + hi.est_abs_error);
            diag->evaluations = lo.evaluations + hi.evaluations;
        }
        mean_log = lo.value + hi.value;
    }
    return 0.5 * (base - std::log(spec.b2()) + mean_log);
}

double moment_two_block(const TwoBlockGaussianSpec& spec, double s) {
    const double beta = spec.field().beta();
    const double c = 0.5 * beta * spec.n();
    if (!(c + s > 0.0))
        throw std::domain_error("moment_two_block: requires beta*n/2 + s > 0");
    const double z = 1.0 - spec.b2() / spec.b1();
    return specfun::pochhammer(c, s) * std::pow(spec.b2(), -s) *
           specfun::gauss_2f1(0.5 * beta * spec.n0(), -s, c, z);
}

// ---- largest exponent: Beta rows -----------------------------------------

double mu1_betaI(const std::vector<double>& nu, FieldIndex field, EvalDiagnostics* diag) {
    const int n = static_cast<int>(nu.size());
    if (n == 0) throw std::invalid_argument("mu1_betaI: empty parameter list");
    const double beta = field.beta();
    const double a = 0.5 * beta;
    std::vector<double> bb(n); // second Kummer parameter per row
    for (int l = 0; l < n; ++l) {
        if (!(nu[l] > 0.0)) throw std::domain_error("mu1_betaI: nu must be positive");
        bb[l] = a + 0.5 * beta * (n + nu[l] - 1.0);
    }
    quad::FrullaniIntegrand f;
    f.g = [&](double t) {
        double prod = 1.0;
        for (int l = 0; l < n; ++l) prod *= specfun::kummer_1f1(a, bb[l], -t);
        return prod;
    };
    f.g_minus_one = [&](double t) {
        double s = 0.0;
        for (int l = 0; l < n; ++l) s += std::log1p(specfun::kummer_1f1_m1(a, bb[l], -t));
        return std::expm1(s);
    };
    f.tail_exponent = a * n;
    quad::QuadratureResult r = quad::integrate_frullani(f, 1e-11, 12);
    fill_diag(diag, r, 0.5);
    if (diag && n >= 8)
        diag->warnings.push_back(
            "product of many confluent factors: interior cancellation grows with n");
    return 0.5 * r.value;
}

std::complex<double> betaI_fourier_coefficient(const std::vector<double>& nu,
                                               FieldIndex field, long k) {
    const int n = static_cast<int>(nu.size());
    if (n == 0) throw std::invalid_argument("betaI_fourier_coefficient: empty list");
    const double beta = field.beta();
    const double len = beta * n; // support of the column-norm density
    std::complex<double> c(1.0 / len, 0.0);
    if (k == 0) return c;
    const std::complex<double> z(0.0, -kTwoPi * static_cast<double>(k) / len);
    const double a = 0.5 * beta;
    for (int l = 0; l < n; ++l) {
        if (!(nu[l] > 0.0))
            throw std::domain_error("betaI_fourier_coefficient: nu must be positive");
        c *= specfun::kummer_1f1(a, a + 0.5 * beta * (n + nu[l] - 1.0), z);
    }
    return c;
}

FourierMu1Result mu1_betaI_fourier(const std::vector<double>& nu, FieldIndex field,
                                   int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("mu1_betaI_fourier: n_terms >= 1");
    const int n = static_cast<int>(nu.size());
    if (n == 0) throw std::invalid_argument("mu1_betaI_fourier: empty parameter list");
    const double len = field.beta() * n;

    // k = 0: the coefficient is 1/len and int_0^len log x dx = len (log len - 1).
    double sum = std::log(len) - 1.0;

    // k != 0: int_0^len log(x) e^{2 pi i k x/len} dx = len/(2 pi k) *
    // (-Si(2 pi k) + i (Ci(2 pi k) - gamma - log(2 pi k))), and the -k term is
    // the conjugate, so each pair contributes 2 Re(c_k J_k).
    const int decade_lo = std::max(1, static_cast<int>(0.9 * n_terms));
    double decade_abs = 0.0;
    for (int k = 1; k <= n_terms; ++k) {
        const double arg = kTwoPi * k;
        const std::complex<double> e1 = specfun::exp_e1_imag(arg);
        const double ci = -e1.real();
        const double si = 1.5707963267948966 + e1.imag();
        const std::complex<double> jk =
            (len / arg) * std::complex<double>(-si, ci - specfun::kEulerGamma - std::log(arg));
        const std::complex<double> term = betaI_fourier_coefficient(nu, field, k) * jk;
        sum += 2.0 * term.real();
        if (k >= decade_lo) decade_abs += 2.0 * std::abs(term);
    }

    FourierMu1Result out;
    out.value = 0.5 * sum;
    // |c_k J_k| decays like k^{-1 - beta n/2} (log-enhanced); extrapolate the
    // absolute tail beyond n_terms from the last decade of terms.
    const double p = 0.5 * len;
    out.tail_estimate = 0.5 * decade_abs / (std::pow(1.0 / 0.9, p) - 1.0);
    out.slow_decay = out.tail_estimate > 1e-3;
    return out;
}

double mu1_betaII(const std::vector<double>& omega, FieldIndex field,
                  EvalDiagnostics* diag) {
    const int n = static_cast<int>(omega.size());
    if (n == 0) throw std::invalid_argument("mu1_betaII: empty parameter list");
    const double beta = field.beta();
    const double a = 0.5 * beta;
    std::vector<double> half_omega(n);
    for (int l = 0; l < n; ++l) {
        if (!(omega[l] > 0.0)) throw std::domain_error("mu1_betaII: omega must be positive");
        half_omega[l] = 0.5 * beta * omega[l];
    }
    // Each factor is Gamma((beta omega + beta)/2)/Gamma(beta omega/2) *
    // U(beta/2, 1 - beta omega/2; t), which equals the Laplace transform of a
    // BetaPrime(beta/2, beta omega/2) variate; evaluating it through
    // E[expm1(-tY)] keeps the product-minus-one stable at small t.
    auto log_factors = [&](double t) {
        double s = 0.0;
        for (int l = 0; l < n; ++l)
            s += std::log1p(beta_prime_laplace_m1(a, half_omega[l], t));
        return s;
    };
    quad::FrullaniIntegrand f;
    // Far from the origin, evaluate each factor as the (positive) Laplace
    // transform itself; the expm1 route would sit at -1 + epsilon there and
    // its quadrature noise could cross below -1.
    f.g = [&](double t) {
        double g = 1.0;
        for (int l = 0; l < n; ++l)
            g *= std::max(beta_prime_laplace(a, half_omega[l], t), 0.0);
        return g;
    };
    f.g_minus_one = [&](double t) { return std::expm1(log_factors(t)); };
    f.tail_exponent = a * n;
    quad::QuadratureResult r = quad::integrate_frullani(f, 1e-9, 12);
    fill_diag(diag, r, 0.5);
    return 0.5 * r.value;
}

// ---- largest exponent: shifted Gaussian ----------------------------------

double mu1_shifted(int n, FieldIndex field, double lambda, EvalDiagnostics* diag) {
    if (!(n >= 1)) throw std::invalid_argument("mu1_shifted: n >= 1");
    if (!(lambda > 0.0)) throw std::domain_error("mu1_shifted: lambda must be positive");
    const double k = field.beta() * static_cast<double>(n); // chi-squared dof
    const double order = 0.5 * k - 1.0;
    const double half_pow = 0.25 * k - 0.5;
    quad::LogDensityIntegrand f;
    f.pdf = [=](double t) {
        // noncentral chi-squared density, written so that the exponential
        // carries -(sqrt(t)-sqrt(lambda))^2/2 and the Bessel factor is scaled
        const double d = std::sqrt(t) - std::sqrt(lambda);
        return 0.5 * std::pow(t / lambda, half_pow) * std::exp(-0.5 * d * d) *
               specfun::bessel_i_scaled(order, std::sqrt(lambda * t));
    };
    f.lo = 0.0;
    f.hi = std::numeric_limits<double>::infinity();
    f.scale = lambda;
    f.peak = k + lambda; // distribution mean
    quad::QuadratureResult r = quad::integrate_logdensity(f, 1e-10, 14);
    fill_diag(diag, r, 0.5);
    return 0.5 * r.value;
}

double mu1_shifted_2x2(double lower_limit) {
    if (!(lower_limit > 0.0))
        throw std::domain_error("mu1_shifted_2x2: lower limit must be positive");
    return 0.5 * specfun::exp_e1(lower_limit);
}

double lyap_sum_shifted_asymptotic(int n, int k, FieldIndex field, double sigma, double c) {
    if (!(n >= 1) || !(k >= 1) || k > n)
        throw std::invalid_argument("lyap_sum_shifted_asymptotic: need 1 <= k <= n");
    if (!(sigma > 0.0))
        throw std::domain_error("lyap_sum_shifted_asymptotic: sigma must be positive");
    if (c == 0.0) throw std::domain_error("lyap_sum_shifted_asymptotic: c must be nonzero");
    const double beta = field.beta();
    return sigma * sigma * k * (0.5 * beta * (n - k + 1) - 1.0) / (c * c);
}

// ---- asymptotic forms ------------------------------------------------------

AsymptoticResult mu1_asymptotic(const AsymptoticRequest& req) {
    AsymptoticResult out;
    const bool needs_two_block = req.variant == AsymptoticVariant::TwoBlockLargeN ||
                                 req.variant == AsymptoticVariant::TwoBlockRates ||
                                 req.variant == AsymptoticVariant::TwoBlockTrace ||
                                 req.variant == AsymptoticVariant::OneSoftRow;
    if (needs_two_block) {
        if (!req.two_block)
            throw std::invalid_argument("mu1_asymptotic: variant requires a two-block spec");
        const TwoBlockGaussianSpec& s = *req.two_block;
        const double beta = s.field().beta();
        const double n = s.n(), n0 = s.n0();
        if (s.n() < 10)
            out.warnings.push_back("asymptotic form evaluated at modest dimension n = " +
                                   std::to_string(s.n()));
        switch (req.variant) {
        case AsymptoticVariant::TwoBlockLargeN:
            out.value = 0.5 * (specfun::digamma(0.5 * beta * n) - std::log(s.b2()) +
                               std::log1p(-(1.0 - s.b2() / s.b1()) * n0 / n));
            break;
        case AsymptoticVariant::TwoBlockRates:
            out.value = 0.5 * std::log(0.5 * beta * ((n - n0) / s.b2() + n0 / s.b1()));
            break;
        case AsymptoticVariant::TwoBlockTrace: {
            const double trace = 0.5 * (n - n0) / s.b2() + 0.5 * n0 / s.b1();
            out.value = 0.5 * std::log(beta * trace);
            break;
        }
        case AsymptoticVariant::OneSoftRow: {
            if (s.n0() != s.n() - 1)
                out.warnings.push_back("one-soft-row form assumes n0 = n - 1");
            const double ratio = s.b1() / (n * s.b2());
            auto integrand = [&](double x) {
                return std::exp(-0.5 * beta * x + (0.5 * beta - 1.0) * std::log(x)) *
                       std::log1p(ratio * x);
            };
            const double pref =
                std::exp(0.5 * beta * std::log(0.5 * beta) - std::lgamma(0.5 * beta));
            quad::QuadratureResult r = quad::exp_sinh(integrand, 0.0, 1e-11, 12);
            out.value = 0.5 * (std::log(0.5 * beta * n / s.b1()) + pref * r.value);
            break;
        }
        default:
            break;
        }
        return out;
    }

    if (req.shape.empty())
        throw std::invalid_argument("mu1_asymptotic: variant requires a shape list");
    if (!req.field)
        throw std::invalid_argument("mu1_asymptotic: variant requires a field index");
    if (req.shape.size() < 10)
        out.warnings.push_back("asymptotic form evaluated at modest dimension n = " +
                               std::to_string(req.shape.size()));
    double sum = 0.0;
    switch (req.variant) {
    case AsymptoticVariant::BetaOneLargeN:
        for (double v : req.shape) {
            if (!(v > 0.0)) throw std::domain_error("mu1_asymptotic: nu must be positive");
            sum += 1.0 / (1.0 + v);
        }
        break;
    case AsymptoticVariant::BetaTwoLargeN: {
        const double floor = 2.0 / req.field->beta();
        for (double w : req.shape) {
            if (!(w > floor))
                throw std::domain_error(
                    "mu1_asymptotic: requires omega > 2/beta (finite row mean)");
            sum += 1.0 / (w - floor);
        }
        break;
    }
    default:
        throw std::invalid_argument("mu1_asymptotic: unhandled variant");
    }
    out.value = 0.5 * std::log(sum);
    return out;
}

double mu1_one_soft_row_limit(double t) {
    if (!(t > 0.0)) throw std::domain_error("mu1_one_soft_row_limit: t must be positive");
    // (1/2) e^{t/2} int_1^inf e^{-t x/2} dx / (sqrt(x)(sqrt(x)+1)), with the
    // prefactor folded into the integrand to avoid overflow at large t.
    auto f = [=](double x) {
        const double r = std::sqrt(x);
        return std::exp(-0.5 * t * (x - 1.0)) / (r * (r + 1.0));
    };
    return 0.5 * quad::exp_sinh(f, 1.0, 1e-12, 12).value;
}

// ---- dispatcher -----------------------------------------------------------

double mu1(const AnySpec& spec, EvalDiagnostics* diag) {
    return std::visit(
        [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ShiftedGaussianSpec>) {
                return mu1_shifted(s.n(), s.field(), s.lambda(), diag);
            } else {
                switch (s.kind()) {
                case RowKind::Gaussian:
                    return mu1_gaussian_general(gaussian_rates(s), s.field(), diag);
                case RowKind::BetaOne: {
                    std::vector<double> nu;
                    for (const RowDistribution& r : s.rows()) nu.push_back(r.nu());
                    return mu1_betaI(nu, s.field(), diag);
                }
                case RowKind::BetaTwo: {
                    std::vector<double> om;
                    for (const RowDistribution& r : s.rows()) om.push_back(r.omega());
                    return mu1_betaII(om, s.field(), diag);
                }
                }
                throw std::logic_error("mu1: unreachable");
            }
        },
        spec);
}

} // namespace exact
} // namespace isolyap
