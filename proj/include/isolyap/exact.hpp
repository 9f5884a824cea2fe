#ifndef ISOLYAP_EXACT_HPP
#define ISOLYAP_EXACT_HPP

// Closed-form and quadrature-based evaluators for products of isotropic
// random matrices: moments of |det X|^2, the distributional factorization of
// |det X|^2 into independent scalar factors, sums and partial sums of
// Lyapunov exponents, the largest exponent mu_1 for each row family, and
// the large-parameter asymptotic forms.

#include "isolyap/ensembles.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace isolyap {
namespace exact {

using ensembles::AnySpec;
using ensembles::EnsembleSpec;
using ensembles::FieldIndex;
using ensembles::ShiftedGaussianSpec;

// Optional quadrature diagnostics for the mu_1 evaluators.
struct EvalDiagnostics {
    double est_abs_error = 0.0;
    long evaluations = 0;
    std::vector<std::string> warnings;
};

// ---- determinant moments and factorizations ------------------------------

// <|det X|^{2 alpha}> (quaternion determinant convention for beta = 4).
// alpha = 0 returns exactly 1.  Gaussian requires alpha > -beta/2; BetaTwo
// requires alpha < min_l beta*omega_l/2 (DivergentMomentError otherwise).
double det_moment(const EnsembleSpec& spec, double alpha);

// |det X|^2 equals, in distribution, a product of independent scalar factors.
enum class FactorKind { ChiSquared, Beta, BetaPrime };
struct DistributionFactor {
    FactorKind kind;
    double scale; // multiplies the variate (1 unless ChiSquared)
    double a;     // dof for ChiSquared, first shape otherwise
    double b;     // second shape (unused for ChiSquared)
};
std::vector<DistributionFactor> det_distribution(const EnsembleSpec& spec);

// Product of the factors' alpha-moments; must agree with det_moment.
double factorization_moment(const std::vector<DistributionFactor>& factors, double alpha);

// ---- Lyapunov exponent sums ----------------------------------------------

// mu_1 + ... + mu_N in nats per step (digamma closed forms).
double lyapunov_sum(const EnsembleSpec& spec);

// mu_1 + ... + mu_k for the equal-variance Gaussian ensemble:
// (k log(2 sigma^2) + sum_{l=1..k} Psi(beta(n-l+1)/2)) / 2.
double lyapunov_partial_sum_gaussian(int n, int k, FieldIndex field, double sigma);

// Individual exponents (differences of consecutive partial sums), largest first.
std::vector<double> lyapunov_spectrum_gaussian(int n, FieldIndex field, double sigma);

// ---- largest exponent: Gaussian rows -------------------------------------

// mu_1 for Gaussian rows with per-row rates b_l = 1/(2 sigma_l^2), via the
// Frullani integral 2 mu_1 = int_0^inf (e^-t - prod_l (1+t/b_l)^{-beta/2}) dt/t.
double mu1_gaussian_general(const std::vector<double>& b, FieldIndex field,
                            EvalDiagnostics* diag = nullptr);

// Rates b_l of a Gaussian EnsembleSpec.
std::vector<double> gaussian_rates(const EnsembleSpec& spec);

// Two Gaussian blocks: n0 rows at rate b1 and n - n0 rows at rate b2 <= b1.
class TwoBlockGaussianSpec {
public:
    TwoBlockGaussianSpec(FieldIndex field, int n, int n0, double b1, double b2);
    const FieldIndex& field() const noexcept { return field_; }
    int n() const noexcept { return n_; }
    int n0() const noexcept { return n0_; }
    double b1() const noexcept { return b1_; }
    double b2() const noexcept { return b2_; }

private:
    FieldIndex field_;
    int n_, n0_;
    double b1_, b2_;
};

// mu_1 = (Psi(beta n/2) - log b2 + Beta(p,q)^{-1} * int_0^1 x^{p-1}(1-x)^{q-1}
// log(1-(1-b2/b1)x) dx) / 2 with p = beta n0/2, q = beta(n-n0)/2; the n0 = 0
// edge is defined by continuity.
double mu1_gaussian_two_block(const TwoBlockGaussianSpec& spec,
                              EvalDiagnostics* diag = nullptr);

// s-th moment of the first column's squared norm for the two-block ensemble.
double moment_two_block(const TwoBlockGaussianSpec& spec, double s);

// ---- largest exponent: Beta rows -----------------------------------------

// Type-one Beta rows (n = nu.size()):
// 2 mu_1 = int_0^inf (e^-t - prod_l M(beta/2; beta/2 + a_l; -t)) dt/t,
// a_l = beta(n + nu_l - 1)/2.
double mu1_betaI(const std::vector<double>& nu, FieldIndex field,
                 EvalDiagnostics* diag = nullptr);

// Fourier-series route to the same quantity: the truncated symmetric sum
// over |k| <= n_terms of c_k * int_0^{beta n} log(x) e^{2 pi i k x/(beta n)} dx,
// with c_k a product of imaginary-argument Kummer functions.  tail_estimate
// extrapolates the absolute tail from the last decade of terms using the
// known algebraic decay rate.
struct FourierMu1Result {
    double value = 0.0;
    double tail_estimate = 0.0;
    bool slow_decay = false; // tail_estimate > 1e-3
};
FourierMu1Result mu1_betaI_fourier(const std::vector<double>& nu, FieldIndex field,
                                   int n_terms);

// The k-th Fourier coefficient of the column-norm density behind
// mu1_betaI_fourier; satisfies coeff(-k) = conj(coeff(k)).
std::complex<double> betaI_fourier_coefficient(const std::vector<double>& nu,
                                               FieldIndex field, long k);

// Type-two Beta rows (n = omega.size()):
// 2 mu_1 = int_0^inf (e^-t - prod_l L_l(t)) dt/t with L_l the Laplace
// transform of a single entry's squared norm, L_l(t) =
// Gamma((beta omega_l + beta)/2)/Gamma(beta omega_l/2) U(beta/2; 1 - beta omega_l/2; t).
double mu1_betaII(const std::vector<double>& omega, FieldIndex field,
                  EvalDiagnostics* diag = nullptr);

// ---- largest exponent: shifted Gaussian ----------------------------------

// mu_1 = (1/2) * E[log(T/lambda)] with T noncentral chi^2 with beta*n dof and
// noncentrality lambda = (c/sigma)^2, evaluated by log-density quadrature.
double mu1_shifted(int n, FieldIndex field, double lambda,
                   EvalDiagnostics* diag = nullptr);

// Closed form for beta = 1, n = 2: mu_1 = (1/2) E1(lower_limit), where
// lower_limit = c^2/(2 sigma^2) = lambda/2.
double mu1_shifted_2x2(double lower_limit);

// Leading large-c behavior of mu_1 + ... + mu_k for the shifted ensemble:
// sigma^2 k (beta(n-k+1)/2 - 1)/c^2.
double lyap_sum_shifted_asymptotic(int n, int k, FieldIndex field,
                                   double sigma, double c);

// ---- asymptotic forms for mu_1 -------------------------------------------

enum class AsymptoticVariant {
    TwoBlockLargeN,    // digamma + log(1 - (1-b2/b1) n0/n)
    TwoBlockRates,     // (1/2) log((beta/2)((n-n0)/b2 + n0/b1))
    TwoBlockTrace,     // (1/2) log(beta tr Sigma), algebraically equal to TwoBlockRates
    OneSoftRow,        // n-1 stiff rows at b1, one soft row at b2; Gamma-weighted log integral
    BetaOneLargeN,     // (1/2) log sum_j (1 + nu_j)^{-1}
    BetaTwoLargeN      // (1/2) log sum_j (omega_j - 2/beta)^{-1}
};

struct AsymptoticRequest {
    AsymptoticVariant variant;
    std::optional<TwoBlockGaussianSpec> two_block; // the four two-block variants
    std::vector<double> shape;                     // nu or omega lists
    std::optional<FieldIndex> field;               // for the shape variants
};

struct AsymptoticResult {
    double value = 0.0;
    std::vector<std::string> warnings; // regime violations are non-fatal
};

AsymptoticResult mu1_asymptotic(const AsymptoticRequest& req);

// Large-N limit of mu_1 when the stiff rows satisfy 2 b1/n = 1 and the soft
// row has 2 b2 = t (beta = 1):  (1/2) e^{t/2} int_1^inf e^{-t x/2} dx /
// (sqrt(x)(sqrt(x)+1)).  Cf. Kargin, J. Stat. Phys. 157 (2014), Thm 1.3.
double mu1_one_soft_row_limit(double t);

// ---- dispatcher used by the command-line driver --------------------------

// mu_1 for any spec (Gaussian/BetaOne/BetaTwo ensembles or shifted Gaussian).
double mu1(const AnySpec& spec, EvalDiagnostics* diag = nullptr);

} // namespace exact
} // namespace isolyap

#endif
