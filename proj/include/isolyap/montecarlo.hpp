#ifndef ISOLYAP_MONTECARLO_HPP
#define ISOLYAP_MONTECARLO_HPP

// Monte-Carlo estimators used to validate the closed-form results: QR-based
// Lyapunov spectrum estimation for matrix products, the first-column
// log-norm estimator for the largest exponent, and direct sampling of
// determinant moments.  All estimators derive per-chunk RNG streams from a
// single master seed, so results are reproducible bit-for-bit for a given
// (master_seed, sample count) pair regardless of how work would be scheduled.

#include "isolyap/ensembles.hpp"

#include <cstdint>
#include <vector>

namespace isolyap {
namespace montecarlo {

struct MCEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long samples = 0;
    std::uint64_t master_seed = 0;
};

struct SpectrumEstimate {
    // Per-exponent estimates, sorted non-increasing, collapsed to n entries
    // for quaternion ensembles (degenerate pairs averaged).
    std::vector<MCEstimate> exponents;
    // partial_sums[k-1] estimates mu_1 + ... + mu_k (computed per trial, so
    // its standard error accounts for correlations between exponents).
    std::vector<MCEstimate> partial_sums;
    long steps_per_trial = 0;
    int trials = 0;
};

// Lyapunov spectrum of the product of i.i.d. samples: evolves an orthonormal
// frame with one QR re-orthonormalization per factor, accumulating
// log |r_jj|.  Each trial runs m factors on its own RNG stream.
SpectrumEstimate estimate_spectrum(const ensembles::AnySpec& spec, long m,
                                   int trials, std::uint64_t master_seed);

// Largest exponent via the stationary first-column marginal: mean and
// standard error of (1/2) log |column norm^2| over i.i.d. draws.
MCEstimate estimate_mu1_column(const ensembles::AnySpec& spec, long samples,
                               std::uint64_t master_seed);

// <|det X|^(2 alpha)> by direct sampling.  Throws DivergentMomentError when
// the estimator variance is infinite (heavy-tailed row weights with
// 2*alpha >= min beta*omega_l / 2) or the moment itself does not exist.
MCEstimate estimate_det_moment(const ensembles::EnsembleSpec& spec, double alpha,
                               long samples, std::uint64_t master_seed);

// <(det W_k)^alpha> for W_k the Gram matrix of the first k columns of
// c I_n + X with X Gaussian(sigma), by direct sampling.
MCEstimate estimate_wishart_det_moment(int n, int k, ensembles::FieldIndex field,
                                       double sigma, double c, double alpha,
                                       long samples, std::uint64_t master_seed);

} // namespace montecarlo
} // namespace isolyap

#endif
