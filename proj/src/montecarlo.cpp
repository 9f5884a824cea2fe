#include "isolyap/montecarlo.hpp"

#include "isolyap/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <variant>

namespace isolyap {
namespace montecarlo {

namespace {

// Work is split over a fixed number of logical chunks with independent RNG
// streams; merging chunk statistics in index order makes the result a pure
// function of (master_seed, samples) whatever the execution schedule.
constexpr int kChunks = 64;

struct Accumulator {
    long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    void merge(const Accumulator& other) {
        if (other.n == 0)
            return;
        if (n == 0) {
            *this = other;
            return;
        }
        const double delta = other.mean - mean;
        const long total = n + other.n;
        mean += delta * static_cast<double>(other.n) / static_cast<double>(total);
        m2 += other.m2 + delta * delta * static_cast<double>(n) *
                             static_cast<double>(other.n) / static_cast<double>(total);
        n = total;
    }

    MCEstimate estimate(std::uint64_t master_seed) const {
        MCEstimate e;
        e.value = mean;
        e.samples = n;
        e.master_seed = master_seed;
        e.std_error = n > 1 ? std::sqrt(m2 / (static_cast<double>(n) *
                                              static_cast<double>(n - 1)))
                            : 0.0;
        return e;
    }
};

long chunk_count(long samples, int chunk) {
    const long base = samples / kChunks;
    const long extra = samples % kChunks;
    return base + (chunk < extra ? 1 : 0);
}

template <typename SampleFn>
MCEstimate run_chunked(long samples, std::uint64_t master_seed, SampleFn&& draw) {
    if (samples <= 0)
        throw std::invalid_argument("monte carlo: sample count must be positive");
    Accumulator total;
    for (int chunk = 0; chunk < kChunks; ++chunk) {
        const long count = chunk_count(samples, chunk);
        if (count == 0)
            continue;
        ensembles::RngStream rng(
            ensembles::derive_stream_seed(master_seed, static_cast<std::uint64_t>(chunk)));
        Accumulator acc;
        for (long i = 0; i < count; ++i)
            acc.add(draw(rng));
        total.merge(acc);
    }
    return total.estimate(master_seed);
}

Eigen::MatrixXcd sample_matrix_dispatch(const ensembles::EnsembleSpec& spec,
                                        ensembles::RngStream& rng) {
    return ensembles::sample_matrix(spec, rng).embedding;
}

Eigen::MatrixXcd sample_matrix_dispatch(const ensembles::ShiftedGaussianSpec& spec,
                                        ensembles::RngStream& rng) {
    return ensembles::sample_shifted(spec, rng).embedding;
}

Eigen::MatrixXcd draw_embedding(const ensembles::AnySpec& spec,
                                ensembles::RngStream& rng) {
    return std::visit(
        [&rng](const auto& s) { return sample_matrix_dispatch(s, rng); }, spec);
}

} // namespace

SpectrumEstimate estimate_spectrum(const ensembles::AnySpec& spec, long m,
                                   int trials, std::uint64_t master_seed) {
    if (m <= 0)
        throw std::invalid_argument("estimate_spectrum: m must be positive");
    if (trials <= 1)
        throw std::invalid_argument("estimate_spectrum: need at least 2 trials");

    const ensembles::FieldIndex field = std::visit(
        [](const auto& s) { return s.field(); }, spec);
    const int n = std::visit([](const auto& s) { return s.n(); }, spec);
    const int dim = field.embedding_dim(n);

    std::vector<Accumulator> exp_acc(n), sum_acc(n);
    for (int trial = 0; trial < trials; ++trial) {
        ensembles::RngStream rng(ensembles::derive_stream_seed(
            master_seed, static_cast<std::uint64_t>(trial)));
        Eigen::MatrixXcd frame = Eigen::MatrixXcd::Identity(dim, dim);
        std::vector<double> log_sum(dim, 0.0);
        for (long step = 0; step < m; ++step) {
            const Eigen::MatrixXcd prod = draw_embedding(spec, rng) * frame;
            Eigen::HouseholderQR<Eigen::MatrixXcd> qr(prod);
            frame = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
            for (int j = 0; j < dim; ++j)
                log_sum[j] += std::log(std::abs(qr.matrixQR()(j, j)));
        }
        std::vector<double> exps(dim);
        for (int j = 0; j < dim; ++j)
            exps[j] = log_sum[j] / static_cast<double>(m);
        std::sort(exps.begin(), exps.end(), std::greater<double>());
        std::vector<double> collapsed(n);
        if (field.beta() == 4) {
            // The embedding doubles each quaternion exponent; average the
            // degenerate pairs.
            for (int j = 0; j < n; ++j)
                collapsed[j] = 0.5 * (exps[2 * j] + exps[2 * j + 1]);
        } else {
            collapsed = exps;
        }
        double running = 0.0;
        for (int j = 0; j < n; ++j) {
            exp_acc[j].add(collapsed[j]);
            running += collapsed[j];
            sum_acc[j].add(running);
        }
    }

    SpectrumEstimate out;
    out.steps_per_trial = m;
    out.trials = trials;
    out.exponents.reserve(n);
    out.partial_sums.reserve(n);
    for (int j = 0; j < n; ++j) {
        out.exponents.push_back(exp_acc[j].estimate(master_seed));
        out.partial_sums.push_back(sum_acc[j].estimate(master_seed));
    }
    return out;
}

MCEstimate estimate_mu1_column(const ensembles::AnySpec& spec, long samples,
                               std::uint64_t master_seed) {
    return std::visit(
        [&](const auto& s) {
            return run_chunked(samples, master_seed, [&s](ensembles::RngStream& rng) {
                return 0.5 * std::log(ensembles::sample_first_column_norm_sq(s, rng));
            });
        },
        spec);
}

MCEstimate estimate_det_moment(const ensembles::EnsembleSpec& spec, double alpha,
                               long samples, std::uint64_t master_seed) {
    const double beta = static_cast<double>(spec.field().beta());
    if (alpha == 0.0) {
        MCEstimate e;
        e.value = 1.0;
        e.std_error = 0.0;
        e.samples = samples;
        e.master_seed = master_seed;
        return e;
    }
    // Variance gates: the sampled quantity is |det X|^(4 alpha) in second
    // moment, so the estimator needs twice the existence margin.
    if (2.0 * alpha <= -beta / 2.0)
        throw DivergentMomentError(
            "estimate_det_moment: estimator variance diverges (alpha too "
            "negative for the lightest row)");
    if (spec.kind() == ensembles::RowKind::BetaTwo) {
        double min_tail = std::numeric_limits<double>::infinity();
        for (const auto& row : spec.rows())
            min_tail = std::min(min_tail, beta * row.omega() / 2.0);
        if (2.0 * alpha >= min_tail)
            throw DivergentMomentError(
                "estimate_det_moment: estimator variance diverges (heavy "
                "tail; need 2*alpha < min beta*omega/2)");
    }

    const bool quaternion = spec.field().beta() == 4;
    return run_chunked(samples, master_seed, [&](ensembles::RngStream& rng) {
        const Eigen::MatrixXcd emb = ensembles::sample_matrix(spec, rng).embedding;
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(emb);
        const std::complex<double> det = lu.determinant();
        // |det_H|^2 equals |det embedding| for quaternion matrices; |det|^2
        // directly otherwise.
        const double detsq = quaternion ? std::abs(det) : std::norm(det);
        return std::pow(detsq, alpha);
    });
}

MCEstimate estimate_wishart_det_moment(int n, int k, ensembles::FieldIndex field,
                                       double sigma, double c, double alpha,
                                       long samples, std::uint64_t master_seed) {
    if (n <= 0 || k <= 0 || k > n)
        throw std::invalid_argument(
            "estimate_wishart_det_moment: need 1 <= k <= n");
    if (!(sigma > 0.0))
        throw std::invalid_argument(
            "estimate_wishart_det_moment: sigma must be positive");
    const double beta = static_cast<double>(field.beta());
    if (2.0 * alpha <= -beta * (n - k + 1) / 2.0)
        throw DivergentMomentError(
            "estimate_wishart_det_moment: estimator variance diverges");

    const ensembles::EnsembleSpec gauss(
        field, std::vector<ensembles::RowDistribution>(
                   n, ensembles::RowDistribution::gaussian(sigma)));
    const bool quaternion = field.beta() == 4;
    const int cols = quaternion ? 2 * k : k;
    return run_chunked(samples, master_seed, [&](ensembles::RngStream& rng) {
        Eigen::MatrixXcd emb = ensembles::sample_matrix(gauss, rng).embedding;
        emb.diagonal().array() += c;
        const Eigen::MatrixXcd gram =
            emb.leftCols(cols).adjoint() * emb.leftCols(cols);
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(gram);
        const double det_abs = std::abs(lu.determinant());
        // Gram determinants are non-negative; det_H^2 = |det embedding Gram|
        // in the quaternion case.
        const double det_w = quaternion ? std::sqrt(det_abs) : det_abs;
        return std::pow(det_w, alpha);
    });
}

} // namespace montecarlo
} // namespace isolyap
