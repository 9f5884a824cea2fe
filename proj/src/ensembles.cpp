#include "isolyap/ensembles.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace isolyap {
namespace ensembles {

FieldIndex::FieldIndex(int beta) : beta_(beta) {
    if (beta != 1 && beta != 2 && beta != 4)
        throw std::domain_error("FieldIndex: beta must be 1, 2, or 4");
}

RowDistribution RowDistribution::gaussian(double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("RowDistribution: sigma must be positive");
    return {RowKind::Gaussian, sigma};
}
RowDistribution RowDistribution::beta_one(double nu) {
    if (!(nu > 0.0)) throw std::domain_error("RowDistribution: nu must be positive");
    return {RowKind::BetaOne, nu};
}
RowDistribution RowDistribution::beta_two(double omega) {
    if (!(omega > 0.0)) throw std::domain_error("RowDistribution: omega must be positive");
    return {RowKind::BetaTwo, omega};
}
double RowDistribution::sigma() const {
    if (kind_ != RowKind::Gaussian) throw std::logic_error("RowDistribution: not Gaussian");
    return param_;
}
double RowDistribution::nu() const {
    if (kind_ != RowKind::BetaOne) throw std::logic_error("RowDistribution: not BetaOne");
    return param_;
}
double RowDistribution::omega() const {
    if (kind_ != RowKind::BetaTwo) throw std::logic_error("RowDistribution: not BetaTwo");
    return param_;
}

EnsembleSpec::EnsembleSpec(FieldIndex field, std::vector<RowDistribution> rows)
    : field_(field), rows_(std::move(rows)) {
    if (rows_.empty()) throw std::domain_error("EnsembleSpec: need at least one row");
    for (const auto& r : rows_)
        if (r.kind() != rows_.front().kind())
            throw std::domain_error("EnsembleSpec: rows must share one distribution tag");
}

ShiftedGaussianSpec::ShiftedGaussianSpec(FieldIndex field, int n, double c, double sigma)
    : field_(field), n_(n), c_(c), sigma_(sigma) {
    if (n < 1) throw std::domain_error("ShiftedGaussianSpec: n must be at least 1");
    if (c == 0.0) throw std::domain_error("ShiftedGaussianSpec: c must be nonzero");
    if (!(sigma > 0.0)) throw std::domain_error("ShiftedGaussianSpec: sigma must be positive");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Assemble the complex embedding from rows of beta*n real components.
MatrixSample embed(int n, int beta, const std::vector<std::vector<double>>& rows) {
    MatrixSample s;
    s.n = n;
    s.beta = beta;
    const int dim = (beta == 4) ? 2 * n : n;
    s.embedding.resize(dim, dim);
    for (int l = 0; l < n; ++l) {
        const std::vector<double>& r = rows[l];
        for (int j = 0; j < n; ++j) {
            if (beta == 1) {
                s.embedding(l, j) = std::complex<double>(r[j], 0.0);
            } else if (beta == 2) {
                s.embedding(l, j) = std::complex<double>(r[2 * j], r[2 * j + 1]);
            } else {
                const std::complex<double> z(r[4 * j], r[4 * j + 1]);
                const std::complex<double> w(r[4 * j + 2], r[4 * j + 3]);
                s.embedding(2 * l, 2 * j) = z;
                s.embedding(2 * l, 2 * j + 1) = w;
                s.embedding(2 * l + 1, 2 * j) = -std::conj(w);
                s.embedding(2 * l + 1, 2 * j + 1) = std::conj(z);
            }
        }
    }
    return s;
}

} // namespace

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

std::vector<double> sample_row(const RowDistribution& row, int n,
                               const FieldIndex& field, RngStream& rng) {
    const int beta = field.beta();
    const int d = beta * n;
    std::vector<double> v(d);
    switch (row.kind()) {
    case RowKind::Gaussian: {
        const double sigma = row.sigma();
        for (double& x : v) x = sigma * rng.normal();
        return v;
    }
    case RowKind::BetaOne: {
        // uniform direction on the sphere in R^{beta n}, radius^2 ~ Beta
        double norm2 = 0.0;
        for (double& x : v) {
            x = rng.normal();
            norm2 += x * x;
        }
        const double r2 = rng.beta(0.5 * d, 0.5 * beta * row.nu());
        const double scale = std::sqrt(r2 / norm2);
        double check = 0.0;
        for (double& x : v) {
            x *= scale;
            check += x * x;
        }
        assert(check < 1.0); // type-one rows live strictly inside the unit ball
        (void)check;
        return v;
    }
    case RowKind::BetaTwo: {
        const double w = rng.chi_squared(beta * row.omega());
        const double scale = 1.0 / std::sqrt(w);
        for (double& x : v) x = scale * rng.normal();
        return v;
    }
    }
    throw std::logic_error("sample_row: unreachable");
}

MatrixSample sample_matrix(const EnsembleSpec& spec, RngStream& rng) {
    std::vector<std::vector<double>> rows;
    rows.reserve(spec.n());
    for (const auto& r : spec.rows())
        rows.push_back(sample_row(r, spec.n(), spec.field(), rng));
    return embed(spec.n(), spec.field().beta(), rows);
}

MatrixSample sample_shifted(const ShiftedGaussianSpec& spec, RngStream& rng) {
    const int n = spec.n();
    const int beta = spec.field().beta();
    const RowDistribution g = RowDistribution::gaussian(spec.sigma());
    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    for (int l = 0; l < n; ++l)
        rows.push_back(sample_row(g, n, spec.field(), rng));
    MatrixSample s = embed(n, beta, rows);
    s.embedding /= spec.c();
    s.embedding += Eigen::MatrixXcd::Identity(s.embedding.rows(), s.embedding.cols());
    return s;
}

double sample_first_column_norm_sq(const EnsembleSpec& spec, RngStream& rng) {
    const int n = spec.n();
    const double beta = spec.field().beta();
    double total = 0.0;
    for (const auto& r : spec.rows()) {
        switch (r.kind()) {
        case RowKind::Gaussian: {
            const double s2 = r.sigma() * r.sigma();
            total += s2 * rng.chi_squared(beta);
            break;
        }
        case RowKind::BetaOne:
            // single-entry marginal: |x|^2 ~ Beta(beta/2, beta(n-1+nu)/2)
            total += rng.beta(0.5 * beta, 0.5 * beta * (n - 1 + r.nu()));
            break;
        case RowKind::BetaTwo:
            // single-entry marginal: |x|^2 ~ BetaPrime(beta/2, beta omega/2)
            total += rng.beta_prime(0.5 * beta, 0.5 * beta * r.omega());
            break;
        }
    }
    return total;
}

double sample_first_column_norm_sq(const ShiftedGaussianSpec& spec, RngStream& rng) {
    const int d = spec.field().beta() * spec.n();
    const double s_over_c = spec.sigma() / spec.c();
    // first real component carries the unit shift from I
    double x = 1.0 + s_over_c * rng.normal();
    double total = x * x;
    for (int j = 1; j < d; ++j) {
        x = s_over_c * rng.normal();
        total += x * x;
    }
    return total;
}

} // namespace ensembles
} // namespace isolyap
