#ifndef ISOLYAP_ENSEMBLES_HPP
#define ISOLYAP_ENSEMBLES_HPP

// Row-isotropic random matrix ensembles over the real, complex, and
// quaternion fields (beta = 1, 2, 4).  Every row is drawn from a density
// that depends on the row only through its length: Gaussian rows, compactly
// supported "type one" Beta rows (support inside the unit ball), and
// heavy-tailed "type two" Beta rows.  Quaternion matrices are stored through
// their 2N x 2N complex embedding with the block convention
//   q = (x1,x2,x3,x4)  ->  [ z  w ; -conj(w)  conj(z) ],  z = x1+i x2, w = x3+i x4.

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

namespace isolyap {
namespace ensembles {

// Number of real components per matrix entry: 1 (real), 2 (complex),
// 4 (quaternion).
class FieldIndex {
public:
    explicit FieldIndex(int beta);
    int beta() const noexcept { return beta_; }
    // linear dimension of the complex embedding of an n x n matrix
    int embedding_dim(int n) const noexcept { return beta_ == 4 ? 2 * n : n; }
    bool operator==(const FieldIndex& o) const noexcept { return beta_ == o.beta_; }

private:
    int beta_;
};

enum class RowKind { Gaussian, BetaOne, BetaTwo };

// One row's radial weight.  Exactly one parameter is populated per tag:
// sigma (Gaussian component deviation), nu (type-one exponent), or
// omega (type-two tail index); all must be positive.
class RowDistribution {
public:
    static RowDistribution gaussian(double sigma);
    static RowDistribution beta_one(double nu);
    static RowDistribution beta_two(double omega);

    RowKind kind() const noexcept { return kind_; }
    double sigma() const;
    double nu() const;
    double omega() const;

private:
    RowDistribution(RowKind kind, double param) : kind_(kind), param_(param) {}
    RowKind kind_;
    double param_;
};

// An n x n matrix with independent isotropic rows sharing one tag
// (mixed tags are rejected) but possibly distinct parameters.
class EnsembleSpec {
public:
    EnsembleSpec(FieldIndex field, std::vector<RowDistribution> rows);
    const FieldIndex& field() const noexcept { return field_; }
    int n() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<RowDistribution>& rows() const noexcept { return rows_; }
    RowKind kind() const noexcept { return rows_.front().kind(); }

private:
    FieldIndex field_;
    std::vector<RowDistribution> rows_;
};

// The additively shifted Gaussian ensemble I + X/c with X an iid field
// Gaussian of component deviation sigma.  lambda = (c/sigma)^2 is the
// noncentrality of the first column's scaled squared norm; ctilde is
// exactly lambda/2.
class ShiftedGaussianSpec {
public:
    ShiftedGaussianSpec(FieldIndex field, int n, double c, double sigma);
    const FieldIndex& field() const noexcept { return field_; }
    int n() const noexcept { return n_; }
    double c() const noexcept { return c_; }
    double sigma() const noexcept { return sigma_; }
    double lambda() const noexcept { const double r = c_ / sigma_; return r * r; }
    double ctilde() const noexcept { return 0.5 * lambda(); }

private:
    FieldIndex field_;
    int n_;
    double c_, sigma_;
};

// Either kind of matrix specification.
using AnySpec = std::variant<EnsembleSpec, ShiftedGaussianSpec>;

// A sampled matrix, held as its complex embedding (dim = n for beta 1 and 2,
// dim = 2n for beta 4; imaginary parts identically zero for beta = 1).
struct MatrixSample {
    int n = 0;
    int beta = 1;
    Eigen::MatrixXcd embedding;
};

// Deterministic pseudo-random stream.  Parallel consumers derive per-unit
// streams with derive_stream_seed(master, index) so results never depend on
// scheduling.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : eng_(seed) {}
    double normal() { return std::normal_distribution<double>()(eng_); }
    double gamma(double shape) { return std::gamma_distribution<double>(shape, 1.0)(eng_); }
    double chi_squared(double dof) { return 2.0 * gamma(0.5 * dof); }
    double beta(double a, double b) {
        const double x = gamma(a);
        return x / (x + gamma(b));
    }
    double beta_prime(double a, double b) { return gamma(a) / gamma(b); }
    double uniform() { return std::uniform_real_distribution<double>()(eng_); }

private:
    std::mt19937_64 eng_;
};

std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index);

// One row as beta*n real components (consecutive groups of beta components
// form one field entry).  BetaOne rows satisfy |row|^2 < 1 by construction
// (asserted), BetaTwo rows are v/sqrt(w) with w ~ chi^2_{beta*omega}.
std::vector<double> sample_row(const RowDistribution& row, int n,
                               const FieldIndex& field, RngStream& rng);

MatrixSample sample_matrix(const EnsembleSpec& spec, RngStream& rng);
MatrixSample sample_shifted(const ShiftedGaussianSpec& spec, RngStream& rng);

// Squared norm of the first column, drawn entry-by-entry from the marginal
// law of a single entry (no full matrix is materialized).
double sample_first_column_norm_sq(const EnsembleSpec& spec, RngStream& rng);
double sample_first_column_norm_sq(const ShiftedGaussianSpec& spec, RngStream& rng);

} // namespace ensembles
} // namespace isolyap

#endif
