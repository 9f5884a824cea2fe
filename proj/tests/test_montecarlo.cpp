// Tests for the Monte-Carlo estimators.  Statistical agreement with the
// closed-form evaluators is asserted through z-scores with wide gates
// (|z| <= 4.5 at fixed seeds, so failures indicate real defects rather than
// unlucky draws); determinism and validation are asserted exactly.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isolyap/ensembles.hpp"
#include "isolyap/errors.hpp"
#include "isolyap/exact.hpp"
#include "isolyap/mhg.hpp"
#include "isolyap/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace isolyap::montecarlo;
using isolyap::DivergentMomentError;
using isolyap::ensembles::AnySpec;
using isolyap::ensembles::EnsembleSpec;
using isolyap::ensembles::FieldIndex;
using isolyap::ensembles::RowDistribution;
using isolyap::ensembles::ShiftedGaussianSpec;

namespace {

EnsembleSpec gaussian_spec(int beta, std::vector<double> sigmas) {
    std::vector<RowDistribution> rows;
    for (double s : sigmas) rows.push_back(RowDistribution::gaussian(s));
    return {FieldIndex(beta), std::move(rows)};
}

EnsembleSpec beta_one_spec(int beta, std::vector<double> nus) {
    std::vector<RowDistribution> rows;
    for (double v : nus) rows.push_back(RowDistribution::beta_one(v));
    return {FieldIndex(beta), std::move(rows)};
}

EnsembleSpec beta_two_spec(int beta, std::vector<double> omegas) {
    std::vector<RowDistribution> rows;
    for (double w : omegas) rows.push_back(RowDistribution::beta_two(w));
    return {FieldIndex(beta), std::move(rows)};
}

double zscore(const MCEstimate& est, double truth) {
    REQUIRE(est.std_error > 0.0);
    return std::abs(est.value - truth) / est.std_error;
}

} // namespace

TEST_CASE("estimators are deterministic in the master seed") {
    const AnySpec spec = gaussian_spec(1, {1.0, 0.5, 2.0});
    const MCEstimate a = estimate_mu1_column(spec, 5000, 42);
    const MCEstimate b = estimate_mu1_column(spec, 5000, 42);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    CHECK(a.samples == 5000);
    CHECK(a.master_seed == 42);
    const MCEstimate c = estimate_mu1_column(spec, 5000, 43);
    CHECK(a.value != c.value);

    const EnsembleSpec ens = gaussian_spec(2, {1.0, 1.0});
    CHECK(estimate_det_moment(ens, 1.0, 4000, 7).value ==
          estimate_det_moment(ens, 1.0, 4000, 7).value);
    CHECK(estimate_det_moment(ens, 1.0, 4000, 7).value !=
          estimate_det_moment(ens, 1.0, 4000, 8).value);

    const SpectrumEstimate s1 = estimate_spectrum(spec, 200, 4, 11);
    const SpectrumEstimate s2 = estimate_spectrum(spec, 200, 4, 11);
    REQUIRE(s1.exponents.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(s1.exponents[i].value == s2.exponents[i].value);
}

TEST_CASE("estimate_det_moment: exact special cases and variance gates") {
    const EnsembleSpec g = gaussian_spec(1, {1.0, 0.5});
    const MCEstimate zero = estimate_det_moment(g, 0.0, 1000, 1);
    CHECK(zero.value == 1.0);
    CHECK(zero.std_error == 0.0);
    // 2*alpha <= -beta/2 makes even the moment itself divergent
    CHECK_THROWS_AS(estimate_det_moment(g, -0.3, 1000, 1), DivergentMomentError);
    // heavy-tailed rows: estimator variance in play for 2*alpha near the wall
    const EnsembleSpec h = beta_two_spec(1, {3.0, 5.0});
    CHECK_THROWS_AS(estimate_det_moment(h, 0.8, 1000, 1), DivergentMomentError);
    CHECK_NOTHROW(estimate_det_moment(h, 0.7, 1000, 1));
}

TEST_CASE("estimate_mu1_column agrees with the closed forms") {
    const long m = 200000;
    const std::vector<AnySpec> specs = {
        gaussian_spec(1, {1.0, 0.5}),
        beta_one_spec(2, {0.5, 1.5}),
        beta_two_spec(1, {3.0, 5.0}),
        ShiftedGaussianSpec(FieldIndex(1), 2, 2.0, 1.0),
    };
    std::uint64_t seed = 2026;
    for (const AnySpec& spec : specs) {
        const double truth = isolyap::exact::mu1(spec);
        const MCEstimate est = estimate_mu1_column(spec, m, seed++);
        CAPTURE(truth);
        CAPTURE(est.value);
        CAPTURE(est.std_error);
        CHECK(zscore(est, truth) <= 4.5);
        CHECK(est.std_error < 0.05);
    }
}

TEST_CASE("estimate_det_moment agrees with the closed forms") {
    const long m = 200000;
    struct Case {
        EnsembleSpec spec;
        double alpha;
    };
    const std::vector<Case> cases = {
        {gaussian_spec(2, {1.0, 1.0, 2.0}), 1.0},
        {beta_one_spec(4, {1.0, 1.0}), 1.0},
        {beta_two_spec(1, {20.0, 24.0}), 1.0},
    };
    std::uint64_t seed = 99;
    for (const Case& c : cases) {
        const double truth = isolyap::exact::det_moment(c.spec, c.alpha);
        const MCEstimate est = estimate_det_moment(c.spec, c.alpha, m, seed++);
        CAPTURE(truth);
        CAPTURE(est.value);
        CAPTURE(est.std_error);
        CHECK(zscore(est, truth) <= 4.5);
    }
}

TEST_CASE("estimate_wishart_det_moment agrees with the partition series") {
    const FieldIndex f1(1);
    // integer order, hand value 26
    const MCEstimate a = estimate_wishart_det_moment(2, 2, f1, 1.0, 2.0, 1.0,
                                                     200000, 314159);
    CHECK(zscore(a, 26.0) <= 4.5);
    // non-integer order against the convergent series
    const double truth =
        isolyap::mhg::noncentral_wishart_det_moment(2, 1, f1, 1.0, 2.0, 0.7);
    const MCEstimate b =
        estimate_wishart_det_moment(2, 1, f1, 1.0, 2.0, 0.7, 200000, 271828);
    CAPTURE(truth);
    CAPTURE(b.value);
    CHECK(zscore(b, truth) <= 4.5);
}

TEST_CASE("estimate_spectrum: real Gaussian spectrum and partial sums") {
    const AnySpec spec = gaussian_spec(1, {1.0, 1.0, 1.0});
    const SpectrumEstimate est = estimate_spectrum(spec, 2000, 20, 5150);
    REQUIRE(est.exponents.size() == 3);
    REQUIRE(est.partial_sums.size() == 3);
    CHECK(est.steps_per_trial == 2000);
    CHECK(est.trials == 20);
    const std::vector<double> truth =
        isolyap::exact::lyapunov_spectrum_gaussian(3, FieldIndex(1), 1.0);
    for (int i = 0; i < 3; ++i) {
        CAPTURE(i);
        CAPTURE(truth[i]);
        CAPTURE(est.exponents[i].value);
        CHECK(zscore(est.exponents[i], truth[i]) <= 4.0);
    }
    for (int k = 1; k <= 3; ++k) {
        const double psum = isolyap::exact::lyapunov_partial_sum_gaussian(
            3, k, FieldIndex(1), 1.0);
        CAPTURE(k);
        CAPTURE(psum);
        CHECK(zscore(est.partial_sums[k - 1], psum) <= 4.0);
    }
    // ordering and coherence between the two views of the same trials
    CHECK(est.exponents[0].value >= est.exponents[1].value);
    CHECK(est.exponents[1].value >= est.exponents[2].value);
    CHECK(std::abs(est.partial_sums[0].value - est.exponents[0].value) <= 1e-12);
    const double sum3 =
        est.exponents[0].value + est.exponents[1].value + est.exponents[2].value;
    CHECK(std::abs(est.partial_sums[2].value - sum3) <= 1e-12);
    CHECK(zscore(est.partial_sums[2],
                 isolyap::exact::lyapunov_sum(gaussian_spec(1, {1.0, 1.0, 1.0}))) <=
          4.0);
}

TEST_CASE("estimate_spectrum: quaternion pairs collapse to n exponents") {
    const AnySpec spec = gaussian_spec(4, {1.0, 1.0});
    const SpectrumEstimate est = estimate_spectrum(spec, 2000, 15, 777);
    REQUIRE(est.exponents.size() == 2); // 2N embedding rows, N collapsed pairs
    const std::vector<double> truth =
        isolyap::exact::lyapunov_spectrum_gaussian(2, FieldIndex(4), 1.0);
    for (int i = 0; i < 2; ++i) {
        CAPTURE(i);
        CHECK(zscore(est.exponents[i], truth[i]) <= 4.0);
    }
}

TEST_CASE("estimate_spectrum: bounded-row ensemble exponent sum") {
    const EnsembleSpec ens = beta_one_spec(1, {1.0, 2.0});
    const SpectrumEstimate est = estimate_spectrum(AnySpec(ens), 1000, 15, 1234);
    REQUIRE(est.partial_sums.size() == 2);
    CHECK(zscore(est.partial_sums[1], isolyap::exact::lyapunov_sum(ens)) <= 4.0);
}

TEST_CASE("estimate_spectrum: validation") {
    const AnySpec spec = gaussian_spec(1, {1.0});
    CHECK_THROWS_AS(estimate_spectrum(spec, 100, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_spectrum(spec, 0, 4, 1), std::invalid_argument);
}
