// Command-line driver: exact evaluation, Monte-Carlo estimation, validation
// suites comparing the two, and one-parameter sweeps.
//
// Exit codes: 0 success, 1 a validation gate failed, 2 configuration or
// parse error, 3 numerical computation failure.

#include "isolyap/ensembles.hpp"
#include "isolyap/errors.hpp"
#include "isolyap/exact.hpp"
#include "isolyap/mhg.hpp"
#include "isolyap/montecarlo.hpp"
#include "isolyap/spec_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace {

using isolyap::ensembles::AnySpec;
using isolyap::ensembles::EnsembleSpec;
using isolyap::ensembles::FieldIndex;
using isolyap::ensembles::RowDistribution;
using isolyap::ensembles::ShiftedGaussianSpec;
using nlohmann::json;

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct Options {
    std::string spec_path;
    std::string quantity;
    std::string suite;
    std::string out_path;
    std::string format = "json";
    std::string param;
    std::vector<double> values;
    double alpha = 1.0;
    int k = 0;
    long m = 10000;
    int trials = 50;
    long samples = 1000000;
    std::uint64_t seed = 20260825ULL;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n')
            std::cout << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::invalid_argument("cannot open output path: " + out_path);
        out << text;
        if (text.empty() || text.back() != '\n')
            out << '\n';
    }
}

AnySpec load_spec(const Options& opt) {
    if (opt.spec_path.empty())
        throw std::invalid_argument("--spec is required for this command");
    return isolyap::ensembles::spec_from_file(opt.spec_path);
}

const EnsembleSpec& as_ensemble(const AnySpec& spec) {
    if (const auto* e = std::get_if<EnsembleSpec>(&spec))
        return *e;
    throw std::invalid_argument(
        "this quantity needs a row-ensemble spec (one with \"rows\")");
}

const ShiftedGaussianSpec& as_shifted(const AnySpec& spec) {
    if (const auto* s = std::get_if<ShiftedGaussianSpec>(&spec))
        return *s;
    throw std::invalid_argument(
        "this quantity needs a shifted spec (one with \"c\" and \"sigma\")");
}

double equal_sigma(const EnsembleSpec& spec) {
    if (spec.kind() != isolyap::ensembles::RowKind::Gaussian)
        throw std::invalid_argument("quantity defined for Gaussian rows only");
    const double sigma = spec.rows().front().sigma();
    for (const auto& row : spec.rows())
        if (row.sigma() != sigma)
            throw std::invalid_argument(
                "quantity defined for equal-variance Gaussian rows only");
    return sigma;
}

std::string render(const json& payload, const Options& opt,
                   const std::vector<std::array<std::string, 3>>& csv_rows) {
    if (opt.format == "json")
        return payload.dump(2);
    std::ostringstream os;
    os << "quantity,value,error\n";
    for (const auto& row : csv_rows)
        os << row[0] << ',' << row[1] << ',' << row[2] << '\n';
    return os.str();
}

// ---- exact ----------------------------------------------------------------

int run_exact(const Options& opt) {
    const AnySpec spec = load_spec(opt);
    json payload;
    std::vector<std::array<std::string, 3>> rows;
    payload["engine"] = "exact";
    payload["quantity"] = opt.quantity;

    if (opt.quantity == "det-moment") {
        const double value = isolyap::exact::det_moment(as_ensemble(spec), opt.alpha);
        payload["method"] = "closed-form";
        payload["alpha"] = opt.alpha;
        payload["value"] = value;
        payload["est_abs_error"] = 0.0;
        rows.push_back({"det-moment", fmt17(value), fmt17(0.0)});
    } else if (opt.quantity == "lyap-sum") {
        const EnsembleSpec& ens = as_ensemble(spec);
        double value;
        if (opt.k > 0) {
            value = isolyap::exact::lyapunov_partial_sum_gaussian(
                ens.n(), opt.k, ens.field(), equal_sigma(ens));
            payload["k"] = opt.k;
        } else {
            value = isolyap::exact::lyapunov_sum(ens);
        }
        payload["method"] = "closed-form";
        payload["value"] = value;
        payload["est_abs_error"] = 0.0;
        rows.push_back({"lyap-sum", fmt17(value), fmt17(0.0)});
    } else if (opt.quantity == "mu1") {
        isolyap::exact::EvalDiagnostics diag;
        const double value = isolyap::exact::mu1(spec, &diag);
        payload["method"] = "quadrature";
        payload["value"] = value;
        payload["est_abs_error"] = diag.est_abs_error;
        payload["evaluations"] = diag.evaluations;
        payload["warnings"] = diag.warnings;
        rows.push_back({"mu1", fmt17(value), fmt17(diag.est_abs_error)});
    } else if (opt.quantity == "spectrum") {
        const EnsembleSpec& ens = as_ensemble(spec);
        const auto mus = isolyap::exact::lyapunov_spectrum_gaussian(
            ens.n(), ens.field(), equal_sigma(ens));
        payload["method"] = "closed-form";
        payload["exponents"] = mus;
        for (std::size_t i = 0; i < mus.size(); ++i)
            rows.push_back({"exponent_" + std::to_string(i + 1), fmt17(mus[i]),
                            fmt17(0.0)});
    } else if (opt.quantity == "wishart-moment") {
        const ShiftedGaussianSpec& sh = as_shifted(spec);
        if (opt.k <= 0)
            throw std::invalid_argument("wishart-moment requires --k >= 1");
        isolyap::mhg::MhgResult info;
        const double value = isolyap::mhg::noncentral_wishart_det_moment(
            sh.n(), opt.k, sh.field(), sh.sigma(), sh.c(), opt.alpha, &info);
        payload["method"] = "series";
        payload["alpha"] = opt.alpha;
        payload["k"] = opt.k;
        payload["value"] = value;
        payload["series_terminated"] = info.terminated;
        payload["series_weight_used"] = info.weight_used;
        payload["est_abs_error"] = info.tail_estimate;
        rows.push_back({"wishart-moment", fmt17(value), fmt17(info.tail_estimate)});
    } else {
        throw std::invalid_argument("unknown quantity: " + opt.quantity);
    }

    emit(render(payload, opt, rows), opt.out_path);
    return 0;
}

// ---- mc --------------------------------------------------------------------

json estimate_json(const isolyap::montecarlo::MCEstimate& e) {
    return json{{"value", e.value},
                {"std_error", e.std_error},
                {"samples", e.samples},
                {"seed", e.master_seed}};
}

int run_mc(const Options& opt) {
    const AnySpec spec = load_spec(opt);
    json payload;
    std::vector<std::array<std::string, 3>> rows;
    payload["engine"] = "mc";
    payload["quantity"] = opt.quantity;
    payload["seed"] = opt.seed;

    if (opt.quantity == "mu1") {
        const auto est =
            isolyap::montecarlo::estimate_mu1_column(spec, opt.samples, opt.seed);
        payload.update(estimate_json(est));
        rows.push_back({"mu1", fmt17(est.value), fmt17(est.std_error)});
    } else if (opt.quantity == "spectrum" || opt.quantity == "lyap-sum") {
        const auto est = isolyap::montecarlo::estimate_spectrum(spec, opt.m,
                                                                opt.trials, opt.seed);
        if (opt.quantity == "lyap-sum") {
            const auto& total = est.partial_sums.back();
            payload.update(estimate_json(total));
            payload["trials"] = est.trials;
            payload["steps_per_trial"] = est.steps_per_trial;
            rows.push_back({"lyap-sum", fmt17(total.value), fmt17(total.std_error)});
        } else {
            payload["trials"] = est.trials;
            payload["steps_per_trial"] = est.steps_per_trial;
            json exps = json::array(), sums = json::array();
            for (std::size_t i = 0; i < est.exponents.size(); ++i) {
                exps.push_back(estimate_json(est.exponents[i]));
                sums.push_back(estimate_json(est.partial_sums[i]));
                rows.push_back({"exponent_" + std::to_string(i + 1),
                                fmt17(est.exponents[i].value),
                                fmt17(est.exponents[i].std_error)});
            }
            for (std::size_t i = 0; i < est.partial_sums.size(); ++i)
                rows.push_back({"partial_sum_" + std::to_string(i + 1),
                                fmt17(est.partial_sums[i].value),
                                fmt17(est.partial_sums[i].std_error)});
            payload["exponents"] = exps;
            payload["partial_sums"] = sums;
        }
    } else if (opt.quantity == "det-moment") {
        const auto est = isolyap::montecarlo::estimate_det_moment(
            as_ensemble(spec), opt.alpha, opt.samples, opt.seed);
        payload["alpha"] = opt.alpha;
        payload.update(estimate_json(est));
        rows.push_back({"det-moment", fmt17(est.value), fmt17(est.std_error)});
    } else if (opt.quantity == "wishart-moment") {
        const ShiftedGaussianSpec& sh = as_shifted(spec);
        if (opt.k <= 0)
            throw std::invalid_argument("wishart-moment requires --k >= 1");
        const auto est = isolyap::montecarlo::estimate_wishart_det_moment(
            sh.n(), opt.k, sh.field(), sh.sigma(), sh.c(), opt.alpha, opt.samples,
            opt.seed);
        payload["alpha"] = opt.alpha;
        payload["k"] = opt.k;
        payload.update(estimate_json(est));
        rows.push_back({"wishart-moment", fmt17(est.value), fmt17(est.std_error)});
    } else {
        throw std::invalid_argument("unknown quantity: " + opt.quantity);
    }

    emit(render(payload, opt, rows), opt.out_path);
    return 0;
}

// ---- validate ---------------------------------------------------------------

struct Check {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double metric = 0.0; // |difference| or |z|-score
    double gate = 0.0;
    std::string metric_kind; // "abs_diff", "rel_diff", or "z"
    bool pass = false;
};

json check_json(const Check& c) {
    return json{{"check", c.name},     {"lhs", c.lhs},
                {"rhs", c.rhs},        {"metric", c.metric},
                {"metric_kind", c.metric_kind}, {"gate", c.gate},
                {"pass", c.pass}};
}

Check abs_check(const std::string& name, double lhs, double rhs, double gate) {
    Check c{name, lhs, rhs, std::abs(lhs - rhs), gate, "abs_diff", false};
    c.pass = c.metric <= gate;
    return c;
}

Check rel_check(const std::string& name, double lhs, double rhs, double gate) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    Check c{name, lhs, rhs,
            scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs), gate,
            "rel_diff", false};
    c.pass = c.metric <= gate;
    return c;
}

Check z_check(const std::string& name, double exact_value,
              const isolyap::montecarlo::MCEstimate& est, double gate) {
    const double z = est.std_error > 0.0
                         ? std::abs(est.value - exact_value) / est.std_error
                         : (est.value == exact_value ? 0.0 : HUGE_VAL);
    Check c{name, exact_value, est.value, z, gate, "z", false};
    c.pass = z <= gate;
    return c;
}

std::vector<Check> suite_formula_equivalence() {
    std::vector<Check> checks;
    const double grid[4][4] = {// n, n0, b1, b2 (b2 <= b1)
                               {2, 1, 2.0, 1.0},
                               {4, 1, 3.0, 0.5},
                               {5, 3, 1.5, 1.0},
                               {6, 2, 4.0, 2.0}};
    for (int beta : {1, 2, 4}) {
        const FieldIndex field(beta);
        for (const auto& g : grid) {
            const int n = static_cast<int>(g[0]);
            const int n0 = static_cast<int>(g[1]);
            isolyap::exact::TwoBlockGaussianSpec tb(field, n, n0, g[2], g[3]);
            std::vector<double> b(static_cast<std::size_t>(n0), g[2]);
            b.resize(static_cast<std::size_t>(n), g[3]);
            const double lhs = isolyap::exact::mu1_gaussian_two_block(tb);
            const double rhs = isolyap::exact::mu1_gaussian_general(b, field);
            checks.push_back(abs_check("two-block-vs-general beta=" +
                                           std::to_string(beta) + " n=" +
                                           std::to_string(n) + " n0=" +
                                           std::to_string(n0),
                                       lhs, rhs, 1e-8));
        }
    }
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
        const double lhs = isolyap::exact::mu1_shifted(2, FieldIndex(1), lambda);
        const double rhs = isolyap::exact::mu1_shifted_2x2(0.5 * lambda);
        checks.push_back(abs_check("shifted-2x2 lambda=" + fmt17(lambda), lhs, rhs,
                                   1e-8));
    }
    for (double t : {0.5, 1.0, 2.0}) {
        isolyap::exact::AsymptoticRequest req;
        req.variant = isolyap::exact::AsymptoticVariant::OneSoftRow;
        const int n = 100; // value is n-independent under this scaling
        req.two_block = isolyap::exact::TwoBlockGaussianSpec(
            FieldIndex(1), n, n - 1, 0.5 * n, 0.5 * t);
        const double lhs = isolyap::exact::mu1_asymptotic(req).value;
        const double rhs = isolyap::exact::mu1_one_soft_row_limit(t);
        checks.push_back(
            abs_check("one-soft-row-vs-limit t=" + fmt17(t), lhs, rhs, 1e-6));
    }
    return checks;
}

std::vector<AnySpec> crosscheck_specs() {
    using isolyap::ensembles::RowDistribution;
    auto G = [](double s) { return RowDistribution::gaussian(s); };
    auto B1 = [](double v) { return RowDistribution::beta_one(v); };
    auto B2 = [](double w) { return RowDistribution::beta_two(w); };
    std::vector<AnySpec> specs;
    specs.emplace_back(EnsembleSpec(FieldIndex(1), {G(1.0)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(1), {G(1.0), G(0.5), G(2.0)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(2), {G(1.0), G(1.0)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(4), {G(0.7), G(1.3)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(1), {B1(1.0)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(1), {B1(1.0), B1(2.5)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(2), {B1(0.5), B1(1.5), B1(3.0)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(4), {B1(2.0), B1(1.0)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(1), {B2(3.0)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(2), {B2(2.0), B2(4.0)}));
    specs.emplace_back(EnsembleSpec(FieldIndex(4), {B2(1.5), B2(2.5)}));
    specs.emplace_back(ShiftedGaussianSpec(FieldIndex(1), 2, 2.0, 1.0));
    return specs;
}

std::vector<Check> suite_mu1_crosscheck(long samples, std::uint64_t seed) {
    std::vector<Check> checks;
    const auto specs = crosscheck_specs();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const double exact_value = isolyap::exact::mu1(specs[i]);
        const auto est = isolyap::montecarlo::estimate_mu1_column(
            specs[i], samples, seed + static_cast<std::uint64_t>(i));
        checks.push_back(z_check("mu1-crosscheck spec " + std::to_string(i + 1),
                                 exact_value, est, 4.0));
    }
    return checks;
}

std::vector<Check> suite_det_moment(long samples, std::uint64_t seed) {
    using isolyap::ensembles::RowDistribution;
    auto G = [](double s) { return RowDistribution::gaussian(s); };
    auto B1 = [](double v) { return RowDistribution::beta_one(v); };
    auto B2 = [](double w) { return RowDistribution::beta_two(w); };
    std::vector<EnsembleSpec> specs;
    specs.emplace_back(FieldIndex(1), std::vector<RowDistribution>{G(1.0), G(0.5)});
    specs.emplace_back(FieldIndex(2),
                       std::vector<RowDistribution>{G(1.0), G(1.0), G(2.0)});
    specs.emplace_back(FieldIndex(4), std::vector<RowDistribution>{G(0.8), G(1.2)});
    specs.emplace_back(FieldIndex(1), std::vector<RowDistribution>{B1(1.0), B1(2.0)});
    specs.emplace_back(FieldIndex(2), std::vector<RowDistribution>{B1(0.5), B1(1.5)});
    specs.emplace_back(FieldIndex(4), std::vector<RowDistribution>{B1(1.0), B1(1.0)});
    specs.emplace_back(FieldIndex(1),
                       std::vector<RowDistribution>{B2(10.0), B2(12.0)});
    specs.emplace_back(FieldIndex(2), std::vector<RowDistribution>{B2(6.0), B2(8.0)});
    specs.emplace_back(FieldIndex(4), std::vector<RowDistribution>{B2(4.0), B2(5.0)});

    std::vector<Check> checks;
    std::uint64_t salt = 0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const std::string tag = "spec " + std::to_string(i + 1);
        for (double alpha : {1.0, 2.0}) {
            const double exact_value = isolyap::exact::det_moment(specs[i], alpha);
            const auto est = isolyap::montecarlo::estimate_det_moment(
                specs[i], alpha, samples, seed + salt++);
            checks.push_back(z_check("det-moment mc " + tag + " alpha=" +
                                         fmt17(alpha),
                                     exact_value, est, 4.0));
        }
        const auto factors = isolyap::exact::det_distribution(specs[i]);
        for (double alpha : {-0.2, 0.5, 1.0, 1.7, 2.0}) {
            const double lhs = isolyap::exact::det_moment(specs[i], alpha);
            const double rhs = isolyap::exact::factorization_moment(factors, alpha);
            checks.push_back(rel_check("det-moment factorization " + tag +
                                           " alpha=" + fmt17(alpha),
                                       lhs, rhs, 1e-12));
        }
    }
    return checks;
}

int run_validate(const Options& opt) {
    std::vector<Check> checks;
    if (opt.suite == "formula-equivalence") {
        checks = suite_formula_equivalence();
    } else if (opt.suite == "mu1-crosscheck") {
        checks = suite_mu1_crosscheck(opt.samples, opt.seed);
    } else if (opt.suite == "det-moment") {
        checks = suite_det_moment(opt.samples, opt.seed);
    } else {
        throw std::invalid_argument(
            "unknown suite: " + opt.suite +
            " (expected formula-equivalence, mu1-crosscheck, or det-moment)");
    }
    json arr = json::array();
    bool all_pass = true;
    for (const auto& c : checks) {
        arr.push_back(check_json(c));
        all_pass = all_pass && c.pass;
    }
    json payload{{"suite", opt.suite},
                 {"checks", arr},
                 {"n_checks", checks.size()},
                 {"passed", all_pass}};
    emit(payload.dump(2), opt.out_path);
    return all_pass ? 0 : 1;
}

// ---- sweep ------------------------------------------------------------------

int run_sweep(const Options& opt) {
    if (opt.param.empty() || opt.values.empty())
        throw std::invalid_argument("sweep requires --param and --values");
    const AnySpec spec = load_spec(opt);
    std::ostringstream os;
    os << "param,value,quantity,estimate,error\n";

    for (double v : opt.values) {
        double estimate = 0.0, error = 0.0;
        if (opt.param == "lambda") {
            if (opt.quantity != "mu1")
                throw std::invalid_argument("--param lambda supports --quantity mu1");
            const ShiftedGaussianSpec& sh = as_shifted(spec);
            if (!(v > 0.0))
                throw std::invalid_argument("lambda values must be positive");
            const ShiftedGaussianSpec moved(sh.field(), sh.n(),
                                            sh.sigma() * std::sqrt(v), sh.sigma());
            isolyap::exact::EvalDiagnostics diag;
            estimate = isolyap::exact::mu1(AnySpec(moved), &diag);
            error = diag.est_abs_error;
        } else if (opt.param == "alpha") {
            if (opt.quantity == "det-moment") {
                estimate = isolyap::exact::det_moment(as_ensemble(spec), v);
                error = 0.0;
            } else if (opt.quantity == "wishart-moment") {
                const ShiftedGaussianSpec& sh = as_shifted(spec);
                if (opt.k <= 0)
                    throw std::invalid_argument("wishart-moment requires --k >= 1");
                isolyap::mhg::MhgResult info;
                estimate = isolyap::mhg::noncentral_wishart_det_moment(
                    sh.n(), opt.k, sh.field(), sh.sigma(), sh.c(), v, &info);
                error = info.tail_estimate;
            } else {
                throw std::invalid_argument(
                    "--param alpha supports det-moment or wishart-moment");
            }
        } else {
            throw std::invalid_argument("unknown sweep parameter: " + opt.param +
                                        " (expected lambda or alpha)");
        }
        os << opt.param << ',' << fmt17(v) << ',' << opt.quantity << ','
           << fmt17(estimate) << ',' << fmt17(error) << '\n';
    }
    emit(os.str(), opt.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form and Monte-Carlo evaluation of determinant "
                 "moments and Lyapunov exponents of isotropic random matrix "
                 "products"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* cmd, bool needs_spec) {
        if (needs_spec)
            cmd->add_option("--spec", opt.spec_path, "path to a JSON matrix spec");
        cmd->add_option("--out", opt.out_path, "write output to this path");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", opt.seed, "master RNG seed");
    };

    CLI::App* exact_cmd =
        app.add_subcommand("exact", "evaluate a quantity in closed form");
    add_common(exact_cmd, true);
    exact_cmd->add_option("--quantity", opt.quantity,
                          "det-moment|lyap-sum|mu1|spectrum|wishart-moment")
        ->required();
    exact_cmd->add_option("--alpha", opt.alpha, "moment order");
    exact_cmd->add_option("--k", opt.k, "partial-product depth");

    CLI::App* mc_cmd = app.add_subcommand("mc", "estimate a quantity by sampling");
    add_common(mc_cmd, true);
    mc_cmd->add_option("--quantity", opt.quantity,
                       "det-moment|lyap-sum|mu1|spectrum|wishart-moment")
        ->required();
    mc_cmd->add_option("--alpha", opt.alpha, "moment order");
    mc_cmd->add_option("--k", opt.k, "partial-product depth");
    mc_cmd->add_option("--samples", opt.samples, "i.i.d. sample count");
    mc_cmd->add_option("--m", opt.m, "product length per trial (spectrum)");
    mc_cmd->add_option("--trials", opt.trials, "independent trials (spectrum)");

    CLI::App* validate_cmd = app.add_subcommand(
        "validate", "run a cross-validation suite and report per-check JSON");
    add_common(validate_cmd, false);
    validate_cmd
        ->add_option("--suite", opt.suite,
                     "formula-equivalence|mu1-crosscheck|det-moment")
        ->required();
    validate_cmd->add_option("--samples", opt.samples,
                             "sample count for Monte-Carlo suites");

    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "sweep one parameter, emitting CSV");
    add_common(sweep_cmd, true);
    sweep_cmd->add_option("--quantity", opt.quantity, "quantity to evaluate")
        ->required();
    sweep_cmd->add_option("--param", opt.param, "parameter name (lambda|alpha)")
        ->required();
    sweep_cmd
        ->add_option("--values", opt.values, "comma-separated parameter values")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--k", opt.k, "partial-product depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (exact_cmd->parsed())
            return run_exact(opt);
        if (mc_cmd->parsed())
            return run_mc(opt);
        if (validate_cmd->parsed())
            return run_validate(opt);
        return run_sweep(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << '\n';
        return 3;
    }
}
