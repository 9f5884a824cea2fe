#include "isolyap/mhg.hpp"

#include "isolyap/errors.hpp"
#include "isolyap/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace isolyap {
namespace mhg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > prev)
            throw std::invalid_argument("Partition: parts must be non-increasing");
        prev = parts_[i];
        weight_ += parts_[i];
    }
}

namespace {

void emit_partitions(int remaining, int max_part, int max_parts,
                     std::vector<int>& stack, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (max_parts == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, max_parts - 1, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int max_weight, int max_parts) {
    if (max_weight < 0 || max_parts < 0)
        throw std::invalid_argument("enumerate_partitions: negative bound");
    std::vector<Partition> out;
    out.emplace_back(); // weight 0
    std::vector<int> stack;
    for (int w = 1; w <= max_weight; ++w)
        emit_partitions(w, w, max_parts, stack, out);
    return out;
}

double gen_pochhammer(double a, const Partition& kappa, double alpha_jack) {
    if (!(alpha_jack > 0.0))
        throw std::invalid_argument("gen_pochhammer: alpha_jack must be positive");
    double prod = 1.0;
    const auto& parts = kappa.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const double base = a - static_cast<double>(i) / alpha_jack;
        for (int r = 0; r < parts[i]; ++r)
            prod *= base + r;
    }
    return prod;
}

double jack_c_identity(const Partition& kappa, double alpha_jack, int m, double t) {
    if (!(alpha_jack > 0.0))
        throw std::invalid_argument("jack_c_identity: alpha_jack must be positive");
    if (m < 0)
        throw std::invalid_argument("jack_c_identity: m must be non-negative");
    const auto& parts = kappa.parts();
    if (kappa.length() > m)
        return 0.0;
    const int w = kappa.weight();
    if (w == 0)
        return 1.0;
    // C_kappa(t I_m) = t^w alpha^w w! J_kappa(1^m) / j_kappa with
    // j_kappa = prod_s (alpha a(s) + l(s) + 1)(alpha (a(s)+1) + l(s)) and
    // J_kappa(1^m) = prod_{(i,j)} (m + alpha (j-1) - (i-1)).
    double hook = 1.0;
    double at_identity = 1.0;
    for (int i = 1; i <= kappa.length(); ++i) {
        for (int j = 1; j <= parts[i - 1]; ++j) {
            const double arm = parts[i - 1] - j;
            int leg = 0;
            for (int i2 = i + 1; i2 <= kappa.length(); ++i2)
                if (parts[i2 - 1] >= j)
                    ++leg;
            hook *= (alpha_jack * arm + leg + 1.0) * (alpha_jack * (arm + 1.0) + leg);
            at_identity *= m + alpha_jack * (j - 1.0) - (i - 1.0);
        }
    }
    double factorial = 1.0;
    for (int r = 2; r <= w; ++r)
        factorial *= r;
    return std::pow(t, w) * std::pow(alpha_jack, w) * factorial * at_identity / hook;
}

namespace {

// Near-integer in the sense relevant for Pochhammer zeros: exact integral
// doubles terminate the series; anything else is treated as generic.
bool is_nonpositive_integer(double a) {
    return a <= 0.0 && a == std::floor(a);
}

struct WeightTable {
    std::vector<std::vector<Partition>> by_weight; // index = weight
};

WeightTable partitions_by_weight(int max_weight, int max_parts) {
    WeightTable table;
    table.by_weight.resize(max_weight + 1);
    for (auto& kappa : enumerate_partitions(max_weight, max_parts))
        table.by_weight[kappa.weight()].push_back(kappa);
    return table;
}

} // namespace

MhgResult mhg_1f1_scalar(double a, double b, double t, int m, double alpha_jack,
                         int max_weight) {
    if (m <= 0)
        throw std::invalid_argument("mhg_1f1_scalar: m must be positive");
    if (max_weight < 0)
        throw std::invalid_argument("mhg_1f1_scalar: max_weight must be >= 0");

    int cap = max_weight;
    bool exact = false;
    if (is_nonpositive_integer(a)) {
        const int terminal = m * static_cast<int>(std::lround(-a));
        if (terminal <= max_weight) {
            cap = terminal;
            exact = true;
        }
    }

    const WeightTable table = partitions_by_weight(cap + 1, m);
    MhgResult res;
    double total = 0.0;
    int last_weight = 0;
    for (int w = 0; w <= cap; ++w) {
        double weight_sum = 0.0;
        for (const auto& kappa : table.by_weight[w]) {
            const double denom = gen_pochhammer(b, kappa, alpha_jack);
            const double numer = gen_pochhammer(a, kappa, alpha_jack);
            const double c_val = jack_c_identity(kappa, alpha_jack, m, t);
            if (denom == 0.0) {
                if (numer * c_val != 0.0)
                    throw std::domain_error(
                        "mhg_1f1_scalar: denominator Pochhammer vanishes on a "
                        "retained term");
                continue;
            }
            double factorial = 1.0;
            for (int r = 2; r <= w; ++r)
                factorial *= r;
            weight_sum += numer / denom * c_val / factorial;
        }
        total += weight_sum;
        last_weight = w;
        if (!exact && w >= 2 && weight_sum != 0.0 &&
            std::abs(weight_sum) < 1e-17 * std::abs(total)) {
            break; // converged to roundoff
        }
    }
    res.value = total;
    res.weight_used = last_weight;
    res.terminated = exact;
    if (exact) {
        res.tail_estimate = 0.0;
    } else {
        // First omitted weight as the truncation proxy.
        double next_sum = 0.0;
        const int w = last_weight + 1;
        for (const auto& kappa : table.by_weight[w]) {
            const double denom = gen_pochhammer(b, kappa, alpha_jack);
            if (denom == 0.0)
                continue;
            double factorial = 1.0;
            for (int r = 2; r <= w; ++r)
                factorial *= r;
            next_sum += gen_pochhammer(a, kappa, alpha_jack) / denom *
                        jack_c_identity(kappa, alpha_jack, m, t) / factorial;
        }
        res.tail_estimate = std::abs(next_sum);
    }
    return res;
}

MhgResult mhg_2f0_scalar(double a1, double a2, double t, int m, double alpha_jack,
                         int max_weight) {
    if (m <= 0)
        throw std::invalid_argument("mhg_2f0_scalar: m must be positive");
    if (max_weight < 0)
        throw std::invalid_argument("mhg_2f0_scalar: max_weight must be >= 0");

    int cap = max_weight;
    bool exact = false;
    for (double a : {a1, a2}) {
        if (is_nonpositive_integer(a)) {
            const int terminal = m * static_cast<int>(std::lround(-a));
            if (terminal <= cap) {
                cap = terminal;
                exact = true;
            }
        }
    }

    const WeightTable table = partitions_by_weight(cap + 1, m);
    MhgResult res;
    double total = 0.0;
    for (int w = 0; w <= cap; ++w) {
        double weight_sum = 0.0;
        for (const auto& kappa : table.by_weight[w]) {
            double factorial = 1.0;
            for (int r = 2; r <= w; ++r)
                factorial *= r;
            weight_sum += gen_pochhammer(a1, kappa, alpha_jack) *
                          gen_pochhammer(a2, kappa, alpha_jack) *
                          jack_c_identity(kappa, alpha_jack, m, t) / factorial;
        }
        total += weight_sum;
    }
    res.value = total;
    res.weight_used = cap;
    res.terminated = exact;
    if (exact) {
        res.tail_estimate = 0.0;
    } else {
        double next_sum = 0.0;
        const int w = cap + 1;
        for (const auto& kappa : table.by_weight[w]) {
            double factorial = 1.0;
            for (int r = 2; r <= w; ++r)
                factorial *= r;
            next_sum += gen_pochhammer(a1, kappa, alpha_jack) *
                        gen_pochhammer(a2, kappa, alpha_jack) *
                        jack_c_identity(kappa, alpha_jack, m, t) / factorial;
        }
        res.tail_estimate = std::abs(next_sum);
    }
    return res;
}

double noncentral_wishart_det_moment(int n, int k, ensembles::FieldIndex field,
                                     double sigma, double c, double alpha,
                                     MhgResult* series_info) {
    if (n <= 0 || k <= 0 || k > n)
        throw std::invalid_argument(
            "noncentral_wishart_det_moment: need 1 <= k <= n");
    if (!(sigma > 0.0))
        throw std::invalid_argument(
            "noncentral_wishart_det_moment: sigma must be positive");
    const double beta = static_cast<double>(field.beta());
    // The Pochhammer prefactor (beta(n-l+1)/2)_alpha requires each argument
    // plus alpha to stay positive; the l = k factor binds.
    if (beta * (n - k + 1) / 2.0 + alpha <= 0.0)
        throw DivergentMomentError(
            "noncentral_wishart_det_moment: moment order alpha too negative "
            "for the smallest Gram block");

    double prefactor = 1.0;
    for (int l = 1; l <= k; ++l)
        prefactor *= std::pow(2.0 * sigma * sigma, alpha) *
                     specfun::pochhammer(beta * (n - l + 1) / 2.0, alpha);

    if (c == 0.0) {
        if (series_info) {
            series_info->value = 1.0;
            series_info->tail_estimate = 0.0;
            series_info->terminated = true;
            series_info->weight_used = 0;
        }
        return prefactor;
    }

    const double ctilde = c * c / (2.0 * sigma * sigma);
    int max_weight = 30;
    if (alpha >= 0.0 && alpha == std::floor(alpha))
        max_weight = k * static_cast<int>(std::lround(alpha));
    MhgResult series = mhg_1f1_scalar(-alpha, beta * n / 2.0, -ctilde, k,
                                      2.0 / beta, max_weight);
    if (series_info)
        *series_info = series;
    return prefactor * series.value;
}

} // namespace mhg
} // namespace isolyap
