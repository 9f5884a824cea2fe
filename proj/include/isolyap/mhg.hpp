#ifndef ISOLYAP_MHG_HPP
#define ISOLYAP_MHG_HPP

// Hypergeometric functions of matrix argument restricted to scalar arguments
// t*I_m, evaluated as partition series with generalized Pochhammer symbols
// and the closed product form of the Jack polynomial at the identity.  These
// power the determinant moments of shifted (noncentral Wishart) ensembles.

#include "isolyap/ensembles.hpp"

#include <vector>

namespace isolyap {
namespace mhg {

// An integer partition: non-increasing positive parts.
class Partition {
public:
    Partition() = default; // empty partition (weight 0)
    explicit Partition(std::vector<int> parts);
    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of weight <= max_weight with at most max_parts parts, each
// exactly once, in weight-ascending order (the empty partition first).
std::vector<Partition> enumerate_partitions(int max_weight, int max_parts);

// Generalized Pochhammer symbol [a]_kappa^(alpha) =
// prod_i (a - (i-1)/alpha)_{kappa_i}.  Zero is a legitimate value; it is what
// terminates the series for non-positive-integer numerator parameters.
double gen_pochhammer(double a, const Partition& kappa, double alpha_jack);

// C_kappa^(alpha)(t I_m): the Jack polynomial in the C normalization
// (sum over |kappa| = k of C_kappa(X) equals (tr X)^k) evaluated at a scalar
// matrix, via the closed product form.  Zero when kappa has more than m parts.
double jack_c_identity(const Partition& kappa, double alpha_jack, int m, double t);

struct MhgResult {
    double value = 0.0;
    double tail_estimate = 0.0; // magnitude of the first omitted weight's sum
    bool terminated = false;    // the series ended exactly (Pochhammer zeros)
    int weight_used = 0;        // highest weight included
};

// 1F1^(alpha)(a; b; t I_m) = sum_kappa [a]_kappa C_kappa(t I_m)/([b]_kappa |kappa|!).
// Terminates exactly at weight m*|a| when a is a non-positive integer;
// otherwise sums to max_weight or until the weight contributions fall below
// roundoff, whichever comes first.
MhgResult mhg_1f1_scalar(double a, double b, double t, int m, double alpha_jack,
                         int max_weight = 30);

// 2F0^(alpha)(a1, a2; t I_m): partial sum of the (generally divergent)
// asymptotic series to max_weight, with the first omitted weight reported as
// the error proxy.  The caller owns the asymptotic interpretation.
MhgResult mhg_2f0_scalar(double a1, double a2, double t, int m, double alpha_jack,
                         int max_weight);

// <(det W_k)^alpha> for W_k the Gram matrix of the first k columns of
// c I_n + X, X Gaussian with per-component scale sigma:
// prod_{l=1..k} (2 sigma^2)^alpha (beta(n-l+1)/2)_alpha *
// 1F1^(2/beta)(-alpha; beta n/2; -ctilde I_k), ctilde = c^2/(2 sigma^2).
// series_info (optional) receives the hypergeometric truncation report.
double noncentral_wishart_det_moment(int n, int k, ensembles::FieldIndex field,
                                     double sigma, double c, double alpha,
                                     MhgResult* series_info = nullptr);

} // namespace mhg
} // namespace isolyap

#endif
