#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "evt/evi_estimators.hpp"
#include "evt/reduced_bias.hpp"
#include "evt/sample.hpp"

namespace evt {

// A statistic computable on any subsample (values in ascending order when
// order matters to the statistic; the jackknife preserves input order).
using Statistic = std::function<double(std::span<const double>)>;

// Pseudo-values n*T_n - (n-1)*T_{n,i}, i = 1..n (leave-one-out).
std::vector<double> jackknife_pseudo_values(const Statistic& stat, std::span<const double> sample);

// Mean of the pseudo-values; removes the 1/n component of the bias.
double pure_jackknife(const Statistic& stat, std::span<const double> sample);

// (t1 - alpha*t2) / (1 - alpha); alpha is the bias ratio of the two inputs.
double generalized_jackknife(double t1, double t2, double alpha);

// Generalized jackknife of Hill at levels k and floor(k/2); the bias ratio
// under a second-order heavy tail is alpha = 2^(-rho).
EviEstimate gj_hill(const OrderedSample& sample, TailLevel level, double rho_hat);

enum class BootstrapEstimator { Hill, MeanOrderP, Mvrb };

// Double-bootstrap design. Zero n1/n2 request the defaults
// n1 = floor(n^0.955), n2 = floor(n1^2/n).
struct BootstrapPlan {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t replicates = 250;
    std::uint64_t seed = 0;
};

// Selected level and the bootstrap MSE curves behind it. mse_n1[k]/mse_n2[k]
// are the mean squared auxiliary statistics at level k (NaN where some
// replicate could not evaluate the estimator).
struct BootstrapResult {
    std::size_t k_hat;
    std::size_t k1_star;
    std::size_t k2_star;
    double c_rho;     // combination correction applied (fixed reference)
    double rho_hat;   // diagnostic second-order fit; NaN when it failed
    std::vector<double> mse_n1;
    std::vector<double> mse_n2;
};

// Adaptive level selection: for each sub-sample size, B resamples with
// replacement; the auxiliary statistic T(k) - T(floor(k/2)) has its bootstrap
// MSE minimized over k (smoothed with a proportional window, the second scan
// restricted to the window coherent with the first); the minimizers combine
// into k_hat = floor(c * k1*^2 / k2*) clamped to [1, n-1], with the
// correction c evaluated at the reference exponent -1/2.
// Fully deterministic given plan.seed; replicates run in parallel with
// replicate-indexed seeds and a fixed-order reduction.
BootstrapResult bootstrap_osf(const OrderedSample& sample, BootstrapEstimator estimator,
                              const BootstrapPlan& plan, double p = 0.0);

}  // namespace evt
