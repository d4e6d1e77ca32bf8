#pragma once

#include <optional>

#include "evt/evi_estimators.hpp"
#include "evt/sample.hpp"

namespace evt {

// Second-order tail parameters (rho_hat < 0, beta_hat) fitted on the deep
// tail. k_high records the level the rho statistic was anchored at; clamped
// flags estimates pulled back into [-6, -0.3].
struct SecondOrderEstimate {
    double rho_hat;
    double beta_hat;
    std::size_t k_high;
    bool clamped = false;
};

// Fits (rho_hat, beta_hat). rho_hat comes from the three-moment ratio
// statistic (tau = 0/1 variants, the tau = 1 reading taken when it indicates
// |rho| > 1), stabilized as the median over a geometric band of levels around
// the anchor. beta_hat is a scaled least-squares fit of the log-spacings
// given rho_hat. The default anchor is floor(n^0.995) capped at the deepest
// level with a positive threshold; samples containing nonpositive values
// anchor at a quarter of that depth to stay clear of the vanishing-threshold
// boundary.
SecondOrderEstimate estimate_second_order(const OrderedSample& sample,
                                          std::optional<std::size_t> k_high = {});

// Multiplicative correction 1 - beta_hat*(n/k)^rho_hat/(1 - rho_hat).
double mvrb_correction(const SecondOrderEstimate& so, std::size_t n, std::size_t k);

// Corrected Hill estimate H(k) * mvrb_correction(so, n, k).
EviEstimate mvrb_hill(const OrderedSample& sample, TailLevel level, const SecondOrderEstimate& so);

}  // namespace evt
