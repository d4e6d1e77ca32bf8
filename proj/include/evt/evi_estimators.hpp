#pragma once

#include <optional>
#include <string>

#include "evt/sample.hpp"

namespace evt {

enum class Method {
    Hill,
    Moment,
    MixedMoment,
    PowerMean,
    MeanOrderP,
    GumbelW,
    GeneralizedJackknife,
    Mvrb,
    PortHill,
    PortMoment,
    PortMixedMoment,
};

const char* method_name(Method m);

// One point estimate of the tail shape at level k. variance_proxy stays empty
// (no asymptotic variance formulas are wired up); advisory is set when the
// estimate's own validity condition is doubtful (see mean_order_p_evi).
struct EviEstimate {
    Method method;
    std::size_t k;
    double value;
    std::optional<double> p;
    std::optional<double> variance_proxy;
    bool advisory = false;
};

// H(k): mean of the top-k log-excesses.
EviEstimate hill(const OrderedSample& sample, TailLevel level);

// M(k) = M1 + 1 - (1/2) / (1 - M1^2/M2); valid for any real tail shape.
EviEstimate moment(const OrderedSample& sample, TailLevel level);

// Mixed-moment estimator from M1 and the ratio moment L1.
EviEstimate mixed_moment(const OrderedSample& sample, TailLevel level);

// (M_p / Gamma(p+1))^(1/p), p > 0; p = 1 is exactly Hill.
EviEstimate power_mean_evi(const OrderedSample& sample, TailLevel level, double p);

// Mean-of-order-p of the excess ratios; p = 0 is exactly Hill.
EviEstimate mean_order_p_evi(const OrderedSample& sample, TailLevel level, double p);

// W = (X_{n:n} - X_{floor(n/2)+1:n}) / (X_{floor(n/2)+1:n} - X_{1:n});
// location/scale free statistic for choosing among the three types.
double gumbel_statistic(const OrderedSample& sample);

}  // namespace evt
