#include "evt/evi_estimators.hpp"

#include <cmath>

#include "evt/errors.hpp"
#include "evt/kernels.hpp"
#include "evt/tail_stats.hpp"

namespace evt {

const char* method_name(Method m) {
    switch (m) {
        case Method::Hill: return "hill";
        case Method::Moment: return "moment";
        case Method::MixedMoment: return "mm";
        case Method::PowerMean: return "pme";
        case Method::MeanOrderP: return "mop";
        case Method::GumbelW: return "gumbel-w";
        case Method::GeneralizedJackknife: return "gj";
        case Method::Mvrb: return "mvrb";
        case Method::PortHill: return "port-hill";
        case Method::PortMoment: return "port-moment";
        case Method::PortMixedMoment: return "port-mm";
    }
    return "?";
}

EviEstimate hill(const OrderedSample& sample, TailLevel level) {
    return {Method::Hill, level.k, log_excess_moment(sample, level, 1.0), {}, {}, false};
}

EviEstimate moment(const OrderedSample& sample, TailLevel level) {
    const double m1 = log_excess_moment(sample, level, 1.0);
    const double m2 = log_excess_moment(sample, level, 2.0);
    if (m2 == 0.0) throw singularity_error("moment: all top-k values equal the threshold");
    const double r = 1.0 - m1 * m1 / m2;
    if (r == 0.0) throw singularity_error("moment: degenerate log-excesses (M1^2 == M2)");
    return {Method::Moment, level.k, m1 + 1.0 - 0.5 / r, {}, {}, false};
}

EviEstimate mixed_moment(const OrderedSample& sample, TailLevel level) {
    const double m1 = log_excess_moment(sample, level, 1.0);
    const double l1 = ratio_excess_moment(sample, level, 1.0);
    if (l1 == 0.0) throw singularity_error("mixed_moment: ratio moment vanished");
    const double phi = (m1 - l1) / (l1 * l1);
    const double value = (phi - 1.0) / (1.0 + 2.0 * std::fmin(phi - 1.0, 0.0));
    return {Method::MixedMoment, level.k, value, {}, {}, false};
}

EviEstimate power_mean_evi(const OrderedSample& sample, TailLevel level, double p) {
    if (!(p > 0.0)) throw domain_error("power_mean_evi: p must be positive");
    const double mp = log_excess_moment(sample, level, p);
    if (p == 1.0) return {Method::PowerMean, level.k, mp, p, {}, false};
    const double value = std::pow(mp / std::tgamma(p + 1.0), 1.0 / p);
    return {Method::PowerMean, level.k, value, p, {}, false};
}

EviEstimate mean_order_p_evi(const OrderedSample& sample, TailLevel level, double p) {
    if (p == 0.0) {
        return {Method::MeanOrderP, level.k, log_excess_moment(sample, level, 1.0), p, {}, false};
    }
    const auto ratios = excess_ratios(sample, level);
    double acc = 0.0;
    for (double u : ratios) acc += std::pow(u, p);
    const double mean = acc / static_cast<double>(level.k);
    if (!std::isfinite(mean)) throw overflow_error("mean_order_p_evi: mean of ratio powers overflowed");
    const double value = (1.0 - 1.0 / mean) / p;
    // asymptotic validity wants p < 1/shape; the shape is unknown, so flag
    // against the p = 0 member as reference instead of rejecting
    const double reference = log_excess_moment(sample, level, 1.0);
    const bool advisory = reference > 0.0 && p >= 1.0 / reference;
    return {Method::MeanOrderP, level.k, value, p, {}, advisory};
}

double gumbel_statistic(const OrderedSample& sample) {
    const std::size_t n = sample.size();
    if (n < 3) throw domain_error("gumbel_statistic: need n >= 3");
    const double mid = sample.order_stat(n / 2 + 1);
    const double den = mid - sample.order_stat(1);
    if (den == 0.0) throw singularity_error("gumbel_statistic: degenerate lower half");
    return (sample.order_stat(n) - mid) / den;
}

}  // namespace evt
