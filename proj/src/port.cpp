#include "evt/port.hpp"

#include <cmath>
#include <vector>

#include "evt/errors.hpp"

namespace evt {

std::size_t PortConfig::n_s(std::size_t n) const {
    if (!(s >= 0.0) || !(s < 1.0)) throw domain_error("PortConfig: s must lie in [0, 1)");
    return static_cast<std::size_t>(std::floor(static_cast<double>(n) * s)) + 1;
}

OrderedSample port_excesses(const OrderedSample& sample, PortConfig cfg) {
    const std::size_t n = sample.size();
    const std::size_t ns = cfg.n_s(n);
    if (ns >= n) throw domain_error("port_excesses: quantile level leaves no excesses");
    const double threshold = sample.order_stat(ns);
    const std::size_t count = n - ns;
    std::vector<double> excesses(count);
    // j-th largest minus threshold, stored ascending
    for (std::size_t j = 1; j <= count; ++j) {
        excesses[count - j] = sample.order_stat(n - j + 1) - threshold;
    }
    return OrderedSample::from_sorted(std::move(excesses), "port-excesses");
}

EviEstimate port_evi(const OrderedSample& sample, PortConfig cfg, TailLevel level, PortBase base) {
    const OrderedSample excesses = port_excesses(sample, cfg);
    switch (base) {
        case PortBase::Hill: {
            EviEstimate e = hill(excesses, level);
            e.method = Method::PortHill;
            return e;
        }
        case PortBase::Moment: {
            EviEstimate e = moment(excesses, level);
            e.method = Method::PortMoment;
            return e;
        }
        case PortBase::MixedMoment: {
            EviEstimate e = mixed_moment(excesses, level);
            e.method = Method::PortMixedMoment;
            return e;
        }
    }
    throw domain_error("port_evi: unknown base estimator");
}

}  // namespace evt
