#pragma once

#include "evt/evi_estimators.hpp"
#include "evt/sample.hpp"

namespace evt {

// Excesses over the empirical quantile X_{floor(n*s)+1:n}. s = 0 uses the
// sample minimum and presumes a finite left endpoint of the underlying model
// (not checkable here).
struct PortConfig {
    double s = 0.1;

    std::size_t n_s(std::size_t n) const;
};

// {X_{n-j+1:n} - X_{n_s:n}, 1 <= j <= n - n_s}, ascending; length n - n_s.
// Differences are formed before any transcendental call, so a location shift
// of the input cancels exactly.
OrderedSample port_excesses(const OrderedSample& sample, PortConfig cfg);

enum class PortBase { Hill, Moment, MixedMoment };

// Applies the base estimator to the excess sample; location and scale
// invariant as a result.
EviEstimate port_evi(const OrderedSample& sample, PortConfig cfg, TailLevel level, PortBase base);

}  // namespace evt
