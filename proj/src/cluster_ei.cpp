#include "evt/cluster_ei.hpp"

#include <algorithm>
#include <cmath>

#include "evt/errors.hpp"
#include "evt/rng.hpp"

namespace evt {

std::vector<double> armax_sample(double alpha, std::size_t n, std::uint64_t seed) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw domain_error("armax_sample: alpha must lie in (0,1)");
    if (n < 1) throw domain_error("armax_sample: n must be >= 1");
    Rng rng(seed);
    auto innovation = [&] { return -1.0 / std::log(rng.uniform01()); };  // unit Frechet
    constexpr std::size_t kBurnIn = 1000;
    double x = innovation();
    for (std::size_t i = 0; i < kBurnIn; ++i) {
        x = std::max(alpha * x, (1.0 - alpha) * innovation());
    }
    std::vector<double> series(n);
    for (double& v : series) {
        x = std::max(alpha * x, (1.0 - alpha) * innovation());
        v = x;
    }
    return series;
}

EiEstimate blocks_ei(std::span<const double> series, std::size_t block_len, double threshold) {
    if (block_len < 1) throw domain_error("blocks_ei: block length must be >= 1");
    if (series.empty()) throw no_exceedance_error("blocks_ei: empty series");
    std::size_t exceedances = 0;
    std::size_t occupied_blocks = 0;
    bool block_hit = false;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i % block_len == 0) block_hit = false;
        if (series[i] > threshold) {
            ++exceedances;
            if (!block_hit) {
                block_hit = true;
                ++occupied_blocks;
            }
        }
    }
    if (exceedances == 0) throw no_exceedance_error("blocks_ei: no exceedance of the threshold");
    double theta = static_cast<double>(occupied_blocks) / static_cast<double>(exceedances);
    theta = std::min(theta, 1.0);  // guard floating ties; ratio cannot exceed 1 by count
    return {theta, block_len, threshold, exceedances};
}

}  // namespace evt
