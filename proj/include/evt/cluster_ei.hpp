#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace evt {

// Stationary max-autoregressive sequence X_j = max(alpha*X_{j-1}, (1-alpha)*Z_j)
// with Z_j i.i.d. unit heavy-tailed (shape 1) innovations; marginal law is
// unit heavy-tailed and the clustering index is 1 - alpha. A 1000-step
// burn-in is discarded. Deterministic given seed.
std::vector<double> armax_sample(double alpha, std::size_t n, std::uint64_t seed);

struct EiEstimate {
    double theta_hat;   // in (0, 1]
    std::size_t block_len;
    double threshold;
    std::size_t exceedance_count;
};

// Blocks estimator: (# blocks with at least one exceedance) / (# exceedances),
// clamped into (0, 1]. Exceedance means value strictly above the threshold.
EiEstimate blocks_ei(std::span<const double> series, std::size_t block_len, double threshold);

}  // namespace evt
