#include "evt/tail_stats.hpp"

#include <algorithm>
#include <cmath>

#include "evt/errors.hpp"
#include "evt/kernels.hpp"

namespace evt {

namespace {

// Validates 1 <= k < n and X_{n-k:n} > 0; returns the threshold order statistic.
double checked_threshold(const OrderedSample& sample, TailLevel level) {
    const std::size_t n = sample.size();
    if (level.k < 1 || level.k >= n) throw domain_error("tail level k out of range [1, n)");
    const double xnk = sample.order_stat(n - level.k);
    if (!(xnk > 0.0)) throw domain_error("threshold order statistic must be positive");
    return xnk;
}

}  // namespace

std::size_t max_positive_tail_level(const OrderedSample& sample) {
    const auto v = sample.values();
    // first index holding a positive value
    const auto it = std::upper_bound(v.begin(), v.end(), 0.0);
    const std::size_t first_pos = static_cast<std::size_t>(it - v.begin());
    const std::size_t npos = v.size() - first_pos;
    return npos >= 2 ? npos - 1 : 0;
}

double log_excess_moment(const OrderedSample& sample, TailLevel level, double p) {
    const double xnk = checked_threshold(sample, level);
    if (p == 0.0) return 1.0;
    const std::size_t n = sample.size();
    const double lk = std::log(xnk);
    double acc = 0.0;
    if (p == 1.0 || p == 2.0 || p == 3.0) {
        std::vector<double> logs(level.k);
        for (std::size_t i = 1; i <= level.k; ++i) logs[i - 1] = std::log(sample.order_stat(n - i + 1));
        double sums[3];
        kernels::active().centered_power_sums(logs.data(), level.k, lk, sums);
        acc = sums[static_cast<int>(p) - 1];
    } else {
        for (std::size_t i = 1; i <= level.k; ++i) {
            acc += std::pow(std::log(sample.order_stat(n - i + 1)) - lk, p);
        }
    }
    return acc / static_cast<double>(level.k);
}

double ratio_excess_moment(const OrderedSample& sample, TailLevel level, double p) {
    if (!(p >= 1.0)) throw domain_error("ratio_excess_moment: p must be >= 1");
    const double xnk = checked_threshold(sample, level);
    const std::size_t n = sample.size();
    double acc = 0.0;
    for (std::size_t i = 1; i <= level.k; ++i) {
        const double term = 1.0 - xnk / sample.order_stat(n - i + 1);
        acc += (p == 1.0) ? term : std::pow(term, p);
    }
    return acc / static_cast<double>(level.k);
}

std::vector<double> excess_ratios(const OrderedSample& sample, TailLevel level) {
    const double xnk = checked_threshold(sample, level);
    const std::size_t n = sample.size();
    std::vector<double> ratios(level.k);
    for (std::size_t i = 1; i <= level.k; ++i) ratios[i - 1] = sample.order_stat(n - i + 1) / xnk;
    return ratios;
}

std::vector<double> top_log_order_stats(const OrderedSample& sample, std::size_t k_max) {
    const std::size_t n = sample.size();
    if (k_max < 1 || k_max >= n) throw domain_error("top_log_order_stats: k_max out of range");
    if (!(sample.order_stat(n - k_max) > 0.0)) {
        throw domain_error("top_log_order_stats: threshold order statistic must be positive");
    }
    std::vector<double> logs(k_max + 1);
    for (std::size_t i = 0; i <= k_max; ++i) logs[i] = std::log(sample.order_stat(n - i));
    return logs;
}

std::vector<double> hill_sweep(const OrderedSample& sample, std::size_t k_max) {
    const auto logs = top_log_order_stats(sample, k_max);
    std::vector<double> cum(k_max);
    kernels::active().prefix_sum(logs.data(), k_max, cum.data());
    std::vector<double> out(k_max);
    for (std::size_t k = 1; k <= k_max; ++k) {
        out[k - 1] = cum[k - 1] / static_cast<double>(k) - logs[k];
    }
    return out;
}

}  // namespace evt
