#include "evt/reduced_bias.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "evt/errors.hpp"
#include "evt/kernels.hpp"
#include "evt/tail_stats.hpp"

namespace evt {

namespace {

constexpr double kRhoMin = -6.0;
constexpr double kRhoMax = -0.3;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double rho_from_ratio(double num, double den) {
    if (den == 0.0) return kNaN;
    const double t = num / den;
    if (t == 3.0) return kNaN;
    return -std::fabs(3.0 * (t - 1.0) / (t - 3.0));
}

// Three-moment ratio statistic at level k; the tau = 1 tuning wins when it
// indicates |rho| > 1, the usual selection rule.
double rho_at_level(const OrderedSample& sample, std::size_t k) {
    const std::size_t n = sample.size();
    std::vector<double> logs(k);
    for (std::size_t i = 1; i <= k; ++i) logs[i - 1] = std::log(sample.order_stat(n - i + 1));
    const double lk = std::log(sample.order_stat(n - k));
    double sums[3];
    kernels::active().centered_power_sums(logs.data(), k, lk, sums);
    const double m1 = sums[0] / static_cast<double>(k);
    const double m2 = sums[1] / static_cast<double>(k);
    const double m3 = sums[2] / static_cast<double>(k);
    if (!(m1 > 0.0) || !(m2 > 0.0) || !(m3 > 0.0)) return kNaN;
    const double h2 = std::sqrt(m2 / 2.0);
    const double h3 = std::cbrt(m3 / 6.0);
    const double r1 = rho_from_ratio(m1 - h2, h2 - h3);
    const double r0 = rho_from_ratio(std::log(m1) - std::log(h2), std::log(h2) - std::log(h3));
    if (std::isnan(r1)) return r0;
    if (std::isnan(r0)) return r1;
    return r1 < -1.0 ? r1 : r0;
}

double beta_least_squares(const OrderedSample& sample, std::size_t k_beta, double rho_hat) {
    const std::size_t n = sample.size();
    const auto logs = top_log_order_stats(sample, k_beta);
    std::vector<double> u(k_beta), r(k_beta), r2(k_beta);
    for (std::size_t i = 1; i <= k_beta; ++i) {
        u[i - 1] = static_cast<double>(i) * (logs[i - 1] - logs[i]);
        r[i - 1] = std::pow(static_cast<double>(i) / static_cast<double>(k_beta), -rho_hat);
        r2[i - 1] = r[i - 1] * r[i - 1];
    }
    const auto& ops = kernels::active();
    const double kk = static_cast<double>(k_beta);
    const double d1 = ops.sum(r.data(), k_beta) / kk;
    const double s0 = ops.sum(u.data(), k_beta) / kk;
    const double s1 = ops.dot(r.data(), u.data(), k_beta) / kk;
    const double s2 = ops.dot(r2.data(), u.data(), k_beta) / kk;
    const double den = d1 * s1 - s2;
    if (den == 0.0 || !std::isfinite(den)) {
        throw estimation_failure("estimate_second_order: degenerate spacing regression");
    }
    const double ratio = static_cast<double>(k_beta) / static_cast<double>(n);
    return std::pow(ratio, rho_hat) * (d1 * s0 - s1) / den;
}

}  // namespace

SecondOrderEstimate estimate_second_order(const OrderedSample& sample,
                                          std::optional<std::size_t> k_high) {
    const std::size_t n = sample.size();
    const std::size_t pos_cap = max_positive_tail_level(sample);
    if (pos_cap < 20) throw estimation_failure("estimate_second_order: positive tail too short");

    std::size_t k_rho;
    if (k_high) {
        if (*k_high < 1 || *k_high >= n) {
            throw domain_error("estimate_second_order: k_high out of range [1, n)");
        }
        k_rho = std::min(*k_high, pos_cap);
    } else if (pos_cap < n - 1) {
        // nonpositive values present: back off the vanishing-threshold boundary
        k_rho = std::max<std::size_t>(20, pos_cap / 4);
    } else {
        k_rho = std::min(static_cast<std::size_t>(
                             std::pow(static_cast<double>(n), 0.995)),
                         n - 1);
        k_rho = std::min(k_rho, pos_cap);
    }

    // median of the selected statistic over a geometric band around the anchor
    const double klo = std::max(20.0, 0.5 * static_cast<double>(k_rho));
    const double khi = std::min(static_cast<double>(pos_cap), 1.5 * static_cast<double>(k_rho));
    std::vector<double> values;
    constexpr int kBand = 15;
    std::size_t prev = 0;
    for (int j = 0; j < kBand; ++j) {
        const double frac = kBand == 1 ? 0.0 : static_cast<double>(j) / (kBand - 1);
        const auto k = static_cast<std::size_t>(klo * std::pow(khi / klo, frac));
        if (k == prev || k < 1 || k > pos_cap) continue;
        prev = k;
        const double r = rho_at_level(sample, k);
        if (std::isfinite(r)) values.push_back(r);
    }
    if (values.empty()) throw estimation_failure("estimate_second_order: degenerate tail");
    std::nth_element(values.begin(), values.begin() + values.size() / 2, values.end());
    double rho_med = values[values.size() / 2];
    if (values.size() % 2 == 0) {
        const double lower = *std::max_element(values.begin(), values.begin() + values.size() / 2);
        rho_med = 0.5 * (rho_med + lower);
    }

    bool clamped = false;
    double rho_hat = rho_med;
    if (rho_hat > kRhoMax) {
        rho_hat = kRhoMax;
        clamped = true;
    } else if (rho_hat < kRhoMin) {
        rho_hat = kRhoMin;
        clamped = true;
    }

    const std::size_t k_beta = std::min(pos_cap, std::max<std::size_t>(20, pos_cap / 2));
    const double beta_hat = beta_least_squares(sample, k_beta, rho_hat);
    if (!std::isfinite(beta_hat)) {
        throw estimation_failure("estimate_second_order: beta fit did not converge");
    }
    return {rho_hat, beta_hat, k_rho, clamped};
}

double mvrb_correction(const SecondOrderEstimate& so, std::size_t n, std::size_t k) {
    const double nk = static_cast<double>(n) / static_cast<double>(k);
    return 1.0 - so.beta_hat * std::pow(nk, so.rho_hat) / (1.0 - so.rho_hat);
}

EviEstimate mvrb_hill(const OrderedSample& sample, TailLevel level, const SecondOrderEstimate& so) {
    const double h = log_excess_moment(sample, level, 1.0);
    return {Method::Mvrb, level.k, h * mvrb_correction(so, sample.size(), level.k), {}, {}, false};
}

}  // namespace evt
