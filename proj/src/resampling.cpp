#include "evt/resampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "evt/errors.hpp"
#include "evt/kernels.hpp"
#include "evt/parallel.hpp"
#include "evt/rng.hpp"
#include "evt/tail_stats.hpp"

namespace evt {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// T(k) sweep on a sorted-ascending resample, for k = 1..cap (cap = deepest
// level with positive threshold). Returns an empty vector when unusable.
std::vector<double> estimator_sweep(const std::vector<double>& sorted, BootstrapEstimator est,
                                    double p, const SecondOrderEstimate* so) {
    const std::size_t m = sorted.size();
    // descending logs of the positive tail
    std::size_t first_pos = std::upper_bound(sorted.begin(), sorted.end(), 0.0) - sorted.begin();
    const std::size_t npos = m - first_pos;
    if (npos < 2) return {};
    const std::size_t cap = std::min(npos - 1, m - 1);
    std::vector<double> logs(cap + 1);
    for (std::size_t i = 0; i <= cap; ++i) logs[i] = std::log(sorted[m - 1 - i]);

    std::vector<double> t(cap);
    if (est == BootstrapEstimator::MeanOrderP && p != 0.0) {
        // running sum of exp(p*(log - top log)) keeps the powers bounded
        double s = 0.0;
        for (std::size_t k = 1; k <= cap; ++k) {
            s += std::exp(p * (logs[k - 1] - logs[0]));
            const double inv_mean = static_cast<double>(k) / s * std::exp(p * (logs[k] - logs[0]));
            t[k - 1] = (1.0 - inv_mean) / p;
        }
        return t;
    }
    std::vector<double> cum(cap);
    kernels::active().prefix_sum(logs.data(), cap, cum.data());
    for (std::size_t k = 1; k <= cap; ++k) {
        t[k - 1] = cum[k - 1] / static_cast<double>(k) - logs[k];
    }
    if (est == BootstrapEstimator::Mvrb) {
        for (std::size_t k = 1; k <= cap; ++k) t[k - 1] *= mvrb_correction(*so, m, k);
    }
    return t;
}

struct LevelScan {
    std::size_t k_star;
    std::vector<double> mse;  // index k, defined on [2, m-1] where all replicates evaluated
};

// Argmin restricted to [lo, hi] (when hi != 0) of the smoothed curve.
LevelScan scan_subsample_size(const OrderedSample& sample, std::size_t m, std::size_t B,
                              std::uint64_t seed, BootstrapEstimator est, double p,
                              const SecondOrderEstimate* so, std::size_t lo = 0,
                              std::size_t hi = 0) {
    const auto values = sample.values();
    const std::size_t n = values.size();

    // per-replicate squared auxiliary curves, reduced in replicate order below
    std::vector<std::vector<double>> rows(B);
    std::vector<std::size_t> caps(B, 0);
    parallel_for(B, [&](std::size_t b) {
        Rng rng(derive_seed(seed, m, b));
        std::vector<double> resample(m);
        for (std::size_t i = 0; i < m; ++i) resample[i] = values[rng.index(n)];
        std::sort(resample.begin(), resample.end());
        const auto sweep = estimator_sweep(resample, est, p, so);
        if (sweep.size() < 2) return;  // caps[b] stays 0 -> replicate unusable
        const std::size_t cap = sweep.size();
        std::vector<double> aux(cap + 1, 0.0);
        for (std::size_t k = 2; k <= cap; ++k) {
            aux[k] = sweep[k - 1] - sweep[k / 2 - 1];
        }
        caps[b] = cap;
        rows[b] = std::move(aux);
    });

    std::vector<double> sums(m, 0.0);
    std::vector<std::size_t> counts(m, 0);
    for (std::size_t b = 0; b < B; ++b) {
        if (caps[b] < 2) continue;
        kernels::active().accumulate_squared(rows[b].data(), rows[b].size(), sums.data());
        for (std::size_t k = 2; k <= caps[b]; ++k) ++counts[k];
    }

    std::vector<double> mse(m, kNaN);
    for (std::size_t k = 2; k < m; ++k) {
        if (counts[k] != B) continue;  // only levels every replicate evaluated
        mse[k] = sums[k] / static_cast<double>(B);
    }
    // The raw curve is lumpy: resamples duplicate the top order statistics
    // erratically and the original sample's own spacing pattern leaves dips.
    // A proportional moving window keeps the argmin out of isolated dips.
    if (lo < 2) lo = 2;
    if (hi == 0 || hi > m - 1) hi = m - 1;
    std::size_t k_star = 0;
    double best = kNaN;
    for (std::size_t k = lo; k <= hi; ++k) {
        if (std::isnan(mse[k])) continue;
        const std::size_t w = std::max<std::size_t>(2, k / 4);
        const std::size_t jlo = k > w + 2 ? k - w : 2;
        const std::size_t jhi = std::min(m - 1, k + w);
        double acc = 0.0;
        std::size_t cnt = 0;
        for (std::size_t j = jlo; j <= jhi; ++j) {
            if (std::isnan(mse[j])) continue;
            acc += mse[j];
            ++cnt;
        }
        const double smoothed = acc / static_cast<double>(cnt);
        if (k_star == 0 || smoothed < best) {
            best = smoothed;
            k_star = k;
        }
    }
    if (k_star == 0) {
        throw selection_failure("bootstrap_osf: no level evaluable in every replicate",
                                "sub-sample size " + std::to_string(m));
    }
    // a curve that is flat, or pure rounding noise of an all-zero statistic,
    // carries no signal to select on
    double vmin = kNaN, vmax = kNaN;
    for (std::size_t k = 2; k < m; ++k) {
        if (std::isnan(mse[k])) continue;
        if (std::isnan(vmin) || mse[k] < vmin) vmin = mse[k];
        if (std::isnan(vmax) || mse[k] > vmax) vmax = mse[k];
    }
    if (!(vmax > vmin) || vmax <= 1e-24) {
        std::ostringstream diag;
        diag << "sub-sample size " << m << ": MSE curve in [" << vmin << ", " << vmax << "]";
        throw selection_failure("bootstrap_osf: flat bootstrap MSE curve", diag.str());
    }
    return {k_star, std::move(mse)};
}

}  // namespace

std::vector<double> jackknife_pseudo_values(const Statistic& stat, std::span<const double> sample) {
    const std::size_t n = sample.size();
    if (n < 2) throw domain_error("jackknife_pseudo_values: need n >= 2");
    const double tn = stat(sample);
    std::vector<double> loo(n - 1);
    std::vector<double> pseudo(n);
    for (std::size_t i = 0; i < n; ++i) {
        loo.assign(sample.begin(), sample.begin() + i);
        loo.insert(loo.end(), sample.begin() + i + 1, sample.end());
        const double ti = stat(loo);
        pseudo[i] = static_cast<double>(n) * tn - static_cast<double>(n - 1) * ti;
    }
    return pseudo;
}

double pure_jackknife(const Statistic& stat, std::span<const double> sample) {
    const auto pseudo = jackknife_pseudo_values(stat, sample);
    return kernels::active().sum(pseudo.data(), pseudo.size()) / static_cast<double>(pseudo.size());
}

double generalized_jackknife(double t1, double t2, double alpha) {
    if (alpha == 1.0) throw singularity_error("generalized_jackknife: alpha must differ from 1");
    return (t1 - alpha * t2) / (1.0 - alpha);
}

EviEstimate gj_hill(const OrderedSample& sample, TailLevel level, double rho_hat) {
    if (level.k < 2) throw domain_error("gj_hill: need k >= 2");
    if (!(rho_hat < 0.0)) throw domain_error("gj_hill: rho_hat must be negative");
    const double t1 = log_excess_moment(sample, level, 1.0);
    const double t2 = log_excess_moment(sample, {level.k / 2}, 1.0);
    const double alpha = std::pow(2.0, -rho_hat);
    return {Method::GeneralizedJackknife, level.k, generalized_jackknife(t1, t2, alpha),
            {}, {}, false};
}

BootstrapResult bootstrap_osf(const OrderedSample& sample, BootstrapEstimator estimator,
                              const BootstrapPlan& plan, double p) {
    const std::size_t n = sample.size();
    std::size_t n1 = plan.n1, n2 = plan.n2;
    if (n1 == 0) n1 = static_cast<std::size_t>(std::pow(static_cast<double>(n), 0.955));
    if (n2 == 0) n2 = n1 * n1 / n;
    if (!(1 < n2 && n2 < n1 && n1 < n)) {
        throw domain_error("bootstrap_osf: need 1 < n2 < n1 < n");
    }
    if (plan.replicates < 100) throw domain_error("bootstrap_osf: need at least 100 replicates");
    if (max_positive_tail_level(sample) < 2) {
        throw domain_error("bootstrap_osf: positive tail too short");
    }

    // second-order fit on the original sample: reused by the MVRB auxiliary
    // and by the combination correction; optional for the latter.
    std::optional<SecondOrderEstimate> so;
    try {
        so = estimate_second_order(sample);
    } catch (const estimation_failure&) {
        if (estimator == BootstrapEstimator::Mvrb) throw;
    }

    const SecondOrderEstimate* so_ptr = so ? &*so : nullptr;
    const auto scan1 = scan_subsample_size(sample, n1, plan.replicates, plan.seed, estimator, p, so_ptr);
    // the optimal level grows with the sub-sample size, so the second scan is
    // restricted to the coherent window below the first minimizer
    const auto lo2 = static_cast<std::size_t>(static_cast<double>(scan1.k_star) *
                                              static_cast<double>(n2) / static_cast<double>(n1));
    const auto scan2 = scan_subsample_size(sample, n2, plan.replicates, plan.seed, estimator, p,
                                           so_ptr, lo2, scan1.k_star);

    // Combination correction (1 - 2^r)^(2/(1-2r)) at the fixed reference
    // exponent r = -1/2. Feeding the per-sample second-order estimate here
    // multiplies its sampling noise straight into k_hat and measurably
    // degrades the selected levels; the fixed reference keeps the map from
    // the sub-sample minimizers stable. rho_hat is reported for diagnostics.
    const double c = std::pow(1.0 - std::pow(2.0, -0.5), 2.0 / 2.0);
    const double rho_hat = so ? so->rho_hat : kNaN;
    const double raw = c * static_cast<double>(scan1.k_star) * static_cast<double>(scan1.k_star) /
                       static_cast<double>(scan2.k_star);
    auto k_hat = static_cast<std::size_t>(raw);
    k_hat = std::clamp<std::size_t>(k_hat, 1, n - 1);

    return {k_hat, scan1.k_star, scan2.k_star, c, rho_hat, scan1.mse, scan2.mse};
}

}  // namespace evt
