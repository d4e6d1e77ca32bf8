#include "evt/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "evt/errors.hpp"
#include "evt/kernels.hpp"

namespace evt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(unsigned m) {
    double f = 1.0;
    for (unsigned i = 2; i <= m; ++i) f *= i;
    return f;
}

// sum over nondecreasing integer paths r_2 <= ... <= r_i with r_{j+1} <= j of
// prod_j d_j^(r_{j+1}-r_j) / (r_{j+1}-r_j)!
double nested_sum(std::span<const double> d, std::size_t j, unsigned r_prev, double partial) {
    if (j == d.size()) return partial;
    double total = 0.0;
    for (unsigned r = r_prev; r <= j + 1; ++r) {
        const unsigned m = r - r_prev;
        total += nested_sum(d, j + 1, r, partial * std::pow(d[j], m) / factorial(m));
    }
    return total;
}

}  // namespace

double top_i_cdf(const GevParams& family, const TopIPoint& point) {
    const auto& x = point.coords;
    if (x.empty()) throw domain_error("top_i_cdf: need at least one coordinate");
    for (std::size_t j = 1; j < x.size(); ++j) {
        if (x[j] > x[j - 1]) throw domain_error("top_i_cdf: coordinates must be weakly decreasing");
    }
    std::vector<double> lc(x.size());
    bool all_one = true;
    for (std::size_t j = 0; j < x.size(); ++j) {
        lc[j] = gev_log_cdf(family, x[j]);
        if (lc[j] == -kInf) return 0.0;
        if (lc[j] != 0.0) all_one = false;
    }
    if (all_one) return 1.0;
    if (x.size() == 1) return std::exp(lc[0]);
    std::vector<double> d(x.size() - 1);
    for (std::size_t j = 0; j + 1 < x.size(); ++j) d[j] = lc[j] - lc[j + 1];
    return std::exp(lc.back()) * nested_sum(d, 0, 0, 1.0);
}

double top_i_pdf(const GevParams& family, const TopIPoint& point) {
    const auto& x = point.coords;
    if (x.empty()) throw domain_error("top_i_pdf: need at least one coordinate");
    for (std::size_t j = 1; j < x.size(); ++j) {
        if (!(x[j] < x[j - 1])) return 0.0;  // off the ordering region
    }
    double h = gev_pdf(family, x.back());
    if (h == 0.0) return 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double g = gev_pdf(family, x[j]);
        const double cdf = gev_cdf(family, x[j]);
        if (g == 0.0 || cdf == 0.0) return 0.0;
        h *= g / cdf;
    }
    return h;
}

double model_log_cdf(const ConvergenceModel& model, double x) {
    switch (model.family) {
        case ModelFamily::Normal:
            return x >= 0.0 ? std::log1p(-0.5 * std::erfc(x * M_SQRT1_2))
                            : std::log(0.5 * std::erfc(-x * M_SQRT1_2));
        case ModelFamily::Exponential:
            return x <= 0.0 ? -kInf : std::log1p(-std::exp(-x));
        case ModelFamily::Uniform:
            if (x <= 0.0) return -kInf;
            return x >= 1.0 ? 0.0 : std::log(x);
        case ModelFamily::Frechet:
            return x <= 0.0 ? -kInf : -std::pow(x, -model.alpha);
    }
    throw domain_error("model_log_cdf: unknown family");
}

double ultimate_shape(const ConvergenceModel& model) {
    switch (model.family) {
        case ModelFamily::Normal:
        case ModelFamily::Exponential:
            return 0.0;
        case ModelFamily::Uniform:
            return -1.0;
        case ModelFamily::Frechet:
            return 1.0 / model.alpha;
    }
    throw domain_error("ultimate_shape: unknown family");
}

NormalizingConstants standard_attraction_constants(const ConvergenceModel& model, std::size_t n) {
    if (n < 2) throw domain_error("standard_attraction_constants: n must be >= 2");
    const auto nd = static_cast<double>(n);
    switch (model.family) {
        case ModelFamily::Normal:
            return normal_attraction_constants(n);
        case ModelFamily::Exponential:
            return {1.0, std::log(nd), n};
        case ModelFamily::Uniform:
            return {1.0 / nd, 1.0 - 1.0 / nd, n};
        case ModelFamily::Frechet: {
            const double xi = 1.0 / model.alpha;
            return {xi * std::pow(nd, xi), std::pow(nd, xi), n};
        }
    }
    throw domain_error("standard_attraction_constants: unknown family");
}

std::vector<double> quantile_grid(const GevParams& target, std::size_t points, double tail_mass) {
    if (points < 2) throw domain_error("quantile_grid: need at least 2 points");
    const double lo = gev_quantile(target, tail_mass);
    const double hi = gev_quantile(target, 1.0 - tail_mass);
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return grid;
}

double convergence_distance(const ConvergenceModel& model, std::size_t n,
                            const NormalizingConstants& constants, const GevParams& target,
                            std::span<const double> grid) {
    if (grid.empty()) throw domain_error("convergence_distance: empty grid");
    if (!(constants.a_n > 0.0)) throw domain_error("convergence_distance: a_n must be positive");
    std::vector<double> lhs(grid.size()), rhs(grid.size());
    const auto nd = static_cast<double>(n);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double y = constants.a_n * grid[i] + constants.b_n;
        lhs[i] = std::exp(nd * model_log_cdf(model, y));
        rhs[i] = gev_cdf(target, grid[i]);
    }
    return kernels::active().max_abs_diff(lhs.data(), rhs.data(), grid.size());
}

ConvergenceReport penultimate_fit(const ConvergenceModel& model, std::size_t n,
                                  std::optional<NormalizingConstants> constants) {
    const NormalizingConstants c = constants ? *constants : standard_attraction_constants(model, n);
    const double xi_ult = ultimate_shape(model);
    const GevParams ultimate{xi_ult, 0.0, 1.0};
    const auto grid = quantile_grid(ultimate);

    // F^n on the grid is fixed across candidate shapes
    std::vector<double> lhs(grid.size());
    const auto nd = static_cast<double>(n);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        lhs[i] = std::exp(nd * model_log_cdf(model, c.a_n * grid[i] + c.b_n));
    }
    auto distance = [&](double xi) {
        const GevParams g{xi, 0.0, 1.0};
        std::vector<double> rhs(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) rhs[i] = gev_cdf(g, grid[i]);
        return kernels::active().max_abs_diff(lhs.data(), rhs.data(), grid.size());
    };

    const double d_ult = distance(xi_ult);

    double lo = -1.0, hi = 1.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
    double fa = distance(a), fb = distance(b);
    while (hi - lo > 1e-10) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - gr * (hi - lo);
            fa = distance(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + gr * (hi - lo);
            fb = distance(b);
        }
    }
    double xi_pen = 0.5 * (lo + hi);
    double d_pen = distance(xi_pen);
    // the family includes the ultimate member; never report worse than it
    if (d_ult <= d_pen) {
        xi_pen = xi_ult;
        d_pen = d_ult;
    }
    return {n, c, d_ult, d_pen, xi_pen};
}

}  // namespace evt
