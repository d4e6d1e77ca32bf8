#include "evt/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "evt/errors.hpp"
#include "evt/kernels.hpp"
#include "evt/rng.hpp"

namespace evt {

namespace {

constexpr double kShapeZeroTol = 1e-8;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Reduced variable w with exp(-exp(-w)) the CDF value: w = log1p(shape*z)/shape,
// falling back to w = z on the zero-shape branch. Returns +/-inf outside support.
double reduced_variable(double shape, double z) {
    if (std::fabs(shape) <= kShapeZeroTol) return z;
    const double t = 1.0 + shape * z;
    if (t <= 0.0) return shape > 0.0 ? -kInf : kInf;
    return std::log1p(shape * z) / shape;
}

}  // namespace

GevParams::GevParams(double shape_, double location_, double scale_)
    : shape(shape_), location(location_), scale(scale_) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw domain_error("GevParams: scale must be positive");
    if (!std::isfinite(shape) || !std::isfinite(location)) {
        throw domain_error("GevParams: shape and location must be finite");
    }
}

GevParams GevParams::gumbel(double location, double scale) { return {0.0, location, scale}; }

GevParams GevParams::frechet(double alpha) {
    if (!(alpha > 0.0)) throw domain_error("frechet: alpha must be positive");
    return {1.0 / alpha, 1.0, 1.0 / alpha};
}

GevParams GevParams::max_weibull(double alpha) {
    if (!(alpha > 0.0)) throw domain_error("max_weibull: alpha must be positive");
    return {-1.0 / alpha, -1.0, 1.0 / alpha};
}

double gev_log_cdf(const GevParams& params, double x) {
    const double z = (x - params.location) / params.scale;
    const double w = reduced_variable(params.shape, z);
    if (w == -kInf) return -kInf;  // below support
    if (w == kInf) return 0.0;     // above support
    return -std::exp(-w);
}

double gev_cdf(const GevParams& params, double x) { return std::exp(gev_log_cdf(params, x)); }

double gev_pdf(const GevParams& params, double x) {
    const double z = (x - params.location) / params.scale;
    const double w = reduced_variable(params.shape, z);
    if (!std::isfinite(w)) return 0.0;
    // g(z) = exp(-(1+shape)w) exp(-exp(-w)) / scale
    return std::exp(-(1.0 + params.shape) * w - std::exp(-w)) / params.scale;
}

double gev_quantile(const GevParams& params, double q) {
    if (!(q > 0.0) || !(q < 1.0)) throw domain_error("gev_quantile: q must lie in (0,1)");
    const double y = -std::log(q);  // exp(-y) = q
    double z;
    if (std::fabs(params.shape) <= kShapeZeroTol) {
        z = -std::log(y);
    } else {
        z = std::expm1(-params.shape * std::log(y)) / params.shape;
    }
    return params.location + params.scale * z;
}

OrderedSample gev_sample(const GevParams& params, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw domain_error("gev_sample: n must be >= 1");
    Rng rng(seed);
    std::vector<double> values(n);
    for (double& v : values) v = gev_quantile(params, rng.uniform01());
    return OrderedSample(std::move(values), "gev");
}

double max_stability_defect(const GevParams& params, unsigned k, double a_k, double b_k,
                            std::span<const double> grid) {
    if (!(a_k > 0.0)) throw domain_error("max_stability_defect: a_k must be positive");
    if (grid.empty()) throw domain_error("max_stability_defect: empty grid");
    std::vector<double> lhs(grid.size()), rhs(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        lhs[i] = std::exp(static_cast<double>(k) * gev_log_cdf(params, a_k * grid[i] + b_k));
        rhs[i] = gev_cdf(params, grid[i]);
    }
    return kernels::active().max_abs_diff(lhs.data(), rhs.data(), grid.size());
}

PeriodicFn::PeriodicFn(std::function<double(double)> fn, double period)
    : fn_(std::move(fn)), period_(period) {
    if (!fn_) throw domain_error("PeriodicFn: empty function");
    if (!(period_ > 0.0) || !std::isfinite(period_)) {
        throw domain_error("PeriodicFn: period must be positive and finite");
    }
    constexpr int kGrid = 2048;
    for (int i = 0; i < kGrid; ++i) {
        const double v = fn_(period_ * i / kGrid);
        if (!std::isfinite(v) || !(v > 0.0)) {
            throw domain_error("PeriodicFn: values must be finite and positive");
        }
    }
}

PeriodicFn PeriodicFn::constant(double value) {
    return PeriodicFn([value](double) { return value; }, 1.0);
}

double PeriodicFn::operator()(double x) const {
    // evaluate through the base period so periodicity holds by construction
    double w = std::fmod(x, period_);
    if (w < 0.0) w += period_;
    return fn_(w);
}

double mss_cdf(const MssParams& params, double x) {
    const double w = reduced_variable(params.shape, x);
    if (w == -kInf) return 0.0;
    if (w == kInf) return 1.0;
    return std::exp(-params.nu(w) * std::exp(-w));
}

HallWelshModel::HallWelshModel(double shape, double scale2, double shape2, double scale)
    : shape_(shape), scale2_(scale2), shape2_(shape2), scale_(scale) {
    if (!(shape_ > 0.0)) throw domain_error("HallWelshModel: shape must be positive");
    if (scale2_ == 0.0 || !std::isfinite(scale2_)) {
        throw domain_error("HallWelshModel: scale2 must be nonzero and finite");
    }
    if (!(shape2_ < 0.0)) throw domain_error("HallWelshModel: shape2 must be negative");
    if (!(scale_ > 0.0)) throw domain_error("HallWelshModel: scale must be positive");
    // U'(t) = C shape t^{shape-1} (1 + scale2 (shape+shape2)/shape2 * t^{shape2});
    // with t^{shape2} in (0,1] on t >= 1 strict increase needs the bracket
    // positive on the open range, i.e. 1 + scale2 (shape+shape2)/shape2 >= 0.
    const double slope_gate = 1.0 + scale2_ * (shape_ + shape2_) / shape2_;
    if (slope_gate < 0.0) {
        throw domain_error("HallWelshModel: tail quantile function not increasing near t=1");
    }
    // U(1) = C (1 + shape*scale2/shape2) = 0 makes the quantile vanish at the
    // lower endpoint, so log statistics diverge at full depth; rejected.
    if (1.0 + shape_ * scale2_ / shape2_ == 0.0) {
        throw domain_error("HallWelshModel: tail quantile function vanishes at t=1");
    }
}

double HallWelshModel::quantile(double t) const {
    if (!(t >= 1.0)) throw domain_error("HallWelshModel::quantile: t must be >= 1");
    return scale_ * std::pow(t, shape_) * (1.0 + shape_ * scale2_ * std::pow(t, shape2_) / shape2_);
}

OrderedSample HallWelshModel::sample(std::size_t n, std::uint64_t seed) const {
    if (n < 1) throw domain_error("HallWelshModel::sample: n must be >= 1");
    Rng rng(seed);
    std::vector<double> values(n);
    for (double& v : values) v = quantile(1.0 / (1.0 - rng.uniform01()));
    return OrderedSample(std::move(values), "hall-welsh");
}

double std_normal_pdf(double x) {
    static const double kInvSqrt2Pi = 0.3989422804014326779;
    return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double std_normal_quantile(double q) {
    if (!(q > 0.0) || !(q < 1.0)) throw domain_error("std_normal_quantile: q must lie in (0,1)");
    // Acklam rational approximation, then one Halley refinement with erfc.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (q < plow) {
        const double r = std::sqrt(-2.0 * std::log(q));
        x = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
            ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    } else if (q <= 1.0 - plow) {
        const double r = q - 0.5;
        const double s = r * r;
        x = (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) * r /
            (((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1.0);
    } else {
        const double r = std::sqrt(-2.0 * std::log1p(-q));
        x = -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
            ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    }
    const double e = std_normal_cdf(x) - q;
    const double u = e / std_normal_pdf(x);
    return x - u / (1.0 + 0.5 * x * u);
}

NormalizingConstants normal_attraction_constants(std::size_t n) {
    if (n < 2) throw domain_error("normal_attraction_constants: n must be >= 2");
    const double b = std_normal_quantile(1.0 - 1.0 / static_cast<double>(n));
    const double a = 1.0 / (static_cast<double>(n) * std_normal_pdf(b));
    return {a, b, n};
}

}  // namespace evt
