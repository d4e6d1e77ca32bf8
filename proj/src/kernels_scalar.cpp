#include "evt/kernels.hpp"

#include <cmath>

namespace evt::kernels {
namespace {

double sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void prefix_sum_scalar(const double* x, std::size_t n, double* out) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += x[i];
        out[i] = s;
    }
}

void accumulate_squared_scalar(const double* x, std::size_t n, double* acc) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += x[i] * x[i];
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

void centered_power_sums_scalar(const double* x, std::size_t n, double c, double out[3]) {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - c;
        const double d2 = d * d;
        s1 += d;
        s2 += d2;
        s3 += d2 * d;
    }
    out[0] = s1;
    out[1] = s2;
    out[2] = s3;
}

}  // namespace

const Ops& scalar_ops() noexcept {
    static const Ops ops{
        "scalar",
        &sum_scalar,
        &dot_scalar,
        &prefix_sum_scalar,
        &accumulate_squared_scalar,
        &max_abs_diff_scalar,
        &centered_power_sums_scalar,
    };
    return ops;
}

}  // namespace evt::kernels
