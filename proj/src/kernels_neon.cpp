// NEON variants (aarch64). Reductions are vectorized with float64x2; the
// scan keeps the scalar recurrence, which is already load-bound at 2 lanes.
#include "evt/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace evt::kernels {
namespace {

double sum_neon(const double* x, std::size_t n) {
    const std::size_t nv = n & ~std::size_t(1);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < nv; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
    double s = vaddvq_f64(acc);
    if (nv < n) s += x[nv];
    return s;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    const std::size_t nv = n & ~std::size_t(1);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < nv; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double s = vaddvq_f64(acc);
    if (nv < n) s += a[nv] * b[nv];
    return s;
}

void prefix_sum_neon(const double* x, std::size_t n, double* out) {
    scalar_ops().prefix_sum(x, n, out);
}

void accumulate_squared_neon(const double* x, std::size_t n, double* acc) {
    const std::size_t nv = n & ~std::size_t(1);
    for (std::size_t i = 0; i < nv; i += 2) {
        float64x2_t v = vld1q_f64(x + i);
        vst1q_f64(acc + i, vfmaq_f64(vld1q_f64(acc + i), v, v));
    }
    if (nv < n) acc[nv] += x[nv] * x[nv];
}

double max_abs_diff_neon(const double* a, const double* b, std::size_t n) {
    const std::size_t nv = n & ~std::size_t(1);
    float64x2_t best = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < nv; i += 2) {
        best = vmaxq_f64(best, vabdq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    double m = vmaxvq_f64(best);
    if (nv < n) m = std::fmax(m, std::fabs(a[nv] - b[nv]));
    return m;
}

void centered_power_sums_neon(const double* x, std::size_t n, double c, double out[3]) {
    const std::size_t nv = n & ~std::size_t(1);
    const float64x2_t vc = vdupq_n_f64(c);
    float64x2_t a1 = vdupq_n_f64(0.0), a2 = a1, a3 = a1;
    for (std::size_t i = 0; i < nv; i += 2) {
        float64x2_t d = vsubq_f64(vld1q_f64(x + i), vc);
        float64x2_t d2 = vmulq_f64(d, d);
        a1 = vaddq_f64(a1, d);
        a2 = vaddq_f64(a2, d2);
        a3 = vfmaq_f64(a3, d2, d);
    }
    double s1 = vaddvq_f64(a1), s2 = vaddvq_f64(a2), s3 = vaddvq_f64(a3);
    if (nv < n) {
        const double d = x[nv] - c;
        s1 += d;
        s2 += d * d;
        s3 += d * d * d;
    }
    out[0] = s1;
    out[1] = s2;
    out[2] = s3;
}

}  // namespace

const Ops& neon_ops() noexcept {
    static const Ops ops{
        "neon",
        &sum_neon,
        &dot_neon,
        &prefix_sum_neon,
        &accumulate_squared_neon,
        &max_abs_diff_neon,
        &centered_power_sums_neon,
    };
    return ops;
}

}  // namespace evt::kernels

#else

namespace evt::kernels {
const Ops& neon_ops() noexcept { return scalar_ops(); }
}  // namespace evt::kernels

#endif
