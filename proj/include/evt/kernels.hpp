#pragma once

#include <cstddef>

namespace evt::kernels {

// Dense double-precision inner loops shared by the estimator sweeps, the
// bootstrap MSE accumulation and the grid sup-distance evaluations.
//
// Every entry point has a scalar reference implementation; on x86-64 an AVX2
// variant is compiled into a separate translation unit and selected at
// runtime when the CPU supports it (aarch64 gets NEON for the reductions).
// SIMD variants may reassociate additions, so they are equivalence-tested
// against the scalar reference with tolerances, not bit-compared.
struct Ops {
    const char* name;
    // sum of x[0..n)
    double (*sum)(const double* x, std::size_t n);
    // inner product of a and b
    double (*dot)(const double* a, const double* b, std::size_t n);
    // out[i] = x[0] + ... + x[i]
    void (*prefix_sum)(const double* x, std::size_t n, double* out);
    // acc[i] += x[i]^2
    void (*accumulate_squared)(const double* x, std::size_t n, double* acc);
    // max_i |a[i] - b[i]|
    double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
    // out[p-1] = sum_i (x[i] - c)^p for p = 1, 2, 3
    void (*centered_power_sums)(const double* x, std::size_t n, double c, double out[3]);
};

const Ops& scalar_ops() noexcept;

bool avx2_available() noexcept;   // compiled in and supported by this CPU
const Ops& avx2_ops() noexcept;   // only meaningful when avx2_available()

bool neon_available() noexcept;
const Ops& neon_ops() noexcept;

// Runtime-selected implementation. EVT_KERNELS=scalar forces the reference
// path (useful when chasing a numeric discrepancy).
const Ops& active() noexcept;

}  // namespace evt::kernels
