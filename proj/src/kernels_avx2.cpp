// AVX2 variants of the kernel entry points. Compiled with -mavx2 in its own
// translation unit; only reached through the runtime dispatch in active().
#include "evt/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace evt::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double sum_avx2(const double* x, std::size_t n) {
    const std::size_t nv = n & ~std::size_t(3);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < nv; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    }
    double s = hsum(acc);
    for (std::size_t i = nv; i < n; ++i) s += x[i];
    return s;
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    const std::size_t nv = n & ~std::size_t(3);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < nv; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    }
    double s = hsum(acc);
    for (std::size_t i = nv; i < n; ++i) s += a[i] * b[i];
    return s;
}

void prefix_sum_avx2(const double* x, std::size_t n, double* out) {
    const std::size_t nv = n & ~std::size_t(3);
    const __m256d zero = _mm256_setzero_pd();
    __m256d carry = zero;  // running total broadcast in all lanes
    for (std::size_t i = 0; i < nv; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        // in-lane inclusive scan: v += shift1(v); v += shift2(v)
        __m256d s1 = _mm256_blend_pd(_mm256_permute4x64_pd(v, _MM_SHUFFLE(2, 1, 0, 3)), zero, 0x1);
        v = _mm256_add_pd(v, s1);
        __m256d s2 = _mm256_blend_pd(_mm256_permute4x64_pd(v, _MM_SHUFFLE(1, 0, 3, 2)), zero, 0x3);
        v = _mm256_add_pd(v, s2);
        v = _mm256_add_pd(v, carry);
        _mm256_storeu_pd(out + i, v);
        carry = _mm256_permute4x64_pd(v, _MM_SHUFFLE(3, 3, 3, 3));
    }
    double s = nv ? out[nv - 1] : 0.0;
    for (std::size_t i = nv; i < n; ++i) {
        s += x[i];
        out[i] = s;
    }
}

void accumulate_squared_avx2(const double* x, std::size_t n, double* acc) {
    const std::size_t nv = n & ~std::size_t(3);
    for (std::size_t i = 0; i < nv; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        __m256d a = _mm256_loadu_pd(acc + i);
        _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(v, v, a));
    }
    for (std::size_t i = nv; i < n; ++i) acc[i] += x[i] * x[i];
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
    const std::size_t nv = n & ~std::size_t(3);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d best = _mm256_setzero_pd();
    for (std::size_t i = 0; i < nv; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        best = _mm256_max_pd(best, _mm256_and_pd(d, absmask));
    }
    double m = hmax(best);
    for (std::size_t i = nv; i < n; ++i) {
        const double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

void centered_power_sums_avx2(const double* x, std::size_t n, double c, double out[3]) {
    const std::size_t nv = n & ~std::size_t(3);
    const __m256d vc = _mm256_set1_pd(c);
    __m256d a1 = _mm256_setzero_pd(), a2 = a1, a3 = a1;
    for (std::size_t i = 0; i < nv; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), vc);
        __m256d d2 = _mm256_mul_pd(d, d);
        a1 = _mm256_add_pd(a1, d);
        a2 = _mm256_add_pd(a2, d2);
        a3 = _mm256_fmadd_pd(d2, d, a3);
    }
    double s1 = hsum(a1), s2 = hsum(a2), s3 = hsum(a3);
    for (std::size_t i = nv; i < n; ++i) {
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

const Ops& avx2_ops() noexcept {
    static const Ops ops{
        "avx2",
        &sum_avx2,
        &dot_avx2,
        &prefix_sum_avx2,
        &accumulate_squared_avx2,
        &max_abs_diff_avx2,
        &centered_power_sums_avx2,
    };
    return ops;
}

}  // namespace evt::kernels

#else

namespace evt::kernels {
const Ops& avx2_ops() noexcept { return scalar_ops(); }
}  // namespace evt::kernels

#endif
