#include "evt/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace evt::kernels {

bool avx2_available() noexcept {
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

bool neon_available() noexcept {
#if defined(__aarch64__)
    return true;
#else
    return false;
#endif
}

namespace {

const Ops& select() {
    if (const char* env = std::getenv("EVT_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return scalar_ops();
        if (std::strcmp(env, "avx2") == 0 && avx2_available()) return avx2_ops();
        if (std::strcmp(env, "neon") == 0 && neon_available()) return neon_ops();
    }
    if (avx2_available()) return avx2_ops();
    if (neon_available()) return neon_ops();
    return scalar_ops();
}

}  // namespace

const Ops& active() noexcept {
    static const Ops& chosen = select();
    return chosen;
}

}  // namespace evt::kernels
