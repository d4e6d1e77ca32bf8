#pragma once

#include <cstdint>
#include <random>

namespace evt {

// splitmix64 step; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for stream (base, stream, index). Every parallel consumer (bootstrap
// replicate b of sub-sample size m, campaign replicate r, ...) derives its
// own seed through this so results never depend on execution order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(base ^ (0x9e3779b97f4a7c15ULL * (stream + 1))) + index);
}

// mt19937_64 wrapper producing uniforms with a fixed bit recipe.
// std::uniform_real_distribution is not pinned down by the standard, so the
// mapping from raw 64-bit words to doubles is done here to keep outputs
// byte-identical across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on the open interval (0, 1); never returns 0 or 1.
    double uniform01() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
    }

    // Uniform index in {0, ..., m-1} (Lemire multiply-shift).
    std::size_t index(std::size_t m) {
        using u128 = unsigned __int128;
        return static_cast<std::size_t>((static_cast<u128>(gen_()) * m) >> 64);
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace evt
