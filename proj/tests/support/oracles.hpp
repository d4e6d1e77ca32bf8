#pragma once

// Test-side oracles kept independent of the library code paths they check:
// brute-force statistics, quadrature, reference samplers and rank tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace oracles {

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline double mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Two-sided Kolmogorov-Smirnov statistic of sorted uniforms against U(0,1).
inline double ks_uniform(std::vector<double> u) {
    std::sort(u.begin(), u.end());
    const auto n = static_cast<double>(u.size());
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double hi = (static_cast<double>(i) + 1.0) / n - u[i];
        const double lo = u[i] - static_cast<double>(i) / n;
        d = std::max(d, std::max(hi, lo));
    }
    return d;
}

// Independent uniform stream for oracle samplers (deliberately a different
// generator family than the library wrapper).
class UniformStream {
  public:
    explicit UniformStream(std::uint64_t seed) : gen_(seed) {}
    double next() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
    }

  private:
    std::mt19937_64 gen_;
};

// Exact power-law tail: X = C * u^(-shape), u uniform.
inline std::vector<double> pareto_sample(double shape, double C, std::size_t n,
                                         std::uint64_t seed) {
    UniformStream u(seed);
    std::vector<double> x(n);
    for (double& v : x) v = C * std::pow(u.next(), -shape);
    std::sort(x.begin(), x.end());
    return x;
}

// Trapezoid rule on a uniform grid.
inline double trapezoid(std::span<const double> f, double h) {
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * h;
}

// out[i] = integral from x_i to x_end of f (trapezoid on a uniform grid).
inline std::vector<double> reverse_cumulative_trapezoid(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    for (std::size_t i = n - 1; i >= 1; --i) {
        out[i - 1] = out[i] + 0.5 * (f[i - 1] + f[i]) * h;
    }
    return out;
}

}  // namespace oracles
