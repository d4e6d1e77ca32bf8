#pragma once

#include <optional>
#include <span>
#include <vector>

#include "evt/distributions.hpp"

namespace evt {

// Joint laws of the i largest values under a limiting extreme-value family.
struct TopIPoint {
    std::vector<double> coords;  // x_1 >= x_2 >= ... (strict for the density)
};

// Limiting joint CDF of the top-i maxima (nested-sum form); reduces to the
// plain CDF at i = 1 and to G(x) when all coordinates coincide.
double top_i_cdf(const GevParams& family, const TopIPoint& point);

// Joint density g(x_i) * prod_{j<i} g(x_j)/G(x_j) on x_1 > ... > x_i,
// 0 off the ordering region or outside the support.
double top_i_pdf(const GevParams& family, const TopIPoint& point);

enum class ModelFamily { Normal, Exponential, Uniform, Frechet };

struct ConvergenceModel {
    ModelFamily family;
    double alpha = 1.0;  // Frechet only
};

double model_log_cdf(const ConvergenceModel& model, double x);

// Shape of the limit law in standard position under the constants below.
double ultimate_shape(const ConvergenceModel& model);

// Constants mapping F^n(a_n x + b_n) onto the standard-position limit:
// Normal uses the von Mises pair, Exponential (1, ln n), Uniform (1/n, 1-1/n),
// Frechet(alpha) the exact-stability pair (xi n^xi, n^xi) with xi = 1/alpha.
NormalizingConstants standard_attraction_constants(const ConvergenceModel& model, std::size_t n);

// 2001 equally spaced points between the target's 1e-4 and 1-1e-4 quantiles.
std::vector<double> quantile_grid(const GevParams& target, std::size_t points = 2001,
                                  double tail_mass = 1e-4);

// sup over the grid of |F^n(a_n x + b_n) - G_target(x)|; F^n evaluated as
// exp(n log F) to avoid underflow.
double convergence_distance(const ConvergenceModel& model, std::size_t n,
                            const NormalizingConstants& constants, const GevParams& target,
                            std::span<const double> grid);

struct ConvergenceReport {
    std::size_t n;
    NormalizingConstants constants;
    double sup_distance_ultimate;
    double sup_distance_penultimate;
    double penultimate_shape;
};

// Minimizes the sup distance over shapes in [-1, 1] (golden section); the
// reported penultimate distance never exceeds the ultimate one because the
// ultimate shape is included in the comparison.
ConvergenceReport penultimate_fit(const ConvergenceModel& model, std::size_t n,
                                  std::optional<NormalizingConstants> constants = {});

}  // namespace evt
