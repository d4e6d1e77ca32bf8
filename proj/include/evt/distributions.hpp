#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "evt/sample.hpp"

namespace evt {

// Shape/location/scale of the limiting extreme-value law. shape == 0 is the
// double-exponential case; |shape| below 1e-8 is evaluated on that branch to
// keep the shape -> 0 limit numerically exact.
struct GevParams {
    double shape = 0.0;
    double location = 0.0;
    double scale = 1.0;

    GevParams() = default;
    GevParams(double shape_, double location_ = 0.0, double scale_ = 1.0);

    // The three classical types in their standard positions.
    static GevParams gumbel(double location = 0.0, double scale = 1.0);
    static GevParams frechet(double alpha);      // shape 1/alpha, support x >= 0
    static GevParams max_weibull(double alpha);  // shape -1/alpha, support x <= 0
};

double gev_log_cdf(const GevParams& params, double x);  // log of the CDF, -inf below support
double gev_cdf(const GevParams& params, double x);
double gev_pdf(const GevParams& params, double x);
double gev_quantile(const GevParams& params, double q);
OrderedSample gev_sample(const GevParams& params, std::size_t n, std::uint64_t seed);

// sup over the grid of |G^k(a_k x + b_k) - G(x)|.
double max_stability_defect(const GevParams& params, unsigned k, double a_k, double b_k,
                            std::span<const double> grid);

// Positive, bounded, periodic modulation evaluated through its base period.
// Positivity and boundedness are checked on a dense grid at construction.
class PeriodicFn {
  public:
    PeriodicFn(std::function<double(double)> fn, double period);
    static PeriodicFn constant(double value);

    double operator()(double x) const;
    double period() const noexcept { return period_; }

  private:
    std::function<double(double)> fn_;
    double period_;
};

struct MssParams {
    double shape;
    PeriodicFn nu;
};

// Max-semi-stable CDF; with nu == 1 it coincides with the GEV CDF (same
// shape, standard position).
double mss_cdf(const MssParams& params, double x);

// Heavy-tail model defined through its tail quantile function
//   U(t) = C t^shape (1 + shape*scale2*t^shape2 / shape2),  t >= 1,
// i.e. a second-order expansion with the vanishing remainder removed. Used
// as the simulation oracle with known (shape, scale2, shape2).
class HallWelshModel {
  public:
    HallWelshModel(double shape, double scale2, double shape2, double scale);

    double shape() const noexcept { return shape_; }
    double scale2() const noexcept { return scale2_; }
    double shape2() const noexcept { return shape2_; }
    double scale() const noexcept { return scale_; }

    double quantile(double t) const;  // t >= 1
    OrderedSample sample(std::size_t n, std::uint64_t seed) const;

  private:
    double shape_, scale2_, shape2_, scale_;
};

struct NormalizingConstants {
    double a_n;
    double b_n;
    std::size_t n;
};

double std_normal_pdf(double x);
double std_normal_cdf(double x);
double std_normal_quantile(double q);

// Attraction coefficients for the normal maximum: b_n solves 1 - Phi(b) = 1/n
// and a_n = 1/(n phi(b_n)).
NormalizingConstants normal_attraction_constants(std::size_t n);

}  // namespace evt
