#pragma once

#include <cstddef>
#include <vector>

#include "evt/sample.hpp"

namespace evt {

// Largest k such that the threshold order statistic X_{n-k:n} is positive;
// 0 when fewer than two values are positive.
std::size_t max_positive_tail_level(const OrderedSample& sample);

// Order-p moment of the log-excesses over X_{n-k:n}:
//   (1/k) sum_{i=1..k} (ln X_{n-i+1:n} - ln X_{n-k:n})^p.
// p == 0 returns 1 (empty-product convention).
double log_excess_moment(const OrderedSample& sample, TailLevel level, double p);

// (1/k) sum_{i=1..k} (1 - X_{n-k:n}/X_{n-i+1:n})^p, p >= 1; value in [0, 1).
double ratio_excess_moment(const OrderedSample& sample, TailLevel level, double p);

// (U_1k, ..., U_kk) with U_ik = X_{n-i+1:n}/X_{n-k:n}, largest first, each >= 1.
std::vector<double> excess_ratios(const OrderedSample& sample, TailLevel level);

// First log-excess moments for k = 1..k_max in one pass (prefix sums over the
// descending log order statistics). result[k-1] corresponds to level k.
// Requires k_max <= max_positive_tail_level(sample).
std::vector<double> hill_sweep(const OrderedSample& sample, std::size_t k_max);

// Descending logs of the top (k_max + 1) order statistics:
// out[0] = ln X_{n:n}, ..., out[k_max] = ln X_{n-k_max:n}.
std::vector<double> top_log_order_stats(const OrderedSample& sample, std::size_t k_max);

}  // namespace evt
