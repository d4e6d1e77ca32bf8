#include <doctest.h>

#include "../support/testutil.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "evt/errors.hpp"
#include "evt/tail_stats.hpp"

using namespace evt;

namespace {
const double kE = std::exp(1.0);

OrderedSample hand_sample() {
    return OrderedSample({1.0, kE, kE * kE, kE * kE * kE}, "hand");
}

OrderedSample lognormal_sample(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = std::exp(nd(gen));
    return OrderedSample(std::move(v), "lognormal");
}
}  // namespace

TEST_SUITE("tail_stats") {

TEST_CASE("ordered sample container") {
    CHECK_THROWS_AS(OrderedSample({1.0}), domain_error);
    CHECK_THROWS_AS(OrderedSample({1.0, std::nan("")}), domain_error);
    CHECK_THROWS_AS(OrderedSample::from_sorted({2.0, 1.0}), domain_error);
    const OrderedSample s({3.0, 1.0, 2.0});
    CHECK(s.order_stat(1) == 1.0);
    CHECK(s.order_stat(3) == 3.0);
    CHECK_THROWS_AS(s.order_stat(0), domain_error);
    CHECK_THROWS_AS(s.order_stat(4), domain_error);
}

TEST_CASE("log excess moments: hand values") {
    const auto s = hand_sample();
    CHECK(log_excess_moment(s, {3}, 1.0) == testutil::AbsApprox(2.0).margin(1e-12));
    CHECK(log_excess_moment(s, {3}, 2.0) == testutil::AbsApprox(14.0 / 3.0).margin(1e-12));
    CHECK(log_excess_moment(s, {3}, 0.0) == 1.0);
    CHECK(log_excess_moment(s, {2}, 1.0) == testutil::AbsApprox(1.5).margin(1e-12));
    CHECK_THROWS_AS(log_excess_moment(s, {0}, 1.0), domain_error);
    CHECK_THROWS_AS(log_excess_moment(s, {4}, 1.0), domain_error);
    const OrderedSample neg({-1.0, 0.5, 2.0, 3.0});
    CHECK_THROWS_AS(log_excess_moment(neg, {3}, 1.0), domain_error);
}

TEST_CASE("ratio excess moments") {
    const OrderedSample s({1.0, kE, kE * kE});
    const double expected = ((1.0 - std::exp(-2.0)) + (1.0 - std::exp(-1.0))) / 2.0;
    CHECK(ratio_excess_moment(s, {2}, 1.0) == testutil::AbsApprox(expected).margin(1e-12));
    CHECK(expected == testutil::AbsApprox(0.748393).margin(1e-6));
    const OrderedSample tied({1.0, 1.0, 1.0});
    CHECK(ratio_excess_moment(tied, {2}, 1.0) == 0.0);
    CHECK_THROWS_AS(ratio_excess_moment(s, {2}, 0.5), domain_error);
    // order-1 value sits strictly below 1
    const auto big = lognormal_sample(500, 3);
    for (std::size_t k : {std::size_t(5), std::size_t(50), std::size_t(499)}) {
        const double l1 = ratio_excess_moment(big, {k}, 1.0);
        CHECK(l1 >= 0.0);
        CHECK(l1 < 1.0);
    }
}

TEST_CASE("excess ratios") {
    const auto s = hand_sample();
    const auto r = excess_ratios(s, {3});
    REQUIRE(r.size() == 3);
    CHECK(r[0] == testutil::AbsApprox(kE * kE * kE).epsilon(1e-14));
    CHECK(r[1] == testutil::AbsApprox(kE * kE).epsilon(1e-14));
    CHECK(r[2] == testutil::AbsApprox(kE).epsilon(1e-14));
    const auto one = excess_ratios(s, {1});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == testutil::AbsApprox(kE).epsilon(1e-14));
    // strictly decreasing for distinct values, each >= 1
    const auto big = lognormal_sample(200, 4);
    const auto rr = excess_ratios(big, {60});
    for (std::size_t i = 0; i < rr.size(); ++i) {
        CHECK(rr[i] >= 1.0);
        if (i) CHECK(rr[i] <= rr[i - 1]);
    }
}

TEST_CASE("scale invariance of the tail statistics") {
    const auto s = lognormal_sample(300, 5);
    for (double c : {1e-6, 3.0, 1e6}) {
        std::vector<double> scaled(s.values().begin(), s.values().end());
        for (double& v : scaled) v *= c;
        const OrderedSample sc(std::move(scaled));
        for (std::size_t k : {std::size_t(10), std::size_t(150), std::size_t(299)}) {
            const double a = log_excess_moment(s, {k}, 1.0);
            const double b = log_excess_moment(sc, {k}, 1.0);
            CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
            const auto ra = excess_ratios(s, {k});
            const auto rb = excess_ratios(sc, {k});
            for (std::size_t i = 0; i < ra.size(); ++i) {
                CHECK(std::fabs(ra[i] - rb[i]) <= 1e-12 * ra[i]);
            }
        }
    }
}

TEST_CASE("second moment dominates squared first moment") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = lognormal_sample(120, 100 + seed);
        for (std::size_t k : {std::size_t(3), std::size_t(40), std::size_t(119)}) {
            const double m1 = log_excess_moment(s, {k}, 1.0);
            const double m2 = log_excess_moment(s, {k}, 2.0);
            CHECK(m1 >= 0.0);
            CHECK(m2 >= m1 * m1 - 1e-12);
        }
    }
}

TEST_CASE("sweep agrees with the per-level definition") {
    const auto s = lognormal_sample(400, 6);
    const auto sweep = hill_sweep(s, 399);
    for (std::size_t k = 1; k <= 399; k += 7) {
        const double direct = log_excess_moment(s, {k}, 1.0);
        CHECK(sweep[k - 1] == testutil::AbsApprox(direct).margin(1e-10));
    }
}

TEST_CASE("positive tail depth") {
    CHECK(max_positive_tail_level(OrderedSample({-3.0, -2.0, 1.0, 2.0, 5.0})) == 2);
    CHECK(max_positive_tail_level(OrderedSample({1.0, 2.0, 5.0})) == 2);
    CHECK(max_positive_tail_level(OrderedSample({-2.0, -1.0})) == 0);
    CHECK(max_positive_tail_level(OrderedSample({-2.0, 1.0})) == 0);
    CHECK(max_positive_tail_level(OrderedSample({0.0, 1.0, 2.0})) == 1);
}

}  // TEST_SUITE
