#include <doctest.h>

#include "../support/testutil.hpp"

#include <cmath>
#include <vector>

#include "../support/oracles.hpp"
#include "evt/distributions.hpp"
#include "evt/errors.hpp"
#include "evt/port.hpp"

using namespace evt;

namespace {

// values on a coarse dyadic grid so adding +-1000 stays exact in binary
OrderedSample dyadic_sample(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<double> v(n);
    for (double& x : v) {
        x = 1.0 + static_cast<double>(gen() % 4096) / 64.0;  // multiples of 2^-6 in [1, 65)
    }
    return OrderedSample(std::move(v));
}

OrderedSample shifted(const OrderedSample& s, double lambda) {
    std::vector<double> v(s.values().begin(), s.values().end());
    for (double& x : v) x += lambda;
    return OrderedSample(std::move(v));
}

}  // namespace

TEST_SUITE("port") {

TEST_CASE("quantile index arithmetic") {
    CHECK(PortConfig{0.25}.n_s(10) == 3);
    CHECK(PortConfig{0.25}.n_s(4) == 2);
    CHECK(PortConfig{0.0}.n_s(10) == 1);
    CHECK_THROWS_AS(PortConfig{1.0}.n_s(10), domain_error);
    CHECK_THROWS_AS(PortConfig{-0.1}.n_s(10), domain_error);
}

TEST_CASE("excess construction hand example") {
    const OrderedSample s({1.0, 2.0, 3.0, 4.0});
    const auto e = port_excesses(s, {0.25});  // threshold X_{2:4} = 2
    REQUIRE(e.size() == 2);
    CHECK(e.order_stat(1) == 1.0);
    CHECK(e.order_stat(2) == 2.0);
    // s = 0 thresholds at the minimum
    const auto e0 = port_excesses(s, {0.0});
    REQUIRE(e0.size() == 3);
    CHECK(e0.order_stat(3) == 3.0);
    CHECK_THROWS_AS(port_excesses(s, {0.95}), domain_error);  // n_s = 4 >= n
}

TEST_CASE("length contract") {
    for (std::size_t n : {std::size_t(10), std::size_t(57), std::size_t(200)}) {
        const auto s = dyadic_sample(n, n);
        for (double sv : {0.0, 0.1, 0.33, 0.8}) {
            const PortConfig cfg{sv};
            if (cfg.n_s(n) >= n) continue;
            if (n - cfg.n_s(n) < 2) {  // too few excesses to form a sample
                CHECK_THROWS_AS(port_excesses(s, cfg), domain_error);
                continue;
            }
            CHECK(port_excesses(s, cfg).size() == n - cfg.n_s(n));
        }
    }
}

TEST_CASE("bit-exact location invariance on grid data") {
    const auto s = dyadic_sample(500, 9);
    for (double lambda : {-1000.0, 1000.0, 512.25}) {
        const auto sh = shifted(s, lambda);
        const auto a = port_excesses(s, {0.1});
        const auto b = port_excesses(sh, {0.1});
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 1; i <= a.size(); ++i) CHECK(a.order_stat(i) == b.order_stat(i));
        for (auto base : {PortBase::Hill, PortBase::Moment, PortBase::MixedMoment}) {
            CHECK(port_evi(s, {0.1}, {40}, base).value == port_evi(sh, {0.1}, {40}, base).value);
        }
    }
}

TEST_CASE("scale invariance") {
    const auto s = dyadic_sample(500, 10);
    std::vector<double> v(s.values().begin(), s.values().end());
    for (double& x : v) x *= 2.0;  // exact in binary
    const OrderedSample sc(std::move(v));
    for (auto base : {PortBase::Hill, PortBase::MixedMoment, PortBase::Moment}) {
        const double a = port_evi(s, {0.1}, {40}, base).value;
        const double b = port_evi(sc, {0.1}, {40}, base).value;
        CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
    }
}

TEST_CASE("method tags") {
    const auto s = dyadic_sample(100, 11);
    CHECK(port_evi(s, {0.1}, {20}, PortBase::Hill).method == Method::PortHill);
    CHECK(port_evi(s, {0.1}, {20}, PortBase::Moment).method == Method::PortMoment);
    CHECK(port_evi(s, {0.1}, {20}, PortBase::MixedMoment).method == Method::PortMixedMoment);
}

TEST_CASE("shift-stable tail estimation where the raw estimator drifts") {
    const HallWelshModel m(0.5, 1.0, -1.0, 1.0);
    const std::size_t n = 5000, k = 70;
    std::vector<double> raw_shifted, port_plain, port_shifted;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto s = m.sample(n, 4200 + seed);
        const auto sh = shifted(s, 100.0);
        raw_shifted.push_back(hill(sh, {k}).value);
        port_plain.push_back(port_evi(s, {0.1}, {k}, PortBase::Hill).value);
        port_shifted.push_back(port_evi(sh, {0.1}, {k}, PortBase::Hill).value);
    }
    CHECK(std::fabs(oracles::median(raw_shifted) - 0.5) > 0.1);  // location breaks the raw one
    CHECK(oracles::median(port_shifted) == testutil::AbsApprox(0.5).margin(0.1));
    // and the shift does not move the invariant variant at all
    for (std::size_t i = 0; i < port_plain.size(); ++i) {
        CHECK(port_shifted[i] == testutil::AbsApprox(port_plain[i]).margin(1e-9));
    }
}

}  // TEST_SUITE
