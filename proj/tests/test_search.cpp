#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "xychain/errors.hpp"
#include "xychain/ideal_n4.hpp"
#include "xychain/search.hpp"
#include "xychain/spectral.hpp"

using namespace xychain;

TEST_CASE("first peaks at the published ratios") {
    auto t = first_peak(ChainSpec::uniform_field(4, 2.272));
    CHECK(std::abs(t.t_h - 8.303) <= 0.01);
    CHECK(std::abs(t.p_h - 0.999) <= 0.001);
    // Published estimates divide pi by the eigenvalue rounded to three decimals.
    CHECK(std::abs(t.lambda_min_estimate - 8.333) <= 0.01);
    CHECK(std::numbers::pi / 0.377 == doctest::Approx(8.333).epsilon(1e-4));

    t = first_peak(ChainSpec::uniform_field(6, 2.373));
    CHECK(std::abs(t.t_h - 21.428) <= 0.05);
    CHECK(std::abs(t.p_h - 0.997) <= 0.001);
    CHECK(std::abs(t.lambda_min_estimate - 21.227) <= 0.01);

    t = first_peak(ChainSpec::uniform_field(8, 2.557));
    CHECK(std::abs(t.t_h - 58.966) <= 0.1);
    CHECK(std::abs(t.p_h - 0.989) <= 0.001);
    CHECK(std::abs(t.lambda_min_estimate - std::numbers::pi / 0.0507564) <= 0.01);
    CHECK(std::numbers::pi / 0.051 == doctest::Approx(61.600).epsilon(1e-4));
    CHECK(std::abs(t.t_h - t.lambda_min_estimate) / t.t_h <= 0.10);
}

TEST_CASE("first peak is a refined local maximum inside the window") {
    const auto spec = ChainSpec::uniform_field(6, 2.5);
    const auto t = first_peak(spec);
    const auto eig = eigensystem_auto(spec);
    const ProbabilityEvaluator prob(eig, 6);
    CHECK(t.t_h > 0.0);
    CHECK(t.t_h <= 1.3 * t.lambda_min_estimate);
    CHECK(prob(t.t_h) >= prob(t.t_h - 1e-4));
    CHECK(prob(t.t_h) >= prob(t.t_h + 1e-4));
    for (int i = 1; i <= 10000; ++i)
        CHECK(prob(1.3 * t.lambda_min_estimate * i / 10000.0) <= t.p_h + 1e-9);
}

TEST_CASE("delta optimization") {
    auto t = optimize_delta(4, 2.0, 3.0);
    CHECK(std::abs(t.delta_h - 2.272) <= 0.02);
    CHECK(t.p_h >= 0.998);
    t = optimize_delta(6, 2.0, 3.0);
    CHECK(std::abs(t.delta_h - 2.373) <= 0.02);
    CHECK(t.p_h >= 0.996);
    CHECK_THROWS_AS(optimize_delta(6, 1.2, 3.0), ValidationError);
    CHECK_THROWS_AS(optimize_delta(6, 2.5, 2.5), ValidationError);
    CHECK_THROWS_AS(optimize_delta(5, 2.0, 3.0), ValidationError);
}

TEST_CASE("delta optimization is independent of the worker count") {
    ::setenv("XYCHAIN_WORKERS", "1", 1);
    const auto serial = optimize_delta(8, 2.4, 2.7);
    ::setenv("XYCHAIN_WORKERS", "4", 1);
    const auto parallel = optimize_delta(8, 2.4, 2.7);
    ::unsetenv("XYCHAIN_WORKERS");
    CHECK(serial.delta_h == parallel.delta_h);
    CHECK(serial.t_h == parallel.t_h);
    CHECK(serial.p_h == parallel.p_h);
    CHECK(std::abs(serial.delta_h - 2.557) <= 0.02);
    CHECK(serial.p_h >= 0.988);
}

TEST_CASE("fixed-time optimization") {
    auto t = fixed_time_optimize(4, 8.303, 2.0, 3.0);
    CHECK(std::abs(t.delta_h - 2.272) <= 0.01);
    CHECK(std::abs(t.p_h - 0.999) <= 0.001);
    CHECK(t.t_h == 8.303);
    t = fixed_time_optimize(6, 1e-6, 2.0, 3.0);
    CHECK(t.p_h <= 1e-6);
    CHECK_THROWS_AS(fixed_time_optimize(6, 0.0, 2.0, 3.0), ValidationError);
}

TEST_CASE("sweep rows are sorted and failures are flagged per row") {
    const auto rows = table1_sweep(2.38, {8, 4, 6});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n_sites == 4);
    CHECK(rows[1].n_sites == 6);
    CHECK(rows[2].n_sites == 8);
    for (const auto& r : rows)
        CHECK_FALSE(r.error.has_value());
    CHECK(std::abs(rows[0].t_h1 - 8.084) <= 0.05);
    CHECK(std::abs(rows[0].p_h1 - 0.990) <= 0.002);
    CHECK_THROWS_AS(table1_sweep(1.4, {4, 6}), ValidationError);
    CHECK_THROWS_AS(table1_sweep(2.38, {5}), ValidationError);
}

TEST_CASE("horizon error for a vanishing gap") {
    // Gap shrinks like delta^(-N/2); at N = 60, delta = 9 it is far below 1e-12.
    CHECK_THROWS_AS(first_peak(ChainSpec::uniform_field(60, 9.0)), HorizonError);
    const auto rows = table1_sweep(9.0, {4, 60});
    CHECK_FALSE(rows[0].error.has_value());
    CHECK(rows[1].error.has_value());
}

TEST_CASE("dwell window around the main peak") {
    const auto eig = eigensystem_auto(ChainSpec::uniform_field(4, 2.272));
    const auto curve = sample_curve(eig, 4, 30.0, 3001);
    const auto window = dwell_window(curve, 0.8);
    REQUIRE(window.has_value());
    CHECK(window->begin <= 8.303);
    CHECK(window->end >= 8.303);
    CHECK_FALSE(dwell_window(curve, 1.0).has_value());

    const double ideal_delta = 2.0 / std::sqrt(3.0);
    const auto ideal = sample_curve(eigensystem_auto(ChainSpec::uniform_field(4, ideal_delta)), 4, 10.0, 10001);
    const auto tight = dwell_window(ideal, 0.999);
    REQUIRE(tight.has_value());
    CHECK(tight->begin <= std::numbers::pi * std::sqrt(3.0));
    CHECK(tight->end >= std::numbers::pi * std::sqrt(3.0));
}

TEST_CASE("intermediate nodes never reach high probability") {
    for (const auto& [n, d] : {std::pair<std::size_t, double>{4, 2.272}, {6, 2.373}, {8, 2.557}}) {
        const auto triad = first_peak(ChainSpec::uniform_field(n, d));
        const auto eig = eigensystem_auto(ChainSpec::uniform_field(n, d));
        for (std::size_t k = 2; k < n; ++k) {
            const auto curve = sample_curve(eig, k, 2.0 * triad.t_h, 20001);
            CHECK(*std::max_element(curve.probabilities.begin(), curve.probabilities.end()) < 0.9);
        }
    }
}
