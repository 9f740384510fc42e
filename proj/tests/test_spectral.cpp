#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "xychain/errors.hpp"
#include "xychain/spectral.hpp"

using namespace xychain;

namespace {

std::vector<double> positive_part(const EigenSystem& eig) {
    std::vector<double> out;
    for (double l : eig.eigenvalues)
        if (l > 1e-12)
            out.push_back(l);
    return out;
}

double column_distance(const EigenSystem& eig, std::size_t nu, const std::vector<double>& ref) {
    double same = 0.0, flipped = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        same = std::max(same, std::abs(eig.u(k, nu) - ref[k]));
        flipped = std::max(flipped, std::abs(eig.u(k, nu) + ref[k]));
    }
    return std::min(same, flipped);
}

void check_invariants(const EigenSystem& eig, const ChainSpec& spec) {
    const auto m = build_coupling_matrix(spec);
    CHECK(eig.orthonormality_error() <= 1e-10);
    CHECK(eig.residual(m) <= 1e-9 * m.max_abs_entry());
    CHECK(std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend()));
    for (std::size_t i = 0; i < eig.size(); ++i)
        CHECK(std::abs(eig.eigenvalues[i] + eig.eigenvalues[eig.size() - 1 - i]) <= 1e-10);
}

} // namespace

TEST_CASE("x-roots of the four-site chain") {
    // Frozen from a 30-digit Newton solve of delta sin(2x) + sin(3x) = 0.
    const auto roots = solve_even_roots(ChainSpec::uniform_field(4, 2.272));
    REQUIRE(roots.x_roots.size() == 1);
    CHECK(roots.x_roots[0] == doctest::Approx(1.38093854458892344).epsilon(1e-12));
    CHECK(roots.y_root == doctest::Approx(0.785524948679068125).epsilon(1e-12));

    const double d = 2.272;
    CHECK(std::sqrt(1 + d * d + 2 * d * std::cos(roots.x_roots[0])) == doctest::Approx(2.649).epsilon(0.001));
    CHECK(std::sqrt(1 + d * d - 2 * d * std::cosh(roots.y_root)) == doctest::Approx(0.377).epsilon(0.002));
}

TEST_CASE("large-delta limit pins the x-root at pi/2") {
    const auto roots = solve_even_roots(ChainSpec::uniform_field(4, 1e6));
    REQUIRE(roots.x_roots.size() == 1);
    CHECK(std::abs(roots.x_roots[0] - std::numbers::pi / 2) < 1e-5);
}

TEST_CASE("root sets satisfy the secular equations") {
    for (std::size_t n = 4; n <= 24; n += 2)
        for (double d : {1.01 * (n + 2.0) / n, 2.0, 2.38, 3.0, 10.0}) {
            const auto roots = solve_even_roots(ChainSpec::uniform_field(n, d));
            REQUIRE(roots.x_roots.size() == n / 2 - 1);
            for (std::size_t i = 0; i < roots.x_roots.size(); ++i) {
                CHECK(roots.x_roots[i] > 0.0);
                CHECK(roots.x_roots[i] < std::numbers::pi);
                CHECK(std::abs(even_x_residual(n, d, roots.x_roots[i])) <= 1e-12);
                if (i > 0)
                    CHECK(roots.x_roots[i] > roots.x_roots[i - 1]);
            }
            CHECK(roots.y_root > 0.0);
            CHECK(std::abs(even_y_residual(n, d, roots.y_root)) <= 1e-12);
        }
}

TEST_CASE("closed-form even regime is enforced") {
    CHECK_THROWS_AS(solve_even_roots(ChainSpec::uniform_field(4, 1.5)), RegimeError);
    CHECK_THROWS_AS(solve_even_roots(ChainSpec::uniform_field(6, 1.2)), RegimeError);
    CHECK_THROWS_AS(solve_even_roots(ChainSpec::uniform_field(5, 3.0)), ValidationError);
    auto spec = ChainSpec::uniform_field(4, 3.0);
    spec.larmor[1] = 0.5;
    CHECK_THROWS_AS(eigensystem_even(spec), ValidationError);
    CHECK_THROWS_AS(eigensystem_odd(ChainSpec::uniform_field(4, 3.0)), ValidationError);
    // At the regime boundary the automatic path falls back to the numeric solver.
    CHECK(eigensystem_auto(ChainSpec::uniform_field(4, 1.5)).provenance == Provenance::Numeric);
}

TEST_CASE("even-N published spectra") {
    struct Case {
        std::size_t n;
        double delta;
        std::vector<double> positive;
    };
    for (const auto& c : {Case{4, 2.272, {2.649, 0.377}}, Case{6, 2.373, {3.060, 2.208, 0.148}},
                          Case{8, 2.557, {3.366, 2.828, 2.070, 0.051}}}) {
        const auto spec = ChainSpec::uniform_field(c.n, c.delta);
        const auto eig = eigensystem_even(spec);
        CHECK(eig.provenance == Provenance::AnalyticEven);
        check_invariants(eig, spec);
        const auto pos = positive_part(eig);
        REQUIRE(pos.size() == c.positive.size());
        for (std::size_t i = 0; i < pos.size(); ++i)
            CHECK(std::abs(pos[i] - c.positive[i]) < 1e-3);
    }
}

TEST_CASE("odd-N published spectra and the zero mode") {
    auto pos = positive_part(eigensystem_odd(ChainSpec::uniform_field(5, 1.0)));
    CHECK(pos[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(pos[1] == doctest::Approx(1.0).epsilon(1e-14));
    pos = positive_part(eigensystem_odd(ChainSpec::uniform_field(5, 2.0)));
    CHECK(pos[0] == doctest::Approx(std::sqrt(7.0)).epsilon(1e-14));
    CHECK(pos[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));

    for (std::size_t n = 3; n <= 21; n += 2)
        for (double d : {0.4, 1.0, 1.0 + 5e-9, 1.7, 3.0}) {
            const auto spec = ChainSpec::uniform_field(n, d);
            const auto eig = eigensystem_odd(spec);
            check_invariants(eig, spec);
            const std::size_t zero = (n - 1) / 2;
            CHECK(std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                                [](double l) { return std::abs(l) < 1e-12; }) == 1);
            CHECK(eig.eigenvalues[zero] == 0.0);
            for (std::size_t k = 1; k < n; k += 2)
                CHECK(eig.u(k, zero) == 0.0);
        }
}

TEST_CASE("numeric solver: trivial spectra and determinism") {
    auto eig = eigensystem_numeric(build_coupling_matrix(ChainSpec::uniform_field(2, 1.0)));
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-15));

    eig = eigensystem_numeric(build_coupling_matrix(ChainSpec::uniform_field(3, 1.0)));
    CHECK(eig.eigenvalues[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(std::abs(eig.eigenvalues[1]) < 1e-14);
    CHECK(eig.eigenvalues[2] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));

    const auto m = build_coupling_matrix(ChainSpec::uniform_field(9, 1.3));
    const auto a = eigensystem_numeric(m);
    const auto b = eigensystem_numeric(m);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.vectors == b.vectors);
    for (std::size_t nu = 0; nu < a.size(); ++nu) {
        std::size_t k = 0;
        while (std::abs(a.u(k, nu)) <= 1e-12)
            ++k;
        CHECK(a.u(k, nu) > 0.0);
    }
}

TEST_CASE("numeric solver agrees with a Jacobi oracle, including a Larmor diagonal") {
    std::mt19937_64 rng(20260501);
    std::uniform_real_distribution<double> ratio(0.2, 4.0), field(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 15;
        auto spec = ChainSpec::uniform_field(n, ratio(rng), 0.5 + ratio(rng));
        if (trial % 2)
            for (auto& w : spec.larmor)
                w = field(rng);
        const auto m = build_coupling_matrix(spec);
        const auto eig = eigensystem_numeric(m);
        auto dense = oracle::alternating_chain(n, spec.delta, spec.d1);
        for (std::size_t i = 0; i < n; ++i)
            dense[i][i] = spec.larmor[i];
        const auto ref = oracle::jacobi(dense);
        CHECK(eig.orthonormality_error() <= 1e-10);
        CHECK(eig.residual(m) <= 1e-9 * m.max_abs_entry());
        for (std::size_t nu = 0; nu < n; ++nu) {
            CHECK(std::abs(eig.eigenvalues[nu] - ref.values[nu]) <= 1e-10 * m.max_abs_entry());
            CHECK(column_distance(eig, nu, ref.vectors[nu]) <= 1e-8);
        }
    }
}

TEST_CASE("closed forms agree with the numeric solver across the grid") {
    for (std::size_t n = 4; n <= 16; n += 2)
        for (double d : {2.0, 2.38, 3.0}) {
            const auto spec = ChainSpec::uniform_field(n, d);
            const auto analytic = eigensystem_even(spec);
            const auto numeric = eigensystem_numeric(build_coupling_matrix(spec));
            check_invariants(analytic, spec);
            for (std::size_t nu = 0; nu < n; ++nu) {
                CHECK(std::abs(analytic.eigenvalues[nu] - numeric.eigenvalues[nu]) <= 1e-9);
                std::vector<double> col(n);
                for (std::size_t k = 0; k < n; ++k)
                    col[k] = numeric.u(k, nu);
                CHECK(column_distance(analytic, nu, col) <= 1e-8);
            }
        }
    for (std::size_t n = 3; n <= 15; n += 2)
        for (double d : {1.0, 1.5, 2.0}) {
            const auto spec = ChainSpec::uniform_field(n, d);
            const auto analytic = eigensystem_odd(spec);
            const auto numeric = eigensystem_numeric(build_coupling_matrix(spec));
            for (std::size_t nu = 0; nu < n; ++nu) {
                CHECK(std::abs(analytic.eigenvalues[nu] - numeric.eigenvalues[nu]) <= 1e-9);
                std::vector<double> col(n);
                for (std::size_t k = 0; k < n; ++k)
                    col[k] = numeric.u(k, nu);
                CHECK(column_distance(analytic, nu, col) <= 1e-8);
            }
        }
}

TEST_CASE("N=6 closed form matches the numeric path to stated precision") {
    const auto spec = ChainSpec::uniform_field(6, 2.373);
    const auto a = eigensystem_even(spec);
    const auto b = eigensystem_numeric(build_coupling_matrix(spec));
    for (std::size_t nu = 0; nu < 6; ++nu) {
        CHECK(std::abs(a.eigenvalues[nu] - b.eigenvalues[nu]) <= 1e-9);
        for (std::size_t k = 0; k < 6; ++k)
            CHECK(std::abs(std::abs(a.u(k, nu)) - std::abs(b.u(k, nu))) <= 1e-8);
    }
}

TEST_CASE("bracketing scan finds exactly N/2 - 1 sign changes") {
    for (std::size_t n = 4; n <= 20; n += 2)
        for (double d : {1.05 * (n + 2.0) / n, 2.38, 5.0}) {
            const std::size_t samples = 10 * n;
            int changes = 0;
            double prev = even_x_residual(n, d, std::numbers::pi / samples);
            for (std::size_t i = 2; i < samples; ++i) {
                const double f = even_x_residual(n, d, std::numbers::pi * i / samples);
                changes += (f > 0) != (prev > 0);
                prev = f;
            }
            CHECK(changes == static_cast<int>(n / 2 - 1));
        }
}

TEST_CASE("lambda_{N/2} is the smallest positive eigenvalue and shrinks with N") {
    for (double d : {2.0, 2.38, 3.0}) {
        double previous = 1e300;
        for (std::size_t n = 4; n <= 16; n += 2) {
            const auto eig = eigensystem_even(ChainSpec::uniform_field(n, d));
            const double lam = eig.eigenvalues[n / 2 - 1];
            double smallest = 1e300;
            for (double l : eig.eigenvalues)
                if (l > 0.0)
                    smallest = std::min(smallest, l);
            CHECK(lam == smallest);
            CHECK(lam == eig.min_positive());
            CHECK(lam < previous);
            previous = lam;
        }
    }
}

TEST_CASE("D1 scales the spectrum") {
    const auto unit = eigensystem_even(ChainSpec::uniform_field(6, 2.5));
    const auto scaled = eigensystem_even(ChainSpec::uniform_field(6, 2.5, 3.0));
    for (std::size_t nu = 0; nu < 6; ++nu)
        CHECK(scaled.eigenvalues[nu] == doctest::Approx(3.0 * unit.eigenvalues[nu]).epsilon(1e-13));
    const auto odd = eigensystem_odd(ChainSpec::uniform_field(7, 1.5, 0.25));
    check_invariants(odd, ChainSpec::uniform_field(7, 1.5, 0.25));
}
