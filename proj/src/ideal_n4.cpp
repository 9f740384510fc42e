#include "xychain/ideal_n4.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "xychain/errors.hpp"

namespace xychain {

namespace {
constexpr double kValidationFloor = 1.0 - 1e-9;
constexpr double kDedupTolerance = 1e-12;
} // namespace

std::pair<double, double> n4_frequencies(double delta) {
    const double root = delta * std::sqrt(delta * delta + 4.0);
    const double large = std::sqrt((2.0 + delta * delta + root) / 2.0);
    // Computed via the product identity to avoid cancellation at large delta.
    return {large, 1.0 / large};
}

double n4_probability(double delta, double t) {
    if (!(delta > 0.0))
        throw ValidationError("delta must be positive");
    if (t < 0.0)
        throw ValidationError("time must be non-negative");
    const double c = delta / std::sqrt(delta * delta + 4.0);
    const auto [large, small] = n4_frequencies(delta);
    const double amp = (1.0 + c) * std::sin(0.5 * t * small) - (1.0 - c) * std::sin(0.5 * t * large);
    return 0.25 * amp * amp;
}

IdealSolution ideal_candidate(long a, long b) {
    if (a <= 0 || b <= 0 || a == b)
        throw ValidationError("ideal candidate needs distinct positive integers, got (" +
                              std::to_string(a) + ", " + std::to_string(b) + ")");
    IdealSolution s;
    s.a = a;
    s.b = b;
    const double product = static_cast<double>(a) * static_cast<double>(b);
    s.delta_bar = std::abs(static_cast<double>(a - b)) / std::sqrt(product);
    s.t_bar = std::numbers::pi * std::sqrt(product);
    s.probability = n4_probability(s.delta_bar, s.t_bar);
    s.validated = s.probability >= kValidationFloor;
    return s;
}

IdealFamily ideal_solutions(long max_product) {
    if (max_product < 3)
        throw ValidationError("max_product must be at least 3, got " + std::to_string(max_product));
    IdealFamily family;
    for (long a = 3; a <= max_product; a += 4)
        for (long b = 1; a * b <= max_product; b += 4) {
            auto s = ideal_candidate(a, b);
            (s.validated ? family.solutions : family.rejected).push_back(s);
        }
    std::sort(family.solutions.begin(), family.solutions.end(), [](const auto& l, const auto& r) {
        return l.t_bar != r.t_bar ? l.t_bar < r.t_bar : l.delta_bar < r.delta_bar;
    });
    auto same = [](const IdealSolution& l, const IdealSolution& r) {
        return std::abs(l.t_bar - r.t_bar) <= kDedupTolerance &&
               std::abs(l.delta_bar - r.delta_bar) <= kDedupTolerance;
    };
    family.solutions.erase(std::unique(family.solutions.begin(), family.solutions.end(), same),
                           family.solutions.end());
    return family;
}

} // namespace xychain
