#include "xychain/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "xychain/errors.hpp"
#include "xychain/golden.hpp"
#include "xychain/spectral.hpp"

namespace xychain {

namespace {

constexpr double kExtremalFloor = 1.0 - 1e-9;

void require_odd(const ChainSpec& spec) {
    spec.require_zero_field();
    if (spec.is_even())
        throw ValidationError("odd-N bound is undefined for even N = " + std::to_string(spec.n_sites));
}

} // namespace

BoundReport bound_report(const ChainSpec& spec) {
    require_odd(spec);
    if (spec.delta < 1.0)
        throw ValidationError("bound assumes delta >= 1; relabel the couplings and pass 1/delta = " +
                              std::to_string(1.0 / spec.delta));
    const std::size_t n = spec.n_sites;
    const double nn = static_cast<double>(n);
    const double delta = spec.delta;

    BoundReport r;
    r.n_sites = n;
    r.delta = delta;
    for (std::size_t j = 1; j <= (n - 1) / 2; ++j) {
        const double c = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / (nn + 1.0));
        r.r_values.push_back((2.0 + 2.0 * c) / (delta + 1.0 / delta + 2.0 * c));
    }
    r.delta_max = r.r_values.front();
    r.f1_cap = r.delta_max * (nn - 1.0) / (nn + 1.0);
    r.f2_cap = 2.0 / (nn + 1.0);
    const double half = static_cast<double>((n - 1) / 2);
    r.f2_value = std::pow(delta, half) * zero_mode_weight(n, delta);
    const double root = (r.delta_max * (nn - 1.0) + 2.0) / (nn + 1.0);
    r.p_bound = root * root;
    return r;
}

bool equality_feasible(const ChainSpec& spec, double horizon) {
    require_odd(spec);
    if (spec.delta != 1.0)
        return false;
    const std::size_t n = spec.n_sites;
    const double nn = static_cast<double>(n);
    std::vector<double> half_freq;
    for (std::size_t j = 1; j <= (n - 1) / 2; ++j) {
        const double c = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / (nn + 1.0));
        half_freq.push_back(0.5 * std::sqrt(2.0 + 2.0 * c));
    }
    auto worst = [&](double t) {
        double g = 1.0;
        for (double w : half_freq)
            g = std::min(g, std::abs(std::cos(w * t)));
        return g;
    };

    const double step = std::numbers::pi / (2.0 * half_freq.front()) / 40.0;
    const auto count = static_cast<std::size_t>(std::ceil(horizon / step));
    double prev = worst(0.0);
    double cur = worst(step);
    for (std::size_t i = 2; i <= count + 1; ++i) {
        const double t = step * static_cast<double>(i);
        const double next = worst(t);
        if (cur >= prev && cur >= next && cur > 0.99) {
            const double lo = std::max(step, t - 2.0 * step);
            const auto [t0, g0] = detail::golden_section_max(worst, lo, std::min(t, horizon), 1e-12);
            if (t0 <= horizon && g0 >= kExtremalFloor)
                return true;
        }
        prev = cur;
        cur = next;
    }
    return false;
}

} // namespace xychain
