#include "xychain/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "xychain/errors.hpp"
#include "xychain/golden.hpp"
#include "xychain/parallel.hpp"
#include "xychain/spectral.hpp"

namespace xychain {

namespace {

constexpr double kWindowFactor = 1.3;
constexpr double kTimeTolerance = 1e-8;
constexpr double kOptimizeDeltaStep = 0.002;
constexpr double kOptimizeDeltaTolerance = 1e-4;
constexpr double kFixedTimeDeltaStep = 0.001;
constexpr double kFixedTimeDeltaTolerance = 1e-7;

void check_delta_range(std::size_t n_sites, double delta_lo, double delta_hi) {
    if (n_sites < 2 || n_sites % 2 != 0)
        throw ValidationError("delta optimization requires even N, got " + std::to_string(n_sites));
    const double floor = static_cast<double>(n_sites + 2) / static_cast<double>(n_sites);
    if (!(delta_lo > floor))
        throw ValidationError("delta_lo must exceed (N+2)/N = " + std::to_string(floor) + ", got " +
                              std::to_string(delta_lo));
    if (!(delta_hi > delta_lo))
        throw ValidationError("empty delta range [" + std::to_string(delta_lo) + ", " +
                              std::to_string(delta_hi) + "]");
}

std::vector<double> delta_grid(double lo, double hi, double step) {
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = lo + step * static_cast<double>(i);
    if (grid.back() < hi - 1e-12)
        grid.push_back(hi);
    return grid;
}

// Index of the largest value; the earliest index wins ties.
std::size_t argmax(const std::vector<double>& values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best])
            best = i;
    return best;
}

} // namespace

TransferTriad first_peak(const ChainSpec& spec) {
    const EigenSystem eig = eigensystem_auto(spec);
    const double lambda_min = eig.min_positive();
    if (lambda_min < 1e-12 * spec.d1)
        throw HorizonError("smallest positive eigenvalue " + std::to_string(lambda_min) +
                           " puts the first peak beyond any practical window (N = " +
                           std::to_string(spec.n_sites) + ", delta = " + std::to_string(spec.delta) + ")");
    // Times are dimensionless D1 * t; eigenvalues carry a factor D1.
    const double lambda_min_unit = lambda_min / spec.d1;
    const double lambda_max_unit = eig.max_eigenvalue() / spec.d1;
    const double estimate = std::numbers::pi / lambda_min_unit;
    const double horizon = kWindowFactor * estimate;
    const double step = std::min(0.01, std::numbers::pi / (50.0 * lambda_max_unit));
    const auto count = static_cast<std::size_t>(std::ceil(horizon / step));

    const ProbabilityEvaluator prob(eig, spec.n_sites);
    auto p_of = [&](double t) { return prob(t / spec.d1); };

    std::size_t best = 1;
    double best_p = -1.0;
    for (std::size_t i = 1; i <= count; ++i) {
        const double p = p_of(std::min(horizon, step * static_cast<double>(i)));
        if (p > best_p) {
            best_p = p;
            best = i;
        }
    }
    const double t_grid = std::min(horizon, step * static_cast<double>(best));
    const double lo = std::max(0.0, t_grid - step);
    const double hi = std::min(horizon, t_grid + step);
    auto [t_h, p_h] = detail::golden_section_max(p_of, lo, hi, kTimeTolerance);
    if (p_h < best_p) {
        t_h = t_grid;
        p_h = best_p;
    }
    return {spec.delta, t_h, std::clamp(p_h, 0.0, 1.0), estimate};
}

TransferTriad optimize_delta(std::size_t n_sites, double delta_lo, double delta_hi) {
    check_delta_range(n_sites, delta_lo, delta_hi);
    const auto grid = delta_grid(delta_lo, delta_hi, kOptimizeDeltaStep);
    const auto triads = parallel_map(grid.size(), [&](std::size_t i) {
        return first_peak(ChainSpec::uniform_field(n_sites, grid[i]));
    });
    std::vector<double> heights(triads.size());
    std::transform(triads.begin(), triads.end(), heights.begin(), [](const auto& t) { return t.p_h; });
    const std::size_t best = argmax(heights);

    const double lo = std::max(delta_lo, grid[best] - kOptimizeDeltaStep);
    const double hi = std::min(delta_hi, grid[best] + kOptimizeDeltaStep);
    auto height = [&](double d) { return first_peak(ChainSpec::uniform_field(n_sites, d)).p_h; };
    const auto [delta_h, p_refined] = detail::golden_section_max(height, lo, hi, kOptimizeDeltaTolerance);
    if (p_refined <= triads[best].p_h)
        return triads[best];
    return first_peak(ChainSpec::uniform_field(n_sites, delta_h));
}

TransferTriad fixed_time_optimize(std::size_t n_sites, double t_fixed, double delta_lo, double delta_hi) {
    check_delta_range(n_sites, delta_lo, delta_hi);
    if (!(t_fixed > 0.0))
        throw ValidationError("fixed transfer time must be positive");
    auto p_at = [&](double d) {
        return transfer_probability(eigensystem_auto(ChainSpec::uniform_field(n_sites, d)), t_fixed);
    };
    const auto grid = delta_grid(delta_lo, delta_hi, kFixedTimeDeltaStep);
    const auto values = parallel_map(grid.size(), [&](std::size_t i) { return p_at(grid[i]); });
    const std::size_t best = argmax(values);

    const double lo = std::max(delta_lo, grid[best] - kFixedTimeDeltaStep);
    const double hi = std::min(delta_hi, grid[best] + kFixedTimeDeltaStep);
    auto [delta_h, p_h] = detail::golden_section_max(p_at, lo, hi, kFixedTimeDeltaTolerance);
    if (p_h < values[best]) {
        delta_h = grid[best];
        p_h = values[best];
    }
    const double lambda_min =
        eigensystem_auto(ChainSpec::uniform_field(n_sites, delta_h)).min_positive();
    return {delta_h, t_fixed, std::clamp(p_h, 0.0, 1.0), std::numbers::pi / lambda_min};
}

std::vector<SweepRow> table1_sweep(double delta, std::vector<std::size_t> n_list) {
    std::sort(n_list.begin(), n_list.end());
    for (std::size_t n : n_list) {
        if (n < 2 || n % 2 != 0)
            throw ValidationError("table sweep takes even chain lengths, got " + std::to_string(n));
        if (!even_analytic_regime(n, delta))
            throw ValidationError("delta = " + std::to_string(delta) + " does not exceed (N+2)/N for N = " +
                                  std::to_string(n));
    }
    return parallel_map(n_list.size(), [&](std::size_t i) {
        SweepRow row;
        row.n_sites = n_list[i];
        row.delta = delta;
        try {
            const auto triad = first_peak(ChainSpec::uniform_field(n_list[i], delta));
            row.t_h1 = triad.t_h;
            row.p_h1 = triad.p_h;
            row.pi_over_lambda_min = triad.lambda_min_estimate;
        } catch (const NumericError& e) {
            row.error = e.what();
        }
        return row;
    });
}

std::optional<TimeInterval> dwell_window(const TransferCurve& curve, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0 + 1e-12))
        throw ValidationError("dwell threshold must lie in (0, 1]");
    if (curve.probabilities.empty())
        return std::nullopt;
    const std::size_t peak = argmax(curve.probabilities);
    if (curve.probabilities[peak] < threshold)
        return std::nullopt;
    std::size_t first = peak;
    std::size_t last = peak;
    while (first > 0 && curve.probabilities[first - 1] >= threshold)
        --first;
    while (last + 1 < curve.probabilities.size() && curve.probabilities[last + 1] >= threshold)
        ++last;
    return TimeInterval{curve.times[first], curve.times[last]};
}

} // namespace xychain
