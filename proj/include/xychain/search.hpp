#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xychain/chain_model.hpp"
#include "xychain/dynamics.hpp"

namespace xychain {

/// A high-probability transfer point: ratio, time of the selected peak, its height,
/// and the pi / lambda_min prediction of that time.
struct TransferTriad {
    double delta_h = 0.0;
    double t_h = 0.0;
    double p_h = 0.0;
    double lambda_min_estimate = 0.0;
};

struct SweepRow {
    std::size_t n_sites = 0;
    double delta = 0.0;
    double t_h1 = 0.0;
    double p_h1 = 0.0;
    double pi_over_lambda_min = 0.0;
    /// Set when the row could not be computed; the numeric fields are then zero.
    std::optional<std::string> error;
};

struct TimeInterval {
    double begin = 0.0;
    double end = 0.0;
};

/// Global maximum of P(t) on (0, 1.3 pi / lambda_min], grid scan then golden-section
/// refinement to 1e-8. Ties go to the earliest time.
TransferTriad first_peak(const ChainSpec& spec);

/// Outer grid over delta (step 0.002) maximizing the first-peak height, then local
/// refinement to 1e-4. Requires even N and delta_lo > (N+2)/N.
TransferTriad optimize_delta(std::size_t n_sites, double delta_lo, double delta_hi);

/// Maximizes P(delta, t_fixed) over delta: grid step 0.001 plus golden-section refinement.
TransferTriad fixed_time_optimize(std::size_t n_sites, double t_fixed, double delta_lo, double delta_hi);

/// first_peak for each N at a common delta; failures are recorded per row.
std::vector<SweepRow> table1_sweep(double delta, std::vector<std::size_t> n_list);

/// Maximal contiguous run of samples around the curve's global maximum with P >= threshold.
std::optional<TimeInterval> dwell_window(const TransferCurve& curve, double threshold);

} // namespace xychain
