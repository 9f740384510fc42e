#pragma once

#include <cstddef>
#include <vector>

#include "xychain/chain_model.hpp"

namespace xychain {

/// Analytic cap on the end-to-end probability of an odd chain with delta >= 1.
struct BoundReport {
    std::size_t n_sites = 0;
    double delta = 1.0;
    std::vector<double> r_values;  // j = 1 .. (N-1)/2
    double delta_max = 0.0;        // largest r_j, attained at j = 1
    double f1_cap = 0.0;
    double f2_value = 0.0;
    double f2_cap = 0.0;
    double p_bound = 0.0;
};

BoundReport bound_report(const ChainSpec& spec);

/// Whether every |cos(lambda_j t / 2)| reaches 1 - 1e-9 at a common time t <= horizon.
/// Only meaningful at delta = 1; any other ratio returns false.
bool equality_feasible(const ChainSpec& spec, double horizon = 1e4);

} // namespace xychain
