#pragma once

#include <utility>
#include <vector>

namespace xychain {

/// Closed-form end-to-end probability of the four-site chain at dimensionless time D1 * t.
double n4_probability(double delta, double t);

/// Radicals of the four-site spectrum in units of D1: {large, small}; their product is 1.
std::pair<double, double> n4_frequencies(double delta);

/// Perfect-transfer point of the four-site chain built from odd integers
/// a = 3 (mod 4) and b = 1 (mod 4): the two half-phases land on a*pi/2 and b*pi/2.
struct IdealSolution {
    long a = 0;
    long b = 0;
    double delta_bar = 0.0;
    double t_bar = 0.0;
    double probability = 0.0;
    bool validated = false;
};

struct IdealFamily {
    std::vector<IdealSolution> solutions;  // sorted by t_bar
    std::vector<IdealSolution> rejected;   // failed direct substitution
};

/// Builds (and validates) the solution for one index pair; no residue checks.
IdealSolution ideal_candidate(long a, long b);

/// All pairs with a*b <= max_product, validated by substitution into n4_probability.
IdealFamily ideal_solutions(long max_product);

} // namespace xychain
