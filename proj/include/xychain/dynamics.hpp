#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "xychain/chain_model.hpp"
#include "xychain/spectral.hpp"

namespace xychain {

/// Probabilities sampled on a uniform grid in D1 * t, excitation injected at node 1.
struct TransferCurve {
    std::vector<double> times;
    std::vector<double> probabilities;
    std::size_t target_node = 0;
    std::size_t source_node = 1;
};

/// |<k| exp(-i H t) |1>|^2 from the spectral sum, k 1-based. Throws on k out of range.
double node_probability(const EigenSystem& eig, std::size_t k, double t);

/// End-to-end probability |<N| exp(-i H t) |1>|^2.
double transfer_probability(const EigenSystem& eig, double t);

/// Sine series valid for even N in the closed-form regime.
double transfer_probability_even_form(const ChainSpec& spec, const EvenRootSet& roots, double t);

/// Cosine series plus the constant zero-mode term, valid for odd N.
double transfer_probability_odd_form(const ChainSpec& spec, double t);

/// Uniform grid t_i = i * t_max / (n_samples - 1). Grid points may be evaluated concurrently.
TransferCurve sample_curve(const EigenSystem& eig, std::size_t k, double t_max, std::size_t n_samples);

/// Precomputed amplitude coefficients u_k u_1 for fast repeated evaluation at one node.
class ProbabilityEvaluator {
public:
    ProbabilityEvaluator(const EigenSystem& eig, std::size_t k);
    double operator()(double t) const;

private:
    std::vector<double> weights_;
    std::vector<double> half_lambdas_;
};

} // namespace xychain
