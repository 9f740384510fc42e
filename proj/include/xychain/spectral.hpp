#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "xychain/chain_model.hpp"

namespace xychain {

enum class Provenance { AnalyticEven, AnalyticOdd, Numeric };

std::string_view to_string(Provenance p);

/// Eigenvalues sorted descending with column-major eigenvectors: u(k, nu) is
/// component k of the eigenvector belonging to eigenvalues[nu] (both 0-based).
struct EigenSystem {
    std::vector<double> eigenvalues;
    std::vector<double> vectors;
    Provenance provenance = Provenance::Numeric;

    std::size_t size() const { return eigenvalues.size(); }
    double u(std::size_t k, std::size_t nu) const { return vectors[nu * size() + k]; }
    double& u(std::size_t k, std::size_t nu) { return vectors[nu * size() + k]; }

    /// Last eigenvalue of the positive branch: index N/2 - 1 for even N and
    /// (N-3)/2 for odd N, skipping the zero mode. Near-degenerate gaps can come
    /// out as rounding noise of either sign; callers compare against a floor.
    double min_positive() const;
    double max_eigenvalue() const { return eigenvalues.front(); }

    /// max_k |sum_j u(j,a) u(j,b) - [a == b]|.
    double orthonormality_error() const;
    /// max over columns of ||D u - lambda u||_inf.
    double residual(const CouplingMatrix& m) const;
};

/// Roots of the even-N secular equations, trigonometric branch sorted ascending.
struct EvenRootSet {
    std::vector<double> x_roots;
    double y_root = 0.0;
};

/// delta * sin(N x / 2) + sin((N/2 + 1) x).
double even_x_residual(std::size_t n_sites, double delta, double x);
/// (delta * sinh(N y / 2) - sinh((N/2 + 1) y)) / cosh((N/2 + 1) y).
double even_y_residual(std::size_t n_sites, double delta, double y);

/// Squared zero-mode normalization of an odd chain: (delta^2 - 1) / (delta^(N+1) - 1).
double zero_mode_weight(std::size_t n_sites, double delta);

/// True when the closed-form even-N eigen-system applies: even N and delta > (N+2)/N.
bool even_analytic_regime(std::size_t n_sites, double delta);

EvenRootSet solve_even_roots(const ChainSpec& spec);
EigenSystem eigensystem_even(const ChainSpec& spec);
EigenSystem eigensystem_even(const ChainSpec& spec, const EvenRootSet& roots);
EigenSystem eigensystem_odd(const ChainSpec& spec);
EigenSystem eigensystem_numeric(const CouplingMatrix& matrix);

/// Picks the closed form where it holds and the numeric solver otherwise.
/// Even chains longer than analytic_even_max_sites always go numeric.
EigenSystem eigensystem_auto(const ChainSpec& spec, std::size_t analytic_even_max_sites = 12);

} // namespace xychain
