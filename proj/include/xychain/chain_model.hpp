#pragma once

#include <cstddef>
#include <vector>

namespace xychain {

/// Open alternating XY chain: bonds alternate D1, D2 = delta * D1, D1, ...
/// Times elsewhere in the library are the dimensionless product D1 * t.
struct ChainSpec {
    std::size_t n_sites = 2;
    double d1 = 1.0;
    double delta = 1.0;
    /// Diagonal of the coupling matrix; all zero on every analytic path.
    std::vector<double> larmor;

    /// Chain with zero field, the only configuration the closed forms cover.
    static ChainSpec uniform_field(std::size_t n_sites, double delta, double d1 = 1.0);

    double d2() const { return delta * d1; }
    bool is_even() const { return n_sites % 2 == 0; }
    bool has_field() const;

    /// Throws ValidationError on any violated invariant.
    void validate() const;
    /// validate() plus rejection of a nonzero larmor entry.
    void require_zero_field() const;
};

/// Symmetric tridiagonal coupling matrix; off_diagonal[i] couples sites i+1 and i+2 (1-based).
struct CouplingMatrix {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    std::size_t size() const { return diagonal.size(); }
    /// Dense entry (0-based indices).
    double at(std::size_t row, std::size_t col) const;
    double max_abs_entry() const;
};

CouplingMatrix build_coupling_matrix(const ChainSpec& spec);

} // namespace xychain
