#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "xychain/chain_model.hpp"

namespace xychain {

/// Brute-force evolution in the full 2^N spin space of the nearest-neighbour XY
/// Hamiltonian. Basis index bit (n-1) set means spin n is flipped against the
/// field. The Zeeman term is sum_n (larmor_n / 2) I_{n,z}, so the one-flip block
/// equals D / 2 up to a constant.
class FullSpaceEvolver {
public:
    static constexpr std::size_t kMaxSites = 12;
    static constexpr std::size_t kMaxDenseSites = 8;

    explicit FullSpaceEvolver(const ChainSpec& spec);

    std::size_t dimension() const { return dim_; }
    /// exp(-i H t) |1>.
    std::vector<std::complex<double>> evolve(double t) const;
    /// <N| exp(-i H t) |1>.
    std::complex<double> amplitude(double t) const;
    /// <psi| sum_n I_{n,z} |psi>.
    double z_projection(const std::vector<std::complex<double>>& state) const;
    /// Applies H to a vector without storing the matrix.
    void apply(const std::vector<std::complex<double>>& in, std::vector<std::complex<double>>& out) const;

private:
    std::vector<std::complex<double>> evolve_series(double t) const;

    ChainSpec spec_;
    std::size_t dim_ = 0;
    std::vector<double> bonds_;
    double norm_bound_ = 0.0;
    bool dense_ = false;
    Eigen::VectorXd energies_;
    Eigen::MatrixXd basis_;
};

std::complex<double> full_space_amplitude(const ChainSpec& spec, double t);

} // namespace xychain
