#include "xychain/full_space.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "xychain/errors.hpp"

namespace xychain {

namespace {
// Series truncation per step; the accumulated error over all steps stays far below 1e-10.
constexpr double kSeriesTolerance = 1e-16;
constexpr double kMaxStepNorm = 0.5;
} // namespace

FullSpaceEvolver::FullSpaceEvolver(const ChainSpec& spec) : spec_(spec) {
    spec_.validate();
    if (spec_.n_sites > kMaxSites)
        throw ResourceError("full-space oracle limited to N <= " + std::to_string(kMaxSites) +
                            ", got N = " + std::to_string(spec_.n_sites));
    const auto coupling = build_coupling_matrix(spec_);
    bonds_ = coupling.off_diagonal;
    dim_ = std::size_t{1} << spec_.n_sites;
    for (double b : bonds_)
        norm_bound_ += 0.5 * std::abs(b);
    for (double w : spec_.larmor)
        norm_bound_ += 0.25 * std::abs(w);

    dense_ = spec_.n_sites <= kMaxDenseSites;
    if (dense_) {
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim_),
                                                  static_cast<Eigen::Index>(dim_));
        std::vector<std::complex<double>> unit(dim_), column(dim_);
        for (std::size_t c = 0; c < dim_; ++c) {
            std::fill(unit.begin(), unit.end(), 0.0);
            unit[c] = 1.0;
            apply(unit, column);
            for (std::size_t r = 0; r < dim_; ++r)
                h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = column[r].real();
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
        if (solver.info() != Eigen::Success)
            throw NumericError("full-space diagonalization failed");
        energies_ = solver.eigenvalues();
        basis_ = solver.eigenvectors();
    }
}

void FullSpaceEvolver::apply(const std::vector<std::complex<double>>& in,
                             std::vector<std::complex<double>>& out) const {
    const std::size_t n = spec_.n_sites;
    out.assign(dim_, 0.0);
    for (std::size_t s = 0; s < dim_; ++s) {
        const auto amp = in[s];
        if (amp == 0.0)
            continue;
        double diag = 0.0;
        for (std::size_t site = 0; site < n; ++site)
            diag += 0.5 * spec_.larmor[site] * (((s >> site) & 1U) ? 0.5 : -0.5);
        out[s] += diag * amp;
        // I_x I_x + I_y I_y = (I+ I- + I- I+) / 2 swaps antiparallel neighbours with weight 1/2.
        for (std::size_t b = 0; b + 1 < n; ++b) {
            const std::size_t pair = (std::size_t{1} << b) | (std::size_t{1} << (b + 1));
            const std::size_t bits = s & pair;
            if (bits != 0 && bits != pair)
                out[s ^ pair] += 0.5 * bonds_[b] * amp;
        }
    }
}

std::vector<std::complex<double>> FullSpaceEvolver::evolve(double t) const {
    if (!dense_)
        return evolve_series(t);
    const auto dim = static_cast<Eigen::Index>(dim_);
    // Initial state |1> has index 1: overlap with eigenvector e is basis_(1, e).
    Eigen::VectorXcd coeffs(dim);
    for (Eigen::Index e = 0; e < dim; ++e)
        coeffs(e) = basis_(1, e) * std::exp(std::complex<double>(0.0, -energies_(e) * t));
    const Eigen::VectorXcd psi = basis_.cast<std::complex<double>>() * coeffs;
    return {psi.data(), psi.data() + dim};
}

std::vector<std::complex<double>> FullSpaceEvolver::evolve_series(double t) const {
    std::vector<std::complex<double>> psi(dim_, 0.0);
    psi[1] = 1.0;
    if (t == 0.0)
        return psi;
    const auto steps = static_cast<std::size_t>(std::ceil(norm_bound_ * std::abs(t) / kMaxStepNorm));
    const double dt = t / static_cast<double>(std::max<std::size_t>(steps, 1));
    std::vector<std::complex<double>> term(dim_), next(dim_);
    for (std::size_t step = 0; step < std::max<std::size_t>(steps, 1); ++step) {
        term = psi;
        for (int order = 1; order < 200; ++order) {
            apply(term, next);
            double norm_sq = 0.0;
            const std::complex<double> factor(0.0, -dt / order);
            for (std::size_t i = 0; i < dim_; ++i) {
                term[i] = factor * next[i];
                psi[i] += term[i];
                norm_sq += std::norm(term[i]);
            }
            if (std::sqrt(norm_sq) < kSeriesTolerance)
                break;
            if (order == 199)
                throw NumericError("full-space series did not converge");
        }
    }
    return psi;
}

std::complex<double> FullSpaceEvolver::amplitude(double t) const {
    const auto psi = evolve(t);
    return psi[std::size_t{1} << (spec_.n_sites - 1)];
}

double FullSpaceEvolver::z_projection(const std::vector<std::complex<double>>& state) const {
    const double half = 0.5 * static_cast<double>(spec_.n_sites);
    double total = 0.0;
    for (std::size_t s = 0; s < state.size(); ++s)
        total += std::norm(state[s]) * (static_cast<double>(std::popcount(s)) - half);
    return total;
}

std::complex<double> full_space_amplitude(const ChainSpec& spec, double t) {
    return FullSpaceEvolver(spec).amplitude(t);
}

} // namespace xychain
