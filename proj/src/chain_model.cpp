#include "xychain/chain_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xychain/errors.hpp"

namespace xychain {

ChainSpec ChainSpec::uniform_field(std::size_t n_sites, double delta, double d1) {
    ChainSpec spec;
    spec.n_sites = n_sites;
    spec.d1 = d1;
    spec.delta = delta;
    spec.larmor.assign(n_sites, 0.0);
    spec.validate();
    return spec;
}

bool ChainSpec::has_field() const {
    return std::any_of(larmor.begin(), larmor.end(), [](double w) { return w != 0.0; });
}

void ChainSpec::validate() const {
    if (n_sites < 2)
        throw ValidationError("chain length must be at least 2, got " + std::to_string(n_sites));
    if (!(d1 > 0.0) || !std::isfinite(d1))
        throw ValidationError("coupling D1 must be positive and finite, got " + std::to_string(d1));
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw ValidationError("ratio delta = D2/D1 must be positive and finite, got " +
                              std::to_string(delta));
    if (larmor.size() != n_sites)
        throw ValidationError("larmor must have " + std::to_string(n_sites) + " entries, got " +
                              std::to_string(larmor.size()));
    if (std::any_of(larmor.begin(), larmor.end(), [](double w) { return !std::isfinite(w); }))
        throw ValidationError("larmor entries must be finite");
}

void ChainSpec::require_zero_field() const {
    validate();
    if (has_field())
        throw ValidationError("closed-form expressions require zero Larmor frequencies");
}

double CouplingMatrix::at(std::size_t row, std::size_t col) const {
    if (row == col)
        return diagonal[row];
    if (row + 1 == col)
        return off_diagonal[row];
    if (col + 1 == row)
        return off_diagonal[col];
    return 0.0;
}

double CouplingMatrix::max_abs_entry() const {
    double m = 0.0;
    for (double v : diagonal)
        m = std::max(m, std::abs(v));
    for (double v : off_diagonal)
        m = std::max(m, std::abs(v));
    return m;
}

CouplingMatrix build_coupling_matrix(const ChainSpec& spec) {
    spec.validate();
    CouplingMatrix m;
    m.diagonal = spec.larmor;
    m.off_diagonal.resize(spec.n_sites - 1);
    // Bond between sites n and n+1 (1-based) is D1 for odd n, D2 for even n.
    for (std::size_t i = 0; i + 1 < spec.n_sites; ++i)
        m.off_diagonal[i] = (i % 2 == 0) ? spec.d1 : spec.d2();
    return m;
}

} // namespace xychain
