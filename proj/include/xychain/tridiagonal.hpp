#pragma once

#include <span>
#include <vector>

namespace xychain::detail {

struct TridiagonalEigen {
    std::vector<double> values;       // unsorted
    std::vector<double> vectors;      // column-major, n x n
    int max_iterations_used = 0;
};

/// Implicit-shift QL iteration on a real symmetric tridiagonal matrix.
/// off_diagonal has n-1 entries. Throws NumericError on non-convergence.
TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diagonal,
                                             std::span<const double> off_diagonal);

} // namespace xychain::detail
