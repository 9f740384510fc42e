#include "xychain/tridiagonal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "xychain/errors.hpp"

namespace xychain::detail {

namespace {
constexpr int kMaxIterations = 60;
}

TridiagonalEigen symmetric_tridiagonal_eigen(std::span<const double> diagonal,
                                             std::span<const double> off_diagonal) {
    const std::size_t n = diagonal.size();
    if (n == 0 || off_diagonal.size() + 1 != n)
        throw ValidationError("tridiagonal input has inconsistent sizes");

    TridiagonalEigen out;
    std::vector<double> d(diagonal.begin(), diagonal.end());
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i)
        e[i] = off_diagonal[i];
    std::vector<double>& z = out.vectors;
    z.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        z[i * n + i] = 1.0;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd)
                    break;
            }
            if (m == l)
                break;
            if (++iter > kMaxIterations)
                throw NumericError("tridiagonal QL failed to converge for eigenvalue " +
                                   std::to_string(l) + " after " + std::to_string(kMaxIterations) +
                                   " iterations (|e| = " + std::to_string(std::abs(e[l])) + ")");

            // Wilkinson-type shift from the leading 2x2 block.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            bool underflow = false;
            for (std::size_t ii = m; ii-- > l;) {
                double f = s * e[ii];
                const double b = c * e[ii];
                r = std::hypot(f, g);
                e[ii + 1] = r;
                if (r == 0.0) {
                    d[ii + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[ii + 1] - p;
                r = (d[ii] - g) * s + 2.0 * c * b;
                p = s * r;
                d[ii + 1] = g + p;
                g = c * r - b;
                // Accumulate the rotation into the eigenvector columns ii and ii+1.
                for (std::size_t k = 0; k < n; ++k) {
                    f = z[(ii + 1) * n + k];
                    z[(ii + 1) * n + k] = s * z[ii * n + k] + c * f;
                    z[ii * n + k] = c * z[ii * n + k] - s * f;
                }
            }
            if (underflow)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
        if (iter > out.max_iterations_used)
            out.max_iterations_used = iter;
    }
    out.values = std::move(d);
    return out;
}

} // namespace xychain::detail
