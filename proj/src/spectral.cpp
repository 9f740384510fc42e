#include "xychain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "xychain/errors.hpp"
#include "xychain/tridiagonal.hpp"

namespace xychain {

namespace {

constexpr double kPi = std::numbers::pi;

// Bisection carried to adjacent doubles; the residual invariants need more
// than the 1e-13 bracket width when the secular function is steep.
template <class F>
double bisect(F&& f, double lo, double hi) {
    double f_lo = f(lo);
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double f_mid = f(mid);
        if (f_mid == 0.0)
            return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void require_even_regime(const ChainSpec& spec) {
    spec.require_zero_field();
    if (!spec.is_even())
        throw ValidationError("even-N closed form requested for odd N = " +
                              std::to_string(spec.n_sites));
    if (!even_analytic_regime(spec.n_sites, spec.delta)) {
        const double threshold = static_cast<double>(spec.n_sites + 2) / spec.n_sites;
        throw RegimeError("even-N closed form needs delta > (N+2)/N = " + std::to_string(threshold) +
                          ", got delta = " + std::to_string(spec.delta) +
                          "; use the numeric eigensolver");
    }
}

// Column sign convention: the first component that is not numerically zero is positive.
void normalize_signs(EigenSystem& eig) {
    const std::size_t n = eig.size();
    for (std::size_t nu = 0; nu < n; ++nu) {
        for (std::size_t k = 0; k < n; ++k) {
            const double v = eig.u(k, nu);
            if (std::abs(v) > 1e-12) {
                if (v < 0.0)
                    for (std::size_t j = 0; j < n; ++j)
                        eig.u(j, nu) = -eig.u(j, nu);
                break;
            }
        }
    }
}

} // namespace

std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::AnalyticEven:
        return "analytic-even";
    case Provenance::AnalyticOdd:
        return "analytic-odd";
    case Provenance::Numeric:
        return "numeric";
    }
    return "unknown";
}

double EigenSystem::min_positive() const {
    const std::size_t n = size();
    return eigenvalues[n % 2 == 0 ? n / 2 - 1 : (n - 3) / 2];
}

double EigenSystem::orthonormality_error() const {
    const std::size_t n = size();
    double err = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            double dot = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                dot += u(k, a) * u(k, b);
            err = std::max(err, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
    return err;
}

double EigenSystem::residual(const CouplingMatrix& m) const {
    const std::size_t n = size();
    double err = 0.0;
    for (std::size_t nu = 0; nu < n; ++nu)
        for (std::size_t k = 0; k < n; ++k) {
            double row = m.diagonal[k] * u(k, nu);
            if (k > 0)
                row += m.off_diagonal[k - 1] * u(k - 1, nu);
            if (k + 1 < n)
                row += m.off_diagonal[k] * u(k + 1, nu);
            err = std::max(err, std::abs(row - eigenvalues[nu] * u(k, nu)));
        }
    return err;
}

double even_x_residual(std::size_t n_sites, double delta, double x) {
    const double half = 0.5 * static_cast<double>(n_sites);
    return delta * std::sin(half * x) + std::sin((half + 1.0) * x);
}

double even_y_residual(std::size_t n_sites, double delta, double y) {
    const double half = 0.5 * static_cast<double>(n_sites);
    const double c = std::cosh((half + 1.0) * y);
    return (delta * std::sinh(half * y) - std::sinh((half + 1.0) * y)) / c;
}

double zero_mode_weight(std::size_t n_sites, double delta) {
    // (delta^2 - 1) / (delta^(N+1) - 1) as the reciprocal of its geometric sum,
    // which has no removable singularity at delta = 1.
    double sum = 0.0;
    double power = 1.0;
    for (std::size_t k = 0; k <= (n_sites - 1) / 2; ++k) {
        sum += power;
        power *= delta * delta;
    }
    return 1.0 / sum;
}

bool even_analytic_regime(std::size_t n_sites, double delta) {
    if (n_sites < 2 || n_sites % 2 != 0)
        return false;
    return delta > static_cast<double>(n_sites + 2) / static_cast<double>(n_sites);
}

EvenRootSet solve_even_roots(const ChainSpec& spec) {
    require_even_regime(spec);
    const std::size_t n = spec.n_sites;
    const double delta = spec.delta;
    const std::size_t expected = n / 2 - 1;

    EvenRootSet roots;
    auto fx = [&](double x) { return even_x_residual(n, delta, x); };
    const std::size_t samples = 10 * n;
    double prev_x = kPi / samples;
    double prev_f = fx(prev_x);
    for (std::size_t i = 2; i < samples; ++i) {
        const double x = kPi * static_cast<double>(i) / samples;
        const double f = fx(x);
        if (f == 0.0) {
            roots.x_roots.push_back(x);
        } else if ((f > 0.0) != (prev_f > 0.0) && prev_f != 0.0) {
            roots.x_roots.push_back(bisect(fx, prev_x, x));
        }
        prev_x = x;
        prev_f = f;
    }
    if (roots.x_roots.size() != expected)
        throw NumericError("even-N root bracketing found " + std::to_string(roots.x_roots.size()) +
                           " trigonometric roots, expected " + std::to_string(expected) +
                           " (N = " + std::to_string(n) + ", delta = " + std::to_string(delta) + ")");

    // The y-equation residual is negative at ln(delta) and positive just above zero.
    auto fy = [&](double y) { return even_y_residual(n, delta, y); };
    double hi = std::log(delta);
    while (fy(hi) >= 0.0) {
        hi *= 2.0;
        if (!std::isfinite(hi))
            throw NumericError("failed to bracket the hyperbolic root from above");
    }
    double lo = hi;
    for (int i = 0; i < 1100 && fy(lo) <= 0.0; ++i)
        lo *= 0.5;
    if (!(fy(lo) > 0.0))
        throw NumericError("failed to bracket the hyperbolic root from below (delta = " +
                           std::to_string(delta) + ")");
    roots.y_root = bisect(fy, lo, hi);
    return roots;
}

EigenSystem eigensystem_even(const ChainSpec& spec) {
    return eigensystem_even(spec, solve_even_roots(spec));
}

EigenSystem eigensystem_even(const ChainSpec& spec, const EvenRootSet& roots) {
    require_even_regime(spec);
    const std::size_t n = spec.n_sites;
    const std::size_t half = n / 2;
    if (roots.x_roots.size() != half - 1)
        throw ValidationError("root set does not match chain length");
    const double d1 = spec.d1;
    const double d2 = spec.d2();
    const double nn = static_cast<double>(n);

    EigenSystem eig;
    eig.provenance = Provenance::AnalyticEven;
    eig.eigenvalues.assign(n, 0.0);
    eig.vectors.assign(n * n, 0.0);

    // nu is 1-based below; column index is nu - 1.
    auto sign = [](std::size_t p) { return p % 2 == 0 ? 1.0 : -1.0; };

    for (std::size_t nu = 1; nu < half; ++nu) {
        const double x = roots.x_roots[nu - 1];
        const double lambda = std::sqrt(d1 * d1 + d2 * d2 + 2.0 * d1 * d2 * std::cos(x));
        const double a = std::sqrt(2.0) / std::sqrt(nn + 1.0 - std::sin((nn + 1.0) * x) / std::sin(x));
        for (std::size_t col : {nu, n + 1 - nu}) {
            const double b = a * sign(col + 1);
            eig.eigenvalues[col - 1] = col == nu ? lambda : -lambda;
            for (std::size_t k = 1; k <= n; ++k) {
                const double kk = static_cast<double>(k);
                eig.u(k - 1, col - 1) = (k % 2 == 0) ? a * std::sin(kk * x / 2.0)
                                                     : b * std::sin((nn - kk + 1.0) * x / 2.0);
            }
        }
    }

    const double y = roots.y_root;
    const double lambda_sq = d1 * d1 + d2 * d2 - 2.0 * d1 * d2 * std::cosh(y);
    const double lambda = std::sqrt(std::max(0.0, lambda_sq));
    const double a = std::sqrt(2.0) / std::sqrt(std::sinh((nn + 1.0) * y) / std::sinh(y) - nn - 1.0);
    for (std::size_t col : {half, half + 1}) {
        const double b = a * sign(col + 1);
        eig.eigenvalues[col - 1] = col == half ? lambda : -lambda;
        for (std::size_t k = 1; k <= n; ++k) {
            const double kk = static_cast<double>(k);
            eig.u(k - 1, col - 1) = (k % 2 == 0)
                ? a * sign(k / 2) * std::sinh(kk * y / 2.0)
                : b * sign((n - k + 1) / 2) * std::sinh((nn - kk + 1.0) * y / 2.0);
        }
    }
    return eig;
}

EigenSystem eigensystem_odd(const ChainSpec& spec) {
    spec.require_zero_field();
    if (spec.is_even())
        throw ValidationError("odd-N closed form requested for even N = " +
                              std::to_string(spec.n_sites));
    const std::size_t n = spec.n_sites;
    const double nn = static_cast<double>(n);
    const double delta = spec.delta;
    const double d1 = spec.d1;
    const std::size_t zero = (n + 1) / 2;
    const double amp = std::sqrt(2.0 / (nn + 1.0));

    EigenSystem eig;
    eig.provenance = Provenance::AnalyticOdd;
    eig.eigenvalues.assign(n, 0.0);
    eig.vectors.assign(n * n, 0.0);

    for (std::size_t nu = 1; nu <= n; ++nu) {
        if (nu == zero)
            continue;
        const double theta = kPi * static_cast<double>(nu) / (nn + 1.0);
        const double spread = 1.0 + 2.0 * delta * std::cos(2.0 * theta) + delta * delta;
        const double lambda = (nu < zero ? 1.0 : -1.0) * d1 * std::sqrt(spread);
        eig.eigenvalues[nu - 1] = lambda;
        for (std::size_t j = 1; j <= n; ++j) {
            const double jj = static_cast<double>(j);
            eig.u(j - 1, nu - 1) = (j % 2 == 1)
                ? amp * d1 / lambda * (delta * std::sin(theta * (jj - 1.0)) + std::sin(theta * (jj + 1.0)))
                : amp * std::sin(theta * jj);
        }
    }

    const double b = std::sqrt(zero_mode_weight(n, delta));
    for (std::size_t j = 1; j <= n; j += 2)
        eig.u(j - 1, zero - 1) = b * std::pow(-delta, static_cast<double>((n - j) / 2));
    return eig;
}

EigenSystem eigensystem_numeric(const CouplingMatrix& matrix) {
    const std::size_t n = matrix.size();
    auto raw = detail::symmetric_tridiagonal_eigen(matrix.diagonal, matrix.off_diagonal);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return raw.values[a] > raw.values[b]; });

    EigenSystem eig;
    eig.provenance = Provenance::Numeric;
    eig.eigenvalues.resize(n);
    eig.vectors.resize(n * n);
    for (std::size_t nu = 0; nu < n; ++nu) {
        eig.eigenvalues[nu] = raw.values[order[nu]];
        std::copy_n(raw.vectors.begin() + static_cast<std::ptrdiff_t>(order[nu] * n), n,
                    eig.vectors.begin() + static_cast<std::ptrdiff_t>(nu * n));
    }
    normalize_signs(eig);
    return eig;
}

EigenSystem eigensystem_auto(const ChainSpec& spec, std::size_t analytic_even_max_sites) {
    spec.validate();
    if (!spec.has_field()) {
        if (!spec.is_even())
            return eigensystem_odd(spec);
        if (even_analytic_regime(spec.n_sites, spec.delta) && spec.n_sites <= analytic_even_max_sites)
            return eigensystem_even(spec);
    }
    return eigensystem_numeric(build_coupling_matrix(spec));
}

} // namespace xychain
