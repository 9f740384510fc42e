#pragma once

#include <cmath>
#include <utility>

namespace xychain::detail {

/// Golden-section maximization of f on [lo, hi] until the bracket is below tol.
/// Returns {argmax, max}. The endpoints are also compared so a monotone
/// function reports its boundary maximum.
template <class F>
std::pair<double, double> golden_section_max(F&& f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        if (c >= d)
            break;
    }
    std::pair<double, double> best = fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
    for (double x : {lo, hi}) {
        const double fx = f(x);
        if (fx > best.second)
            best = {x, fx};
    }
    return best;
}

} // namespace xychain::detail
