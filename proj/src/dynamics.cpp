#include "xychain/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "xychain/errors.hpp"
#include "xychain/parallel.hpp"

namespace xychain {

namespace {

std::complex<double> amplitude(const EigenSystem& eig, std::size_t k, double t) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t j = 0; j < eig.size(); ++j) {
        const double phase = -0.5 * t * eig.eigenvalues[j];
        sum += eig.u(k - 1, j) * eig.u(0, j) * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return sum;
}

void check_node(const EigenSystem& eig, std::size_t k) {
    if (k < 1 || k > eig.size())
        throw ValidationError("node index " + std::to_string(k) + " outside [1, " +
                              std::to_string(eig.size()) + "]");
}

} // namespace

ProbabilityEvaluator::ProbabilityEvaluator(const EigenSystem& eig, std::size_t k) {
    check_node(eig, k);
    weights_.reserve(eig.size());
    half_lambdas_.reserve(eig.size());
    for (std::size_t j = 0; j < eig.size(); ++j) {
        weights_.push_back(eig.u(k - 1, j) * eig.u(0, j));
        half_lambdas_.push_back(0.5 * eig.eigenvalues[j]);
    }
}

double ProbabilityEvaluator::operator()(double t) const {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
        const double phase = t * half_lambdas_[j];
        re += weights_[j] * std::cos(phase);
        im -= weights_[j] * std::sin(phase);
    }
    return re * re + im * im;
}

double node_probability(const EigenSystem& eig, std::size_t k, double t) {
    check_node(eig, k);
    return std::norm(amplitude(eig, k, t));
}

double transfer_probability(const EigenSystem& eig, double t) {
    return node_probability(eig, eig.size(), t);
}

double transfer_probability_even_form(const ChainSpec& spec, const EvenRootSet& roots, double t) {
    // Reuse the closed-form eigen-system for the normalizations and frequencies;
    // regime checks happen there.
    const EigenSystem eig = eigensystem_even(spec, roots);
    const std::size_t n = spec.n_sites;
    const std::size_t half = n / 2;
    const double nn = static_cast<double>(n);

    double sum = 0.0;
    for (std::size_t j = 1; j < half; ++j) {
        const double x = roots.x_roots[j - 1];
        const double a_sq = 2.0 / (nn + 1.0 - std::sin((nn + 1.0) * x) / std::sin(x));
        const double s = std::sin(nn * x / 2.0);
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        sum += a_sq * sign * s * s * std::sin(t * eig.eigenvalues[j - 1] / 2.0);
    }
    const double y = roots.y_root;
    const double a_sq = 2.0 / (std::sinh((nn + 1.0) * y) / std::sinh(y) - nn - 1.0);
    const double sh = std::sinh(nn * y / 2.0);
    const double sign = ((half + 1) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * a_sq * sh * sh * std::sin(t * eig.eigenvalues[half - 1] / 2.0);
    // 2 u_N u_1 = 2 A^2 (-1)^(j+1) sin^2(...), so the squared modulus carries a factor 4.
    return 4.0 * sum * sum;
}

double transfer_probability_odd_form(const ChainSpec& spec, double t) {
    spec.require_zero_field();
    if (spec.is_even())
        throw ValidationError("odd-N probability form requested for even N = " +
                              std::to_string(spec.n_sites));
    const std::size_t n = spec.n_sites;
    const double nn = static_cast<double>(n);
    const double delta = spec.delta;
    const double d1 = spec.d1;
    constexpr double pi = std::numbers::pi;

    double sum = 0.0;
    for (std::size_t j = 1; j <= (n - 1) / 2; ++j) {
        const double jj = static_cast<double>(j);
        const double arg = 2.0 * pi * jj / (nn + 1.0);
        const double lambda_sq = d1 * d1 * (1.0 + 2.0 * delta * std::cos(arg) + delta * delta);
        const double a_sq = 2.0 / (nn + 1.0);
        sum += a_sq * d1 * d1 * delta / lambda_sq * std::sin(arg) *
               std::sin(pi * jj * (nn - 1.0) / (nn + 1.0)) * std::cos(std::sqrt(lambda_sq) * t / 2.0);
    }
    const double b_sq = zero_mode_weight(n, delta);
    const double zero_mode = b_sq * std::pow(-delta, static_cast<double>((n - 1) / 2));
    const double total = 2.0 * sum + zero_mode;
    return total * total;
}

TransferCurve sample_curve(const EigenSystem& eig, std::size_t k, double t_max, std::size_t n_samples) {
    if (!(t_max > 0.0))
        throw ValidationError("curve horizon must be positive");
    if (n_samples < 2)
        throw ValidationError("curve needs at least 2 samples");
    const ProbabilityEvaluator prob(eig, k);

    TransferCurve curve;
    curve.target_node = k;
    curve.times.resize(n_samples);
    const double step = t_max / static_cast<double>(n_samples - 1);
    for (std::size_t i = 0; i < n_samples; ++i)
        curve.times[i] = i + 1 == n_samples ? t_max : step * static_cast<double>(i);
    curve.probabilities = parallel_map(n_samples, [&](std::size_t i) { return prob(curve.times[i]); });
    return curve;
}

} // namespace xychain
