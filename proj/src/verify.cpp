#include "xychain/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "xychain/bounds.hpp"
#include "xychain/dynamics.hpp"
#include "xychain/full_space.hpp"
#include "xychain/ideal_n4.hpp"
#include "xychain/search.hpp"
#include "xychain/spectral.hpp"

namespace xychain {

namespace {

struct Violation {
    std::string what;
};

void expect(bool condition, const std::function<std::string()>& detail) {
    if (!condition)
        throw Violation{detail()};
}

std::string params(std::size_t n, double delta) {
    std::ostringstream os;
    os << "N=" << n << " delta=" << delta;
    return os.str();
}

double column_distance(const EigenSystem& a, const EigenSystem& b, std::size_t nu) {
    double same = 0.0;
    double flipped = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        same = std::max(same, std::abs(a.u(k, nu) - b.u(k, nu)));
        flipped = std::max(flipped, std::abs(a.u(k, nu) + b.u(k, nu)));
    }
    return std::min(same, flipped);
}

void check_eigensystem(const EigenSystem& eig, const ChainSpec& spec) {
    const auto m = build_coupling_matrix(spec);
    expect(eig.orthonormality_error() <= 1e-10,
           [&] { return "orthonormality violated at " + params(spec.n_sites, spec.delta); });
    expect(eig.residual(m) <= 1e-9 * m.max_abs_entry(),
           [&] { return "eigen residual too large at " + params(spec.n_sites, spec.delta); });
    auto sorted = eig.eigenvalues;
    std::vector<double> negated(sorted.rbegin(), sorted.rend());
    for (auto& v : negated)
        v = -v;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        expect(std::abs(sorted[i] - negated[i]) <= 1e-10,
               [&] { return "spectrum not symmetric about zero at " + params(spec.n_sites, spec.delta); });
}

void check_agreement(const ChainSpec& spec, const EigenSystem& analytic) {
    check_eigensystem(analytic, spec);
    const auto numeric = eigensystem_numeric(build_coupling_matrix(spec));
    check_eigensystem(numeric, spec);
    for (std::size_t nu = 0; nu < spec.n_sites; ++nu) {
        expect(std::abs(analytic.eigenvalues[nu] - numeric.eigenvalues[nu]) <= 1e-9,
               [&] { return "analytic/numeric eigenvalue mismatch at " + params(spec.n_sites, spec.delta); });
        expect(column_distance(analytic, numeric, nu) <= 1e-8,
               [&] { return "analytic/numeric eigenvector mismatch at " + params(spec.n_sites, spec.delta); });
    }
}

void spectral_agreement() {
    for (std::size_t n = 4; n <= 16; n += 2)
        for (double d : {2.0, 2.38, 3.0}) {
            const auto spec = ChainSpec::uniform_field(n, d);
            const auto roots = solve_even_roots(spec);
            for (double x : roots.x_roots)
                expect(std::abs(even_x_residual(n, d, x)) <= 1e-12,
                       [&] { return "x-root residual too large at " + params(n, d); });
            expect(std::abs(even_y_residual(n, d, roots.y_root)) <= 1e-12,
                   [&] { return "y-root residual too large at " + params(n, d); });
            check_agreement(spec, eigensystem_even(spec, roots));
        }
    for (std::size_t n = 3; n <= 15; n += 2)
        for (double d : {1.0, 1.5, 2.0}) {
            const auto spec = ChainSpec::uniform_field(n, d);
            check_agreement(spec, eigensystem_odd(spec));
        }
}

void smallest_eigenvalue_decreases() {
    for (double d : {2.0, 2.38, 3.0}) {
        double previous = 1e300;
        for (std::size_t n = 4; n <= 16; n += 2) {
            const auto eig = eigensystem_even(ChainSpec::uniform_field(n, d));
            const double lam = eig.eigenvalues[n / 2 - 1];
            double smallest = 1e300;
            for (double l : eig.eigenvalues)
                if (l > 0.0)
                    smallest = std::min(smallest, l);
            expect(lam == smallest && lam < previous,
                   [&] { return "lambda_{N/2} not the decreasing minimum at " + params(n, d); });
            previous = lam;
        }
    }
}

void form_equivalence() {
    for (std::size_t n = 4; n <= 12; n += 2) {
        const auto spec = ChainSpec::uniform_field(n, 2.38);
        const auto roots = solve_even_roots(spec);
        const auto eig = eigensystem_even(spec, roots);
        for (int i = 1; i <= 1000; ++i) {
            const double t = 0.1 * i;
            expect(std::abs(transfer_probability(eig, t) - transfer_probability_even_form(spec, roots, t)) <= 1e-10,
                   [&] { return "sine form differs from spectral sum at " + params(n, 2.38); });
        }
    }
    for (std::size_t n = 3; n <= 9; n += 2)
        for (double d : {1.0, 1.5, 2.0}) {
            const auto spec = ChainSpec::uniform_field(n, d);
            const auto eig = eigensystem_odd(spec);
            for (int i = 1; i <= 1000; ++i) {
                const double t = 0.1 * i;
                expect(std::abs(transfer_probability(eig, t) - transfer_probability_odd_form(spec, t)) <= 1e-10,
                       [&] { return "cosine form differs from spectral sum at " + params(n, d); });
            }
        }
}

void unitarity() {
    for (std::size_t n = 2; n <= 12; ++n)
        for (double d : {0.5, 1.0, 2.38}) {
            const auto eig = eigensystem_numeric(build_coupling_matrix(ChainSpec::uniform_field(n, d)));
            for (int i = 0; i <= 200; ++i) {
                const double t = 0.37 * i;
                double total = 0.0;
                for (std::size_t k = 1; k <= n; ++k)
                    total += node_probability(eig, k, t);
                expect(std::abs(total - 1.0) <= 1e-10, [&] { return "sum_k P_k != 1 at " + params(n, d); });
            }
        }
}

void full_space_oracle() {
    for (std::size_t n = 2; n <= 8; ++n)
        for (double d : {1.5, 2.38}) {
            const auto spec = ChainSpec::uniform_field(n, d);
            const FullSpaceEvolver evolver(spec);
            const auto eig = eigensystem_auto(spec);
            const double sz0 = evolver.z_projection(evolver.evolve(0.0));
            for (int i = 1; i <= 50; ++i) {
                const double t = 0.8 * i;
                const auto psi = evolver.evolve(t);
                const double p = std::norm(psi[std::size_t{1} << (n - 1)]);
                expect(std::abs(p - transfer_probability(eig, t)) <= 1e-8,
                       [&] { return "full-space oracle disagrees at " + params(n, d); });
                expect(std::abs(evolver.z_projection(psi) - sz0) <= 1e-10,
                       [&] { return "z-projection not conserved at " + params(n, d); });
            }
        }
}

void odd_bound_dominance() {
    for (std::size_t n : {5, 7, 9})
        for (double d : {1.0, 1.5, 2.0}) {
            const auto spec = ChainSpec::uniform_field(n, d);
            const auto report = bound_report(spec);
            const ProbabilityEvaluator prob(eigensystem_odd(spec), n);
            for (int i = 1; i <= 50000; ++i)
                expect(prob(0.01 * i) <= report.p_bound + 1e-9,
                       [&] { return "sampled P exceeds the analytic cap at " + params(n, d); });
        }
}

void bound_properties() {
    for (std::size_t n = 3; n <= 15; n += 2) {
        double cos_sum = 0.0;
        for (std::size_t j = 1; j <= (n - 1) / 2; ++j)
            cos_sum += std::cos(2.0 * std::numbers::pi * j / (n + 1.0));
        expect(std::abs(cos_sum) <= 1e-12, [&] { return "cosine identity fails at N=" + std::to_string(n); });
        double previous = 2.0;
        for (int i = 0; i <= 100; ++i) {
            const double d = 1.0 + 0.05 * i;
            const auto r = bound_report(ChainSpec::uniform_field(n, d));
            const double rmax = *std::max_element(r.r_values.begin(), r.r_values.end());
            expect(r.delta_max == rmax && rmax <= 1.0 + 1e-15 &&
                       std::all_of(r.r_values.begin(), r.r_values.end(), [](double v) { return v >= 0.0; }),
                   [&] { return "r_j out of range or not maximal at j=1 for " + params(n, d); });
            expect(r.f2_value <= r.f2_cap + 1e-12, [&] { return "F2 above its cap at " + params(n, d); });
            expect(r.p_bound <= 1.0 + 1e-12 && r.p_bound <= previous + 1e-15,
                   [&] { return "bound not monotone or above 1 at " + params(n, d); });
            previous = r.p_bound;
        }
        const auto near = bound_report(ChainSpec::uniform_field(n, 1.0 + 1e-7));
        expect(std::abs(near.f2_value - 2.0 / (n + 1.0)) <= 1e-8,
               [&] { return "F2 limit at delta -> 1 fails for N=" + std::to_string(n); });
    }
    expect(equality_feasible(ChainSpec::uniform_field(3, 1.0)), [] { return "equality should hold for N=3"; });
    expect(!equality_feasible(ChainSpec::uniform_field(5, 1.0)), [] { return "equality should fail for N=5"; });
}

void ideal_family() {
    const auto family = ideal_solutions(400);
    expect(!family.solutions.empty() && family.rejected.empty(),
           [] { return "ideal family produced rejected candidates"; });
    for (const auto& s : family.solutions) {
        expect(s.validated && n4_probability(s.delta_bar, s.t_bar) >= 1.0 - 1e-9,
               [&] { return "ideal solution fails substitution (a=" + std::to_string(s.a) + ")"; });
        expect(s.t_bar == std::numbers::pi * std::sqrt(static_cast<double>(s.a * s.b)),
               [&] { return "t_bar != pi sqrt(ab) for a=" + std::to_string(s.a); });
    }
    expect(family.solutions.front().a == 3 && family.solutions.front().b == 1,
           [] { return "minimum-time ideal solution is not (3,1)"; });
}

void search_properties() {
    const std::vector<std::pair<std::size_t, double>> paper_points{{4, 2.272}, {6, 2.373}, {8, 2.557}};
    for (const auto& [n, d] : paper_points) {
        const auto triad = first_peak(ChainSpec::uniform_field(n, d));
        expect(std::abs(triad.t_h - triad.lambda_min_estimate) / triad.t_h <= 0.10,
               [&] { return "first peak far from pi/lambda_min at " + params(n, d); });
        const auto eig = eigensystem_auto(ChainSpec::uniform_field(n, d));
        for (std::size_t k = 2; k < n; ++k) {
            const auto curve = sample_curve(eig, k, 2.0 * triad.t_h, 20001);
            const double peak = *std::max_element(curve.probabilities.begin(), curve.probabilities.end());
            expect(peak < 0.9, [&] { return "intermediate node " + std::to_string(k) + " reaches 0.9 at " + params(n, d); });
        }
    }
    auto max_p = [](double d) {
        const auto c = sample_curve(eigensystem_odd(ChainSpec::uniform_field(5, d)), 5, 50.0, 50001);
        return *std::max_element(c.probabilities.begin(), c.probabilities.end());
    };
    expect(max_p(2.0) < max_p(1.0), [] { return "odd-N amplitude does not decrease with delta"; });
}

} // namespace

VerifyOutcome run_verification(std::ostream& log) {
    const std::vector<std::pair<const char*, void (*)()>> checks{
        {"spectral: analytic vs numeric eigen-systems", spectral_agreement},
        {"spectral: lambda_{N/2} minimal and decreasing in N", smallest_eigenvalue_decreases},
        {"dynamics: spectral sum == sine form == cosine form", form_equivalence},
        {"dynamics: unitarity sum_k P_k = 1", unitarity},
        {"dynamics: full 2^N oracle and z-projection", full_space_oracle},
        {"dynamics: odd-N sampled P below analytic cap", odd_bound_dominance},
        {"bounds: r_j, F2, cap monotonicity, equality feasibility", bound_properties},
        {"ideal-n4: validated family, t_bar identity, minimum (3,1)", ideal_family},
        {"search: first-peak estimate, intermediate nodes, odd-N decay", search_properties},
    };
    VerifyOutcome outcome;
    for (const auto& [name, check] : checks) {
        try {
            check();
        } catch (const Violation& v) {
            log << "FAIL " << name << ": " << v.what << '\n';
            outcome.ok = false;
            outcome.failure = v.what;
            return outcome;
        }
        log << "PASS " << name << '\n';
        ++outcome.passed;
    }
    return outcome;
}

} // namespace xychain
