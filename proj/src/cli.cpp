#include "xychain/cli.hpp"

#include <algorithm>
#include <fstream>
#include <numbers>
#include <optional>

#include "CLI11.hpp"

#include "xychain/bounds.hpp"
#include "xychain/dynamics.hpp"
#include "xychain/errors.hpp"
#include "xychain/ideal_n4.hpp"
#include "xychain/search.hpp"
#include "xychain/spectral.hpp"
#include "xychain/table.hpp"
#include "xychain/verify.hpp"

namespace xychain::cli {

namespace {

struct RunConfig {
    std::size_t n_sites = 0;
    double delta = 0.0;
    std::vector<std::size_t> n_list;
    double t_max = 0.0;
    std::size_t samples = 1000;
    std::optional<std::size_t> node;
    double t_fixed = 0.0;
    double delta_lo = 2.0;
    double delta_hi = 3.0;
    std::string method = "auto";
    long max_product = 100;
    std::string output;
    std::string format = "csv";
    int verbosity = 0;
};

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Table triad_table(std::size_t n, const TransferTriad& t) {
    Table table({"n", "delta_h", "d1_t_h", "p_h", "pi_over_lambda_min"});
    table.add_row({as_int(n), t.delta_h, t.t_h, t.p_h, t.lambda_min_estimate});
    return table;
}

Table eigs_table(const RunConfig& cfg) {
    const auto spec = ChainSpec::uniform_field(cfg.n_sites, cfg.delta);
    const auto matrix = build_coupling_matrix(spec);
    EigenSystem eig;
    if (cfg.method == "numeric")
        eig = eigensystem_numeric(matrix);
    else if (cfg.method == "analytic")
        eig = spec.is_even() ? eigensystem_even(spec) : eigensystem_odd(spec);
    else
        eig = eigensystem_auto(spec);
    const auto numeric = eigensystem_numeric(matrix);
    const double residual = eig.residual(matrix);

    Table table({"nu", "lambda", "provenance", "residual_inf", "numeric_lambda", "eigenvalue_diff",
                 "eigenvector_diff"});
    for (std::size_t nu = 0; nu < eig.size(); ++nu) {
        double same = 0.0;
        double flipped = 0.0;
        for (std::size_t k = 0; k < eig.size(); ++k) {
            same = std::max(same, std::abs(eig.u(k, nu) - numeric.u(k, nu)));
            flipped = std::max(flipped, std::abs(eig.u(k, nu) + numeric.u(k, nu)));
        }
        table.add_row({as_int(nu + 1), eig.eigenvalues[nu], std::string(to_string(eig.provenance)), residual,
                       numeric.eigenvalues[nu], std::abs(eig.eigenvalues[nu] - numeric.eigenvalues[nu]),
                       std::min(same, flipped)});
    }
    return table;
}

Table curve_table(const RunConfig& cfg) {
    const auto spec = ChainSpec::uniform_field(cfg.n_sites, cfg.delta);
    const auto curve = sample_curve(eigensystem_auto(spec), cfg.node.value_or(cfg.n_sites), cfg.t_max, cfg.samples);
    Table table({"d1_t", "probability"});
    for (std::size_t i = 0; i < curve.times.size(); ++i)
        table.add_row({curve.times[i], curve.probabilities[i]});
    return table;
}

Table sweep_table(const std::vector<SweepRow>& rows) {
    Table table({"n", "delta", "d1_t_h1", "p_h1", "pi_over_lambda_min", "status"});
    for (const auto& r : rows)
        table.add_row({as_int(r.n_sites), r.delta, r.t_h1, r.p_h1, r.pi_over_lambda_min,
                       r.error ? "error: " + *r.error : std::string("ok")});
    return table;
}

Table ideal_table(const RunConfig& cfg, std::ostream& err) {
    const auto family = ideal_solutions(cfg.max_product);
    for (const auto& r : family.rejected)
        err << "rejected ideal candidate a=" << r.a << " b=" << r.b << " P=" << format_number(r.probability) << '\n';
    Table table({"a", "b", "delta_bar", "d1_t_bar", "probability", "validated"});
    for (const auto& s : family.solutions)
        table.add_row({static_cast<std::int64_t>(s.a), static_cast<std::int64_t>(s.b), s.delta_bar, s.t_bar,
                       s.probability, s.validated});
    return table;
}

Table bound_table(const RunConfig& cfg) {
    const auto spec = ChainSpec::uniform_field(cfg.n_sites, cfg.delta);
    const auto r = bound_report(spec);
    const Cell feasible = cfg.delta == 1.0 ? Cell{equality_feasible(spec)} : Cell{std::string("n/a")};
    Table table({"n", "delta", "delta_max", "f1_cap", "f2_value", "f2_cap", "p_bound", "equality_feasible"});
    table.add_row({as_int(r.n_sites), r.delta, r.delta_max, r.f1_cap, r.f2_value, r.f2_cap, r.p_bound, feasible});
    return table;
}

void emit(const Table& table, const RunConfig& cfg, std::ostream& out) {
    if (cfg.output.empty()) {
        table.write(out, cfg.format);
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
    if (!file)
        throw ValidationError("cannot open output file '" + cfg.output + "'");
    table.write(file, cfg.format);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Alternating XY spin chain: single-excitation state transfer", "xychain"};
    app.require_subcommand(1);
    app.add_option("-o,--output", cfg.output, "Write the table to this file instead of stdout");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("-v,--verbose", cfg.verbosity, "Print progress details to stderr");

    auto chain_options = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n_sites, "Chain length N")->required()->check(CLI::Range(2, 100000));
        sub->add_option("--delta", cfg.delta, "Coupling ratio D2/D1")->required();
    };
    auto range_options = [&](CLI::App* sub) {
        sub->add_option("--delta-lo", cfg.delta_lo, "Lower end of the delta range")->capture_default_str();
        sub->add_option("--delta-hi", cfg.delta_hi, "Upper end of the delta range")->capture_default_str();
    };

    auto* eigs = app.add_subcommand("eigs", "Spectrum with provenance and numeric cross-check");
    chain_options(eigs);
    eigs->add_option("--method", cfg.method)->check(CLI::IsMember({"auto", "analytic", "numeric"}));

    auto* curve = app.add_subcommand("curve", "Sampled P_k(t) on a uniform grid");
    chain_options(curve);
    curve->add_option("--tmax", cfg.t_max, "Horizon in units of 1/D1")->required();
    curve->add_option("--samples", cfg.samples, "Number of grid points")->capture_default_str();
    curve->add_option("--node", cfg.node, "Target node k (default N)");

    auto* optimize = app.add_subcommand("optimize", "Delta maximizing the first-peak probability");
    optimize->add_option("--n", cfg.n_sites, "Even chain length")->required();
    range_options(optimize);

    auto* fixed = app.add_subcommand("fixed-time", "Delta maximizing P at a fixed time");
    fixed->add_option("--n", cfg.n_sites, "Even chain length")->required();
    fixed->add_option("--t", cfg.t_fixed, "Transfer time D1*t")->required();
    range_options(fixed);

    auto* table1 = app.add_subcommand("table1", "First peaks for several N at one delta");
    table1->add_option("--delta", cfg.delta, "Coupling ratio")->required();
    table1->add_option("--n", cfg.n_list, "Comma-separated even chain lengths")->required()->delimiter(',');

    auto* ideal4 = app.add_subcommand("ideal4", "Perfect-transfer family of the four-site chain");
    ideal4->add_option("--max-product", cfg.max_product, "Largest index product a*b")->capture_default_str();

    auto* bound = app.add_subcommand("bound", "Analytic probability cap for odd N");
    chain_options(bound);

    auto* verify = app.add_subcommand("verify", "Run the oracle and invariant suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }

    try {
        if (*verify) {
            const auto outcome = run_verification(out);
            if (!outcome.ok) {
                err << "verification failed: " << outcome.failure << '\n';
                return kVerificationFailure;
            }
            out << "all " << outcome.passed << " checks passed\n";
            return kSuccess;
        }
        if (*eigs) {
            emit(eigs_table(cfg), cfg, out);
        } else if (*curve) {
            emit(curve_table(cfg), cfg, out);
        } else if (*optimize) {
            emit(triad_table(cfg.n_sites, optimize_delta(cfg.n_sites, cfg.delta_lo, cfg.delta_hi)), cfg, out);
        } else if (*fixed) {
            emit(triad_table(cfg.n_sites, fixed_time_optimize(cfg.n_sites, cfg.t_fixed, cfg.delta_lo, cfg.delta_hi)),
                 cfg, out);
        } else if (*table1) {
            const auto rows = table1_sweep(cfg.delta, cfg.n_list);
            emit(sweep_table(rows), cfg, out);
            const bool failed = std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.error.has_value(); });
            if (failed) {
                err << "one or more rows failed; see the status column\n";
                return kNumericError;
            }
        } else if (*ideal4) {
            emit(ideal_table(cfg, err), cfg, out);
        } else if (*bound) {
            emit(bound_table(cfg), cfg, out);
        }
        if (cfg.verbosity > 0)
            err << "done\n";
        return kSuccess;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return kNumericError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }
}

} // namespace xychain::cli
