// Command-line front end: generate graphs, solve single instances, run
// benchmark sweeps, aggregate records, and run the numerical verification
// checks. Exit codes: 0 success, 1 usage/parse error, 2 capacity/budget/
// check failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qwmvc/bench.hpp"
#include "qwmvc/ctqw.hpp"
#include "qwmvc/errors.hpp"
#include "qwmvc/exact.hpp"
#include "qwmvc/generators.hpp"
#include "qwmvc/graph_io.hpp"
#include "qwmvc/heuristics.hpp"
#include "qwmvc/laplacian.hpp"
#include "qwmvc/report.hpp"
#include "qwmvc/rng.hpp"
#include "qwmvc/version.hpp"

namespace {

using namespace qwmvc;

int env_threads() {
    const char* raw = std::getenv("QWMVC_THREADS");
    if (!raw || !*raw) {
        return 0;
    }
    try {
        return std::max(0, std::stoi(raw));
    } catch (...) {
        return 0;
    }
}

struct GenerateArgs {
    std::string family;
    int n = 0;
    double p = 0.5;
    int m = 1;
    int k = 2;
    int ring_k = 2;
    double beta = 0.1;
    std::uint64_t seed = 0;
    std::string output;
};

int run_generate(const GenerateArgs& args) {
    Graph g;
    if (args.family == "er") {
        g = generate_er(args.n, args.p, args.seed);
    } else if (args.family == "ba") {
        g = generate_ba(args.n, args.m, args.seed);
    } else if (args.family == "reg") {
        g = generate_regular(args.n, args.k, args.seed);
    } else if (args.family == "ws") {
        g = generate_ws(args.n, args.ring_k, args.beta, args.seed);
    } else {
        throw std::invalid_argument("unknown family '" + args.family + "'");
    }
    write_edge_list_file(g, args.output);
    std::cout << "wrote " << args.output << " (n=" << g.vertex_count() << " m=" << g.edge_count()
              << ")\n";
    return 0;
}

struct SolveArgs {
    std::string graph_file;
    std::string solver = "quantum";
    std::uint64_t seed = 0;
    std::string time_mode = "topt";
    long long budget = kDefaultBnbBudget;
    bool trace = false;
    bool json = false;
};

int run_solve(const SolveArgs& args) {
    const Graph g = read_edge_list_file(args.graph_file);
    SolveReport report;
    int exit_code = 0;
    if (args.solver == "quantum") {
        QuantumParams params;
        if (args.time_mode == "topt") {
            params.time_mode = TimeMode::topt_active;
        } else if (args.time_mode == "fixed001") {
            params.time_mode = TimeMode::fixed;
            params.fixed_time = 0.01;
        } else {
            throw std::invalid_argument("--time-mode must be topt or fixed001");
        }
        report = make_report(quantum_mvc(g, params));
    } else if (args.solver == "2approx") {
        report = make_report(two_approx_mvc(g, args.seed));
    } else if (args.solver == "fastvc") {
        FastVcParams params;
        params.seed = args.seed;
        report = make_report(fastvc_mvc(g, params));
    } else if (args.solver == "sa") {
        SaParams params;
        params.seed = args.seed;
        report = make_report(sa_mvc(g, params));
    } else if (args.solver == "exact") {
        const ExactResult r = bnb_mvc(g, args.budget);
        report = make_report(r);
        if (!r.proven_optimal) {
            exit_code = 2;  // budget exhausted
        }
    } else {
        throw std::invalid_argument("unknown solver '" + args.solver + "'");
    }
    std::cout << (args.json ? solve_report_json(report, args.trace)
                            : solve_report_text(report, args.trace));
    return exit_code;
}

struct BenchArgs {
    std::string config_file;
    std::string out_dir = "out";
};

int run_bench(const BenchArgs& args) {
    EnsembleConfig config;
    if (!args.config_file.empty()) {
        config = parse_config_file(args.config_file);
    }
    const RunResult run = run_ensemble(config, env_threads());

    std::error_code ec;
    std::filesystem::create_directories(args.out_dir, ec);
    auto write_file = [&](const std::string& name, const std::string& content) {
        const auto path = std::filesystem::path(args.out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw capacity_error("cannot write " + path.string());
        }
        out << content;
    };
    const AggregateResult by_family = aggregate_by_family(run.records);
    const AggregateResult by_family_n = aggregate_by_family_n(run.records);
    write_file("records.csv", records_csv(run.records));
    write_file("heatmap.csv", heatmap_csv(by_family, config.solvers));
    write_file("curves.csv", curves_csv(by_family_n));
    write_file("run_meta.txt",
               run_meta_text(config, run.stats, static_cast<long long>(run.records.size())));

    for (Family f : config.families) {
        std::cout << family_name(f) << ":";
        for (const auto& row : by_family.rows) {
            if (row.family == f) {
                std::cout << ' ' << row.solver << '=' << row.mean;
            }
        }
        std::cout << '\n';
    }
    std::cout << "wrote records.csv, heatmap.csv, curves.csv, run_meta.txt to " << args.out_dir
              << '\n';
    return 0;
}

struct ReportArgs {
    std::string records_file;
    bool json = false;
};

int run_report(const ReportArgs& args) {
    std::ifstream in(args.records_file);
    if (!in) {
        throw parse_error(args.records_file, 0, "cannot open file");
    }
    const auto records = parse_records_csv(in, args.records_file);
    const auto by_family = aggregate_by_family(records);
    const auto by_family_n = aggregate_by_family_n(records);
    std::cout << (args.json ? summary_table_json(by_family, by_family_n)
                            : summary_table_text(by_family, by_family_n));
    return 0;
}

struct VerifyArgs {
    std::string graph_file;
    double omega = 1e6;
    std::vector<int> frozen;
};

int run_verify(const VerifyArgs& args) {
    const Graph g = read_edge_list_file(args.graph_file);
    const int n = g.vertex_count();
    if (n < 1) {
        throw std::invalid_argument("verify: graph has no vertices");
    }
    bool all_pass = true;
    auto line = [&](const std::string& name, double value, double tolerance) {
        const bool pass = value <= tolerance;
        all_pass = all_pass && pass;
        std::printf("%-26s %.3e  (tolerance %.1e)  %s\n", name.c_str(), value, tolerance,
                    pass ? "PASS" : "FAIL");
    };

    const double t = t_opt(n);
    const Matrix gamma = normalized_gamma(g);
    const SpectralCache gamma_cache = spectral_decompose(gamma);
    const SpectralCache h_cache = spectral_decompose(laplacians(g).symmetric);

    // |diag e^{-iHt}| must equal |diag e^{i Gamma t}| exactly (H = I - Gamma)
    double trotter_dev = 0.0;
    for (int m = 0; m < n; ++m) {
        if (g.degree(m) == 0) {
            continue;
        }
        const double a = std::abs(propagator_diag(gamma_cache, m, t));
        cvector e(n, 0.0);
        e[m] = 1.0;
        const double b = std::abs(evolve(h_cache, e, t)[m]);
        trotter_dev = std::max(trotter_dev, std::abs(a - b));
    }
    line("trotter_exactness", trotter_dev, 1e-12);

    double unitarity_dev = 0.0;
    for (int m = 0; m < n; ++m) {
        double norm = 0.0;
        for (const auto& z : propagator_column(gamma_cache, m, t)) {
            norm += std::norm(z);
        }
        unitarity_dev = std::max(unitarity_dev, std::abs(norm - 1.0));
    }
    line("unitarity", unitarity_dev, 1e-8);

    FreezeParams params;
    params.omega = args.omega;
    params.frozen = args.frozen;
    if (params.frozen.empty()) {
        int best = 0;
        for (int v = 1; v < n; ++v) {
            if (g.degree(v) > g.degree(best)) {
                best = v;
            }
        }
        params.frozen = {best};
    }
    const FreezeReport freeze = freeze_evolution_check(g, params, t);
    line("freeze_active_deviation", freeze.max_active_deviation, 1e-3);
    line("freeze_leakage", freeze.leaked_probability, 1e-3);

    double prev = -1.0;
    bool monotone = true;
    for (double omega : {1e2, 1e3, 1e4, 1e6}) {
        FreezeParams p2 = params;
        p2.omega = omega;
        const double leak = freeze_evolution_check(g, p2, t).leaked_probability;
        if (prev >= 0.0 && leak > prev) {
            monotone = false;
        }
        prev = leak;
    }
    std::printf("%-26s %s\n", "freeze_leakage_monotone", monotone ? "PASS" : "FAIL");
    all_pass = all_pass && monotone;

    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-time quantum walk heuristics for minimum vertex cover"};
    app.set_version_flag("--version", std::string(qwmvc::kVersion));
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "generate a random graph file");
    generate->add_option("--family", gen.family, "er | ba | reg | ws")->required();
    generate->add_option("--n", gen.n, "vertex count")->required();
    generate->add_option("--p", gen.p, "ER edge probability");
    generate->add_option("--m", gen.m, "BA attachment count");
    generate->add_option("--k", gen.k, "REG degree");
    generate->add_option("--ring-k", gen.ring_k, "WS ring degree (even)");
    generate->add_option("--beta", gen.beta, "WS rewiring probability");
    generate->add_option("--seed", gen.seed, "PRNG seed");
    generate->add_option("output", gen.output, "output edge-list file")->required();

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
    solve_cmd->add_option("graph", solve.graph_file, "edge-list file")->required();
    solve_cmd->add_option("--solver", solve.solver, "quantum | 2approx | fastvc | sa | exact");
    solve_cmd->add_option("--seed", solve.seed, "seed for stochastic solvers");
    solve_cmd->add_option("--time-mode", solve.time_mode, "topt | fixed001 (quantum)");
    solve_cmd->add_option("--budget", solve.budget, "node budget for exact");
    solve_cmd->add_flag("--trace", solve.trace, "print per-iteration selections");
    solve_cmd->add_flag("--json", solve.json, "machine-readable output");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "run an ensemble sweep");
    bench_cmd->add_option("--config", bench.config_file, "config file (defaults: desk scale)");
    bench_cmd->add_option("--out", bench.out_dir, "output directory");

    ReportArgs report;
    auto* report_cmd = app.add_subcommand("report", "aggregate a records.csv");
    report_cmd->add_option("records", report.records_file, "records.csv")->required();
    report_cmd->add_flag("--json", report.json, "machine-readable output");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "freezing + propagator checks on a graph");
    verify_cmd->add_option("graph", verify.graph_file, "edge-list file")->required();
    verify_cmd->add_option("--omega", verify.omega, "penalty magnitude");
    verify_cmd->add_option("--frozen", verify.frozen, "frozen vertex ids (default: a max-degree vertex)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help / --version
        }
        app.exit(e);
        return 1;
    }

    try {
        if (*generate) {
            return run_generate(gen);
        }
        if (*solve_cmd) {
            return run_solve(solve);
        }
        if (*bench_cmd) {
            return run_bench(bench);
        }
        if (*report_cmd) {
            return run_report(report);
        }
        if (*verify_cmd) {
            return run_verify(verify);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const generation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
