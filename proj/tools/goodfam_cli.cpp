// Command-line surface: build and verify families, run the reduction on
// instance files, sweep benchmark grids, and characterize the randomized
// baseline. Exit codes: 0 success, 1 infeasibility or verification failure,
// 2 usage error (including malformed files).
//
// The deterministic build path takes no seed on purpose: identical flags must
// produce byte-identical output files. Only random-baseline is seeded.

#include "goodfam/builder.hpp"
#include "goodfam/flow.hpp"
#include "goodfam/io.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace goodfam;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

Variant variant_from(const std::string &name) {
    return name == "ss" ? Variant::single_source : Variant::general;
}

void print_params(const FamilyParams &p) {
    std::cout << "params: " << variant_name(p.variant) << " n=" << p.n
              << " k=" << p.k << " A=" << p.alphabet.size
              << " gamma=" << p.gamma << " alpha=" << p.alpha
              << " beta=" << p.beta << "\n";
}

void print_violations(const std::vector<ViolationReport> &violations) {
    for (const ViolationReport &v : violations) {
        std::cout << "violation " << violation_kind_name(v.kind) << " witnesses";
        for (int w : v.witnesses) std::cout << ' ' << w;
        std::cout << ": observed " << v.observed << " vs bound " << v.bound
                  << "\n";
    }
}

struct BuildArgs {
    int n = 16, k = 2, c_mult = 2;
    double zeta = 1.0;
    std::string variant = "general", out;
};

int run_build(const BuildArgs &a) {
    auto t0 = std::chrono::steady_clock::now();
    BuildReport report;
    GoodFamily fam = build_family(a.n, a.k, variant_from(a.variant),
                                  {a.c_mult, a.zeta}, &report);
    double wall = ms_since(t0);
    auto violations = verify_strong_goodness(fam);
    print_params(report.params);
    long long total = 0, mx = 0;
    for (long long s : report.append_steps) {
        total += s;
        mx = std::max(mx, s);
    }
    std::cout << "family: R=" << report.params.gamma * report.params.alphabet.size
              << " subsets, escalations=" << report.params.escalations << "\n";
    std::cout << "descent: " << report.append_steps.size() << " appends, max steps "
              << mx << ", total steps " << total << ", step bound "
              << step_bound(report.params) << ", spot checks "
              << report.spot_checks << "\n";
    std::cout << "search: " << report.sa_iterations << " polish iterations, "
              << report.stalls << " stalls, " << report.backjumps
              << " backjumps\n";
    std::cout << "verify: strong goodness "
              << (violations.empty() ? "OK" : "FAILED") << " ("
              << violations.size() << " violations)\n";
    print_violations(violations);
    std::cout << "wall: " << wall << " ms\n";
    if (!a.out.empty()) {
        write_family_file(a.out, fam);
        std::cout << "wrote " << a.out << "\n";
    }
    return violations.empty() ? 0 : 1;
}

struct VerifyArgs {
    std::string in;
    bool weak = false;
    long long budget = 100000000;
};

int run_verify(const VerifyArgs &a) {
    GoodFamily fam = read_family_file(a.in);
    print_params(fam.params);
    auto violations = verify_strong_goodness(fam);
    std::cout << "strong goodness: " << (violations.empty() ? "OK" : "FAILED")
              << " (" << violations.size() << " violations)\n";
    print_violations(violations);
    bool weak_failed = false;
    if (a.weak) {
        auto cex = fam.params.variant == Variant::general
                       ? verify_weak_goodness_bruteforce(fam, fam.params.k, a.budget)
                       : verify_weak_goodness_ss_bruteforce(fam, fam.params.k,
                                                            a.budget);
        if (cex) {
            weak_failed = true;
            std::cout << "weak goodness: counterexample i=" << cex->i;
            if (cex->j >= 0) std::cout << " j=" << cex->j;
            std::cout << " X={";
            for (size_t t = 0; t < cex->blockers.size(); ++t)
                std::cout << (t ? "," : "") << cex->blockers[t];
            std::cout << "}\n";
        } else {
            std::cout << "weak goodness: OK (no counterexample)\n";
        }
    }
    return violations.empty() && !weak_failed ? 0 : 1;
}

struct SolveArgs {
    std::string graph, family, subsolver = "exact", out;
};

int run_solve(const SolveArgs &a) {
    SndpInstance inst = read_instance_file(a.graph);
    GoodFamily fam = read_family_file(a.family);
    ElementSubsolver solver;
    if (a.subsolver == "exact")
        solver = [](const Subinstance &sub) { return exact_subsolver(sub); };
    else
        solver = [](const Subinstance &sub) { return reverse_delete_subsolver(sub); };
    auto t0 = std::chrono::steady_clock::now();
    SolutionReport report = inst.variant == Variant::general
                                ? solve_vcsndp(inst, fam, solver)
                                : solve_single_source(inst, fam, solver);
    double wall = ms_since(t0);
    std::cout << "subsets: " << report.nonempty_subsets << " nonempty, "
              << report.per_subinstance.size() << " solved after dedup\n";
    std::cout << "union: " << report.chosen_edges.size() << " edges, cost "
              << report.total_cost << "\n";
    for (const RequirementCheck &c : report.feasibility)
        std::cout << "requirement r(" << c.req.u << "," << c.req.v
                  << ")=" << c.req.r << ": achieved " << c.achieved << "\n";
    std::cout << "wall: " << wall << " ms\n";
    if (!a.out.empty()) {
        std::ofstream out(a.out);
        if (!out) throw std::runtime_error("cannot open " + a.out + " for writing");
        out << "solution v1 cost=" << report.total_cost
            << " edges=" << report.chosen_edges.size() << "\n";
        for (int e : report.chosen_edges)
            out << "e " << e << " " << inst.edges[e].u << " " << inst.edges[e].v
                << " " << inst.edges[e].cost << "\n";
        std::cout << "wrote " << a.out << "\n";
    }
    return 0;
}

struct BenchArgs {
    std::vector<int> n_grid{8, 12, 16};
    std::vector<int> k_grid{2, 3};
    int trials = 1;
    std::string csv = "-";
};

int run_bench(const BenchArgs &a) {
    std::ofstream file;
    std::ostream *out = &std::cout;
    if (a.csv != "-") {
        file.open(a.csv);
        if (!file) throw std::runtime_error("cannot open " + a.csv + " for writing");
        out = &file;
    }
    *out << "n,k,variant,gamma,R_size,escalations,max_steps,wall_ms\n";
    for (Variant variant : {Variant::general, Variant::single_source})
        for (int n : a.n_grid)
            for (int k : a.k_grid)
                for (int trial = 0; trial < a.trials; ++trial) {
                    auto t0 = std::chrono::steady_clock::now();
                    try {
                        BuildReport report;
                        build_family(n, k, variant, {}, &report);
                        long long mx = 0;
                        for (long long s : report.append_steps) mx = std::max(mx, s);
                        *out << n << ',' << k << ',' << variant_name(variant)
                             << ',' << report.params.gamma << ','
                             << report.params.gamma * report.params.alphabet.size
                             << ',' << report.params.escalations << ',' << mx
                             << ',' << ms_since(t0) << "\n";
                    } catch (const EscalationExhausted &e) {
                        std::cerr << "bench: " << variant_name(variant) << " n=" << n
                                  << " k=" << k << " failed: " << e.what() << "\n";
                    }
                }
    return 0;
}

struct BaselineArgs {
    int n = 64, k = 3, seeds = 100;
    std::string variant = "general";
};

int run_baseline(const BaselineArgs &a) {
    Variant variant = variant_from(a.variant);
    FamilyParams p = derive_params(a.n, a.k, variant);
    print_params(p);
    int ok_base = 0, ok_double = 0, regressions = 0;
    for (int seed = 1; seed <= a.seeds; ++seed) {
        BaselineConfig base, doubled;
        doubled.gamma_override = 2 * p.gamma;
        bool b = std::holds_alternative<GoodFamily>(
            build_family_randomized(a.n, a.k, variant, base, seed));
        bool d = std::holds_alternative<GoodFamily>(
            build_family_randomized(a.n, a.k, variant, doubled, seed));
        ok_base += b;
        ok_double += d;
        regressions += (b && !d);
    }
    std::cout << "seeds: " << a.seeds << "\n";
    std::cout << "success at gamma=" << p.gamma << ": " << ok_base << "\n";
    std::cout << "success at gamma=" << 2 * p.gamma << ": " << ok_double << "\n";
    std::cout << "paired regressions when doubling gamma: " << regressions << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"good-family construction and vertex-connectivity SNDP reduction"};
    app.require_subcommand(1);

    BuildArgs build_args;
    CLI::App *build = app.add_subcommand("build-family",
                                         "construct a family deterministically");
    build->add_option("--n", build_args.n, "number of labels")->required();
    build->add_option("--k", build_args.k, "max connectivity requirement")->required();
    build->add_option("--variant", build_args.variant, "general or ss")
        ->check(CLI::IsMember({"general", "ss"}));
    build->add_option("--c-mult", build_args.c_mult, "alphabet multiplier |A|=c*k");
    build->add_option("--zeta", build_args.zeta, "gamma scale factor");
    build->add_option("--out", build_args.out, "output family file");

    VerifyArgs verify_args;
    CLI::App *verify = app.add_subcommand("verify-family", "certify a family file");
    verify->add_option("--in", verify_args.in, "family file")->required();
    verify->add_flag("--weak-bruteforce", verify_args.weak,
                     "also run the exponential weak-goodness oracle");
    verify->add_option("--budget", verify_args.budget,
                       "work budget for the weak oracle");

    SolveArgs solve_args;
    CLI::App *solve = app.add_subcommand("solve-sndp",
                                         "run the subset-split reduction");
    solve->add_option("--graph", solve_args.graph, "instance file")->required();
    solve->add_option("--family", solve_args.family, "family file")->required();
    solve->add_option("--subsolver", solve_args.subsolver,
                      "exact or reverse-delete")
        ->check(CLI::IsMember({"exact", "reverse-delete"}));
    solve->add_option("--out", solve_args.out, "solution report file");

    BenchArgs bench_args;
    CLI::App *bench = app.add_subcommand("bench", "sweep (n,k) and emit CSV");
    bench->add_option("--n-grid", bench_args.n_grid, "n values")->delimiter(',');
    bench->add_option("--k-grid", bench_args.k_grid, "k values")->delimiter(',');
    bench->add_option("--trials", bench_args.trials, "repetitions per cell");
    bench->add_option("--csv", bench_args.csv, "output path, - for stdout");

    BaselineArgs baseline_args;
    CLI::App *baseline = app.add_subcommand(
        "random-baseline", "measure the uniform-labeling baseline");
    baseline->add_option("--n", baseline_args.n, "number of labels");
    baseline->add_option("--k", baseline_args.k, "max connectivity requirement");
    baseline->add_option("--seeds", baseline_args.seeds, "seeds 1..S");
    baseline->add_option("--variant", baseline_args.variant, "general or ss")
        ->check(CLI::IsMember({"general", "ss"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return run_build(build_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (solve->parsed()) return run_solve(solve_args);
        if (bench->parsed()) return run_bench(bench_args);
        if (baseline->parsed()) return run_baseline(baseline_args);
    } catch (const FormatError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Infeasible &e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const PostVerificationFailure &e) {
        std::cerr << "post-verification failed: " << e.what() << "\n";
        return 1;
    } catch (const EscalationExhausted &e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
