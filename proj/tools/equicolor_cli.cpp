#include "equicolor/equicolor.h"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

// Exit codes: 0 success/feasible, 1 verification failed or infeasible,
// 2 usage/format error, 3 counterexample candidate (repair exhausted or an
// invariant violation) with its report preserved.
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

struct StringOut {
    char* text = nullptr;
    ~StringOut() { eqc_string_free(text); }
    std::string str() const { return text ? std::string(text) : std::string(); }
};

struct GraphHandle {
    eqc_graph* g = nullptr;
    ~GraphHandle() { eqc_graph_free(g); }
};

struct ColoringHandle {
    eqc_coloring* c = nullptr;
    ~ColoringHandle() { eqc_coloring_free(c); }
};

int exit_code_for(eqc_status status) {
    switch (status) {
    case EQC_OK: return kExitOk;
    case EQC_ERR_REPAIR_EXHAUSTED:
    case EQC_ERR_INVARIANT_VIOLATION: return kExitCounterexample;
    default: return kExitUsage;
    }
}

int report_failure(const char* context, eqc_status status) {
    std::cerr << context << ": " << eqc_last_error() << "\n";
    return exit_code_for(status);
}

bool read_input(const std::string& path, std::string& text_out) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text_out = buffer.str();
        return true;
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text_out = buffer.str();
    return true;
}

bool write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return true;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return false;
    }
    out << text;
    return out.good();
}

eqc_class_kind kind_from(const std::string& name) {
    return name == "nic" ? EQC_NIC_PLANAR : EQC_IC_PLANAR;
}

int default_min_delta(eqc_class_kind kind) { return kind == EQC_NIC_PLANAR ? 11 : 10; }

bool load_graph(const std::string& path, GraphHandle& graph) {
    std::string text;
    if (!read_input(path, text)) return false;
    eqc_status status = eqc_graph_parse(text.c_str(), &graph.g);
    if (status != EQC_OK) {
        std::cerr << "parse " << path << ": " << eqc_last_error() << "\n";
        return false;
    }
    return true;
}

struct ColorArgs {
    std::string in;
    std::string out;
    std::string trace_path;
    std::string kind = "ic";
    int r = 0;
    int max_rounds = 0;
};

int run_color(const ColorArgs& args) {
    GraphHandle graph;
    if (!load_graph(args.in, graph)) return kExitUsage;

    eqc_color_options options{kind_from(args.kind), args.trace_path.empty() ? 0 : 1,
                              args.max_rounds};
    ColoringHandle coloring;
    StringOut trace;
    eqc_run_stats stats{};
    eqc_status status =
        eqc_color_run(graph.g, args.r, &options, &coloring.c,
                      args.trace_path.empty() ? nullptr : &trace.text, &stats);
    if (status != EQC_OK) {
        // The error text carries the diagnostics (and the trace when it was
        // being collected); preserve it where the trace was headed.
        if (!args.trace_path.empty()) write_output(args.trace_path, eqc_last_error());
        return report_failure("color", status);
    }

    StringOut doc;
    status = eqc_coloring_format(coloring.c, &doc.text);
    if (status != EQC_OK) return report_failure("format coloring", status);
    if (!write_output(args.out, doc.str())) return kExitUsage;
    if (!args.trace_path.empty() && !write_output(args.trace_path, trace.str()))
        return kExitUsage;
    std::cerr << "colored: n=" << eqc_graph_vertex_count(graph.g) << " r=" << args.r
              << " conflicts=" << stats.conflicts << " moves=" << stats.repair_moves
              << " strict=" << (stats.strict ? "yes" : "no") << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string in;
    std::string coloring;
};

int run_verify(const VerifyArgs& args) {
    GraphHandle graph;
    if (!load_graph(args.in, graph)) return kExitUsage;
    std::string coloring_text;
    if (!read_input(args.coloring, coloring_text)) return kExitUsage;
    ColoringHandle coloring;
    eqc_status status = eqc_coloring_parse(coloring_text.c_str(), &coloring.c);
    if (status != EQC_OK) return report_failure("parse coloring", status);

    int valid = 0;
    StringOut report;
    status = eqc_verify(graph.g, coloring.c, &valid, &report.text);
    if (status != EQC_OK) return report_failure("verify", status);
    std::cout << report.str();
    return valid ? kExitOk : kExitInvalid;
}

struct GenerateArgs {
    std::string out;
    std::string kind = "ic";
    int n = 0;
    unsigned long long seed = 1;
    int min_delta = 0;
};

int run_generate(const GenerateArgs& args) {
    eqc_class_kind kind = kind_from(args.kind);
    int min_delta = args.min_delta > 0 ? args.min_delta : default_min_delta(kind);
    StringOut instance;
    eqc_status status = eqc_generate(args.n, args.seed, min_delta, kind, &instance.text);
    if (status != EQC_OK) return report_failure("generate", status);
    return write_output(args.out, instance.str()) ? kExitOk : kExitUsage;
}

struct OracleArgs {
    std::string in;
    std::string witness_path;
    int r = 0;
    int max_n = 0;
};

int run_oracle(const OracleArgs& args) {
    GraphHandle graph;
    if (!load_graph(args.in, graph)) return kExitUsage;
    int feasible = 0;
    StringOut witness;
    eqc_status status =
        eqc_oracle_equitable(graph.g, args.r, args.max_n, &feasible, &witness.text);
    if (status != EQC_OK) return report_failure("oracle", status);
    std::cout << (feasible ? "feasible" : "infeasible") << "\n";
    if (feasible && !args.witness_path.empty() &&
        !write_output(args.witness_path, witness.str()))
        return kExitUsage;
    return feasible ? kExitOk : kExitInvalid;
}

struct SweepArgs {
    std::string out;
    int n_max = 0;
};

int run_sweep(const SweepArgs& args) {
    int clean = 0;
    StringOut report;
    eqc_status status = eqc_oracle_sweep(args.n_max, &clean, &report.text);
    if (status != EQC_OK) return report_failure("sweep", status);
    if (!write_output(args.out, report.str())) return kExitUsage;
    return clean ? kExitOk : kExitInvalid;
}

struct BenchArgs {
    std::string kind = "ic";
    std::string trace_dir;
    int count = 0;
    int n = 0;
    unsigned long long seed = 1;
    int min_delta = 0;
    int r = 0; // 0 means the instance's max degree
};

int run_bench(const BenchArgs& args) {
    eqc_class_kind kind = kind_from(args.kind);
    int min_delta = args.min_delta > 0 ? args.min_delta : default_min_delta(kind);
    std::cout << "seed\tn\tedges\tdelta\tr\tms\tconflicts\tmoves\tmax_a\tstatus\n";
    bool counterexample = false;
    bool usage_error = false;
    for (int i = 0; i < args.count; ++i) {
        unsigned long long seed = args.seed + static_cast<unsigned long long>(i);
        StringOut instance;
        eqc_status status = eqc_generate(args.n, seed, min_delta, kind, &instance.text);
        if (status != EQC_OK) {
            std::cerr << "generate seed " << seed << ": " << eqc_last_error() << "\n";
            usage_error = true;
            continue;
        }
        GraphHandle graph;
        status = eqc_graph_parse(instance.text, &graph.g);
        if (status != EQC_OK) {
            std::cerr << "parse seed " << seed << ": " << eqc_last_error() << "\n";
            usage_error = true;
            continue;
        }
        int delta = eqc_graph_max_degree(graph.g);
        int r = args.r > 0 ? args.r : delta;

        eqc_color_options options{kind, 1, 0};
        ColoringHandle coloring;
        StringOut trace;
        eqc_run_stats stats{};
        auto start = std::chrono::steady_clock::now();
        status = eqc_color_run(graph.g, r, &options, &coloring.c, &trace.text, &stats);
        auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();

        const char* verdict = "ok";
        if (status != EQC_OK) {
            verdict = exit_code_for(status) == kExitCounterexample ? "exit3" : "error";
            if (exit_code_for(status) == kExitCounterexample) {
                counterexample = true;
                std::string report = std::string("instance seed ") + std::to_string(seed) +
                                     ":\n" + instance.str() + "\nfailure:\n" +
                                     eqc_last_error() + "\n";
                if (!args.trace_dir.empty()) {
                    write_output(args.trace_dir + "/fail_seed_" + std::to_string(seed) +
                                     ".txt",
                                 report);
                } else {
                    std::cerr << report;
                }
            } else {
                usage_error = true;
                std::cerr << "color seed " << seed << ": " << eqc_last_error() << "\n";
            }
        }
        std::printf("%llu\t%d\t%d\t%d\t%d\t%.2f\t%d\t%lld\t%d\t%s\n", seed, args.n,
                    eqc_graph_edge_count(graph.g), delta, r, elapsed, stats.conflicts,
                    stats.repair_moves, stats.max_access_seen, verdict);
    }
    if (counterexample) return kExitCounterexample;
    return usage_error ? kExitUsage : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equitable r-colorings of sparse graphs: solver, validator, "
                 "generator, and brute-force oracle"};
    app.require_subcommand(1);

    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "compute an equitable r-coloring");
    color->add_option("--in", color_args.in, "graph file (- for stdin)")->required();
    color->add_option("--r", color_args.r, "number of classes")->required()
        ->check(CLI::PositiveNumber);
    color->add_option("--kind", color_args.kind, "graph class (ic or nic)")
        ->check(CLI::IsMember({"ic", "nic"}));
    color->add_option("--out", color_args.out, "coloring output (default stdout)");
    color->add_option("--trace", color_args.trace_path, "also write the repair trace here");
    color->add_option("--max-rounds", color_args.max_rounds,
                      "override the per-conflict repair round bound");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
    verify->add_option("--in", verify_args.in, "graph file (- for stdin)")->required();
    verify->add_option("--coloring", verify_args.coloring, "coloring file")->required();

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "emit a crossing-certified instance");
    generate->add_option("--n", generate_args.n, "vertex count")->required()
        ->check(CLI::PositiveNumber);
    generate->add_option("--seed", generate_args.seed, "random seed");
    generate->add_option("--kind", generate_args.kind, "graph class (ic or nic)")
        ->check(CLI::IsMember({"ic", "nic"}));
    generate->add_option("--min-delta", generate_args.min_delta,
                         "minimum max-degree (default: the class threshold)");
    generate->add_option("--out", generate_args.out, "instance output (default stdout)");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "exhaustive equitable-colorability check");
    oracle->add_option("--in", oracle_args.in, "graph file (- for stdin)")->required();
    oracle->add_option("--r", oracle_args.r, "number of classes")->required()
        ->check(CLI::PositiveNumber);
    oracle->add_option("--max-n", oracle_args.max_n, "raise the brute-force size guard");
    oracle->add_option("--witness", oracle_args.witness_path,
                       "write a witness coloring here when feasible");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "engine-versus-oracle sweep over small graphs");
    sweep->add_option("--n-max", sweep_args.n_max, "largest vertex count to cover")
        ->required()->check(CLI::Range(1, 8));
    sweep->add_option("--out", sweep_args.out, "report output (default stdout)");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "generate a seeded batch and time the solver");
    bench->add_option("--count", bench_args.count, "number of instances")->required()
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--n", bench_args.n, "vertex count per instance")->required()
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_args.seed, "base seed (instance i uses seed+i)");
    bench->add_option("--kind", bench_args.kind, "graph class (ic or nic)")
        ->check(CLI::IsMember({"ic", "nic"}));
    bench->add_option("--min-delta", bench_args.min_delta,
                      "minimum max-degree (default: the class threshold)");
    bench->add_option("--r", bench_args.r, "class count (default: each instance's max degree)");
    bench->add_option("--trace-dir", bench_args.trace_dir,
                      "directory for failing-instance reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (color->parsed()) return run_color(color_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (generate->parsed()) return run_generate(generate_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (bench->parsed()) return run_bench(bench_args);
    return kExitUsage;
}
