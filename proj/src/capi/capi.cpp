#include "equicolor/equicolor.h"

#include "core/coloring.hpp"
#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/generator.hpp"
#include "core/graph.hpp"
#include "core/oracle.hpp"
#include "core/trace.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

using namespace equicolor;

struct eqc_graph {
    Graph g;
};

struct eqc_coloring {
    Coloring c;
};

namespace {

thread_local std::string last_error;

eqc_status fail(eqc_status status, const char* what) {
    last_error = what;
    return status;
}

// Every entry point funnels its body through here so no exception crosses
// the C boundary.
template <typename Fn>
eqc_status barrier(Fn&& body) {
    try {
        last_error.clear();
        body();
        return EQC_OK;
    } catch (const ParseError& e) {
        return fail(EQC_ERR_PARSE, e.what());
    } catch (const GuardError& e) {
        return fail(EQC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const RepairExhausted& e) {
        return fail(EQC_ERR_REPAIR_EXHAUSTED, e.what());
    } catch (const InvariantViolation& e) {
        return fail(EQC_ERR_INVARIANT_VIOLATION, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(EQC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(EQC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(EQC_ERR_INTERNAL, "unknown error");
    }
}

char* copy_out(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) throw GuardError(what);
}

ClassParams params_for(eqc_class_kind kind) {
    switch (kind) {
    case EQC_IC_PLANAR: return ClassParams::ic_planar();
    case EQC_NIC_PLANAR: return ClassParams::nic_planar();
    }
    throw GuardError("unknown class kind");
}

} // namespace

extern "C" {

const char* eqc_last_error(void) { return last_error.c_str(); }

void eqc_string_free(char* text) { std::free(text); }

/* ----- graphs ----- */

eqc_status eqc_graph_create(int vertex_count, eqc_graph** graph_out) {
    return barrier([&] {
        require(graph_out != nullptr, "graph_out is null");
        require(vertex_count >= 0, "vertex count must be nonnegative");
        *graph_out = new eqc_graph{Graph(vertex_count)};
    });
}

eqc_status eqc_graph_add_edge(eqc_graph* graph, int u, int v) {
    return barrier([&] {
        require(graph != nullptr, "graph is null");
        graph->g.add_edge(u, v);
    });
}

eqc_status eqc_graph_parse(const char* text, eqc_graph** graph_out) {
    return barrier([&] {
        require(text != nullptr, "text is null");
        require(graph_out != nullptr, "graph_out is null");
        *graph_out = new eqc_graph{parse_graph(text)};
    });
}

eqc_status eqc_graph_format(const eqc_graph* graph, char** text_out) {
    return barrier([&] {
        require(graph != nullptr, "graph is null");
        require(text_out != nullptr, "text_out is null");
        *text_out = copy_out(format_graph(graph->g));
    });
}

int eqc_graph_vertex_count(const eqc_graph* graph) {
    return graph ? graph->g.vertex_count() : -1;
}

int eqc_graph_edge_count(const eqc_graph* graph) { return graph ? graph->g.edge_count() : -1; }

int eqc_graph_max_degree(const eqc_graph* graph) { return graph ? graph->g.max_degree() : -1; }

void eqc_graph_free(eqc_graph* graph) { delete graph; }

/* ----- colorings ----- */

eqc_status eqc_coloring_parse(const char* text, eqc_coloring** coloring_out) {
    return barrier([&] {
        require(text != nullptr, "text is null");
        require(coloring_out != nullptr, "coloring_out is null");
        *coloring_out = new eqc_coloring{parse_coloring(text)};
    });
}

eqc_status eqc_coloring_format(const eqc_coloring* coloring, char** text_out) {
    return barrier([&] {
        require(coloring != nullptr, "coloring is null");
        require(text_out != nullptr, "text_out is null");
        *text_out = copy_out(format_coloring(coloring->c));
    });
}

int eqc_coloring_class_count(const eqc_coloring* coloring) {
    return coloring ? coloring->c.num_classes() : -1;
}

int eqc_coloring_class_of(const eqc_coloring* coloring, int vertex) {
    if (!coloring || vertex < 0 || vertex >= coloring->c.vertex_count()) return -1;
    return coloring->c.class_of(vertex);
}

void eqc_coloring_free(eqc_coloring* coloring) { delete coloring; }

eqc_status eqc_verify(const eqc_graph* graph, const eqc_coloring* coloring, int* valid_out,
                      char** report_out) {
    return barrier([&] {
        require(graph != nullptr, "graph is null");
        require(coloring != nullptr, "coloring is null");
        require(valid_out != nullptr, "valid_out is null");
        require(graph->g.vertex_count() == coloring->c.vertex_count(),
                "graph and coloring disagree on vertex count");
        VerifyReport report = verify_coloring(graph->g, coloring->c);
        *valid_out = report.valid() ? 1 : 0;
        if (report_out) *report_out = copy_out(report.to_text());
    });
}

/* ----- the coloring engine ----- */

eqc_status eqc_color_run(const eqc_graph* graph, int r, const eqc_color_options* options,
                         eqc_coloring** coloring_out, char** trace_out,
                         eqc_run_stats* stats_out) {
    return barrier([&] {
        require(graph != nullptr, "graph is null");
        require(coloring_out != nullptr, "coloring_out is null");
        eqc_color_options opts = options ? *options : eqc_color_options{EQC_IC_PLANAR, 0, 0};
        require(!trace_out || opts.collect_trace, "trace_out requires collect_trace");
        EngineOptions engine_opts;
        engine_opts.collect_trace = opts.collect_trace != 0;
        engine_opts.max_repair_rounds = opts.max_repair_rounds;
        EngineResult result = equitable_color_run(graph->g, r, params_for(opts.kind), engine_opts);
        if (trace_out) *trace_out = copy_out(format_trace(result.trace));
        if (stats_out) {
            stats_out->strict = result.stats.strict ? 1 : 0;
            stats_out->insertions = result.stats.insertions;
            stats_out->conflicts = result.stats.conflicts;
            stats_out->repair_moves = result.stats.repair_moves;
            stats_out->profiles_checked = result.stats.profiles_checked;
            stats_out->max_access_seen = result.stats.max_access_seen;
        }
        *coloring_out = new eqc_coloring{std::move(result.coloring)};
    });
}

eqc_status eqc_color(const eqc_graph* graph, int r, const eqc_color_options* options,
                     eqc_coloring** coloring_out) {
    return eqc_color_run(graph, r, options, coloring_out, nullptr, nullptr);
}

/* ----- generators ----- */

eqc_status eqc_generate(int vertex_count, unsigned long long seed, int min_delta,
                        eqc_class_kind kind, char** instance_text_out) {
    return barrier([&] {
        require(instance_text_out != nullptr, "instance_text_out is null");
        DrawnInstance inst = kind == EQC_IC_PLANAR
                                 ? gen_ic_planar(vertex_count, seed, min_delta)
                                 : gen_nic_planar(vertex_count, seed, min_delta);
        *instance_text_out = copy_out(format_instance(inst));
    });
}

/* ----- oracles ----- */

eqc_status eqc_oracle_equitable(const eqc_graph* graph, int r, int max_vertices,
                                int* feasible_out, char** witness_out) {
    return barrier([&] {
        require(graph != nullptr, "graph is null");
        require(feasible_out != nullptr, "feasible_out is null");
        int cap = max_vertices > 0 ? max_vertices : 16;
        OracleVerdict verdict = brute_force_equitable(graph->g, r, cap);
        *feasible_out = verdict.feasible ? 1 : 0;
        if (witness_out) {
            *witness_out =
                verdict.witness ? copy_out(format_coloring(*verdict.witness)) : nullptr;
        }
    });
}

eqc_status eqc_oracle_sweep(int n_max, int* clean_out, char** report_out) {
    return barrier([&] {
        require(clean_out != nullptr, "clean_out is null");
        SweepReport report = exhaustive_small_sweep(n_max);
        *clean_out = report.clean() ? 1 : 0;
        if (report_out) *report_out = copy_out(report.to_text());
    });
}

} // extern "C"
