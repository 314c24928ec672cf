#ifndef EQUICOLOR_H
#define EQUICOLOR_H

/* C interface to the equitable-coloring library.
 *
 * Every function that can fail returns an eqc_status; on any status other
 * than EQC_OK, eqc_last_error() describes the failure for the calling
 * thread. Strings returned through char** parameters are heap-allocated and
 * must be released with eqc_string_free; handles with their matching _free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eqc_status {
    EQC_OK = 0,
    EQC_ERR_INVALID_ARGUMENT = 1,
    EQC_ERR_PARSE = 2,
    EQC_ERR_REPAIR_EXHAUSTED = 3,
    EQC_ERR_INVARIANT_VIOLATION = 4,
    EQC_ERR_INTERNAL = 5
} eqc_status;

typedef enum eqc_class_kind {
    EQC_IC_PLANAR = 0,
    EQC_NIC_PLANAR = 1
} eqc_class_kind;

typedef struct eqc_graph eqc_graph;
typedef struct eqc_coloring eqc_coloring;

/* Description of the most recent failure on this thread; empty on success. */
const char* eqc_last_error(void);

void eqc_string_free(char* text);

/* ----- graphs ----- */

eqc_status eqc_graph_create(int vertex_count, eqc_graph** graph_out);
eqc_status eqc_graph_add_edge(eqc_graph* graph, int u, int v);
eqc_status eqc_graph_parse(const char* text, eqc_graph** graph_out);
eqc_status eqc_graph_format(const eqc_graph* graph, char** text_out);
int eqc_graph_vertex_count(const eqc_graph* graph);
int eqc_graph_edge_count(const eqc_graph* graph);
int eqc_graph_max_degree(const eqc_graph* graph);
void eqc_graph_free(eqc_graph* graph);

/* ----- colorings ----- */

eqc_status eqc_coloring_parse(const char* text, eqc_coloring** coloring_out);
eqc_status eqc_coloring_format(const eqc_coloring* coloring, char** text_out);
int eqc_coloring_class_count(const eqc_coloring* coloring);
/* Class id, or -1 for an unassigned vertex or out-of-range id. */
int eqc_coloring_class_of(const eqc_coloring* coloring, int vertex);
void eqc_coloring_free(eqc_coloring* coloring);

/* Checks coverage, properness, and class-size balance. valid_out gets 1/0;
 * report_out (optional) gets a human-readable summary. */
eqc_status eqc_verify(const eqc_graph* graph, const eqc_coloring* coloring, int* valid_out,
                      char** report_out);

/* ----- the coloring engine ----- */

typedef struct eqc_color_options {
    eqc_class_kind kind;
    int collect_trace;     /* nonzero to record the repair trace */
    int max_repair_rounds; /* 0 for the default bound */
} eqc_color_options;

typedef struct eqc_run_stats {
    int strict; /* nonzero when invariant assertions were armed */
    int insertions;
    int conflicts;
    long long repair_moves;
    long long profiles_checked;
    int max_access_seen;
} eqc_run_stats;

/* Computes an equitable r-coloring of the graph. trace_out (optional)
 * receives the line-delimited repair trace when options->collect_trace is
 * set; stats_out (optional) receives run counters. Infeasible or stuck
 * instances yield EQC_ERR_REPAIR_EXHAUSTED; EQC_ERR_INVARIANT_VIOLATION
 * signals a broken internal guarantee and the run's diagnostics should be
 * preserved. */
eqc_status eqc_color_run(const eqc_graph* graph, int r, const eqc_color_options* options,
                         eqc_coloring** coloring_out, char** trace_out,
                         eqc_run_stats* stats_out);

eqc_status eqc_color(const eqc_graph* graph, int r, const eqc_color_options* options,
                     eqc_coloring** coloring_out);

/* ----- generators ----- */

/* Deterministic crossing-certified instance; the text document holds the
 * graph plus its crossing section and parses back via eqc_graph_parse. */
eqc_status eqc_generate(int vertex_count, unsigned long long seed, int min_delta,
                        eqc_class_kind kind, char** instance_text_out);

/* ----- oracles ----- */

/* Exhaustive equitable-coloring feasibility. max_vertices caps the search
 * (0 for the default guard of 16). feasible_out gets 1/0; witness_out
 * (optional) gets a coloring document when feasible. */
eqc_status eqc_oracle_equitable(const eqc_graph* graph, int r, int max_vertices,
                                int* feasible_out, char** witness_out);

/* Engine-versus-oracle comparison over every graph with at most n_max
 * vertices (n_max <= 8). clean_out gets 1 when there are no divergences;
 * report_out (optional) gets the full report. */
eqc_status eqc_oracle_sweep(int n_max, int* clean_out, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* EQUICOLOR_H */
