#include "equicolor/equicolor.h"

#include <doctest.h>

#include <string>

namespace {

struct Cleanup {
    eqc_graph* g = nullptr;
    eqc_coloring* c = nullptr;
    char* text = nullptr;
    ~Cleanup() {
        eqc_graph_free(g);
        eqc_coloring_free(c);
        eqc_string_free(text);
    }
};

const char* k33_doc = "format: v1\n6\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n";

} // namespace

TEST_CASE("c api graph lifecycle") {
    Cleanup h;
    REQUIRE(eqc_graph_create(4, &h.g) == EQC_OK);
    CHECK(eqc_graph_add_edge(h.g, 0, 1) == EQC_OK);
    CHECK(eqc_graph_add_edge(h.g, 2, 3) == EQC_OK);
    CHECK(eqc_graph_vertex_count(h.g) == 4);
    CHECK(eqc_graph_edge_count(h.g) == 2);
    CHECK(eqc_graph_max_degree(h.g) == 1);

    CHECK(eqc_graph_add_edge(h.g, 0, 0) == EQC_ERR_INVALID_ARGUMENT);
    CHECK(std::string(eqc_last_error()).find("self loop") != std::string::npos);

    REQUIRE(eqc_graph_format(h.g, &h.text) == EQC_OK);
    eqc_graph* back = nullptr;
    REQUIRE(eqc_graph_parse(h.text, &back) == EQC_OK);
    CHECK(eqc_graph_edge_count(back) == 2);
    eqc_graph_free(back);

    CHECK(eqc_graph_parse("not a graph", &back) == EQC_ERR_PARSE);
    CHECK(eqc_graph_parse(nullptr, &back) == EQC_ERR_INVALID_ARGUMENT);
    CHECK(eqc_graph_create(-1, &back) == EQC_ERR_INVALID_ARGUMENT);
    CHECK(eqc_graph_vertex_count(nullptr) == -1);
}

TEST_CASE("c api coloring and verification") {
    Cleanup h;
    REQUIRE(eqc_graph_parse(k33_doc, &h.g) == EQC_OK);

    eqc_color_options options{EQC_IC_PLANAR, 0, 0};
    REQUIRE(eqc_color(h.g, 2, &options, &h.c) == EQC_OK);
    CHECK(eqc_coloring_class_count(h.c) == 2);

    int valid = 0;
    REQUIRE(eqc_verify(h.g, h.c, &valid, &h.text) == EQC_OK);
    CHECK(valid == 1);
    CHECK(std::string(h.text).find("proper 1") != std::string::npos);

    // Class lookups are total: out-of-range ids map to -1.
    CHECK(eqc_coloring_class_of(h.c, 0) >= 0);
    CHECK(eqc_coloring_class_of(h.c, 99) == -1);
    CHECK(eqc_coloring_class_of(h.c, -5) == -1);

    // Round trip through the document form.
    char* doc = nullptr;
    REQUIRE(eqc_coloring_format(h.c, &doc) == EQC_OK);
    eqc_coloring* parsed = nullptr;
    REQUIRE(eqc_coloring_parse(doc, &parsed) == EQC_OK);
    int valid2 = 0;
    CHECK(eqc_verify(h.g, parsed, &valid2, nullptr) == EQC_OK);
    CHECK(valid2 == 1);
    eqc_coloring_free(parsed);
    eqc_string_free(doc);

    // Mismatched sizes are rejected up front.
    eqc_graph* small = nullptr;
    REQUIRE(eqc_graph_create(2, &small) == EQC_OK);
    CHECK(eqc_verify(small, h.c, &valid, nullptr) == EQC_ERR_INVALID_ARGUMENT);
    eqc_graph_free(small);
}

TEST_CASE("c api coloring failures map to statuses") {
    Cleanup h;
    REQUIRE(eqc_graph_parse("format: v1\n4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", &h.g) == EQC_OK);

    eqc_color_options options{EQC_IC_PLANAR, 0, 0};
    CHECK(eqc_color(h.g, 2, &options, &h.c) == EQC_ERR_REPAIR_EXHAUSTED);
    CHECK(h.c == nullptr);
    CHECK(std::string(eqc_last_error()).find("repair") != std::string::npos);

    CHECK(eqc_color(h.g, 0, &options, &h.c) == EQC_ERR_INVALID_ARGUMENT);

    // Requesting a trace without enabling collection is a contract error.
    char* trace = nullptr;
    CHECK(eqc_color_run(h.g, 4, &options, &h.c, &trace, nullptr) ==
          EQC_ERR_INVALID_ARGUMENT);

    // With collection enabled the trace and stats come back filled.
    eqc_color_options tracing{EQC_IC_PLANAR, 1, 0};
    eqc_run_stats stats{};
    REQUIRE(eqc_color_run(h.g, 4, &tracing, &h.c, &trace, &stats) == EQC_OK);
    REQUIRE(trace != nullptr);
    CHECK(std::string(trace).rfind("format: v1\n", 0) == 0);
    CHECK(stats.insertions == 6);
    CHECK(stats.strict == 0);
    eqc_string_free(trace);
}

TEST_CASE("c api generator and oracle") {
    Cleanup h;
    REQUIRE(eqc_generate(40, 3, 10, EQC_IC_PLANAR, &h.text) == EQC_OK);
    REQUIRE(eqc_graph_parse(h.text, &h.g) == EQC_OK);
    CHECK(eqc_graph_max_degree(h.g) >= 10);

    CHECK(eqc_generate(4, 1, 10, EQC_IC_PLANAR, &h.text) == EQC_ERR_INVALID_ARGUMENT);

    eqc_graph* k33 = nullptr;
    REQUIRE(eqc_graph_parse(k33_doc, &k33) == EQC_OK);
    int feasible = -1;
    char* witness = nullptr;
    REQUIRE(eqc_oracle_equitable(k33, 2, 0, &feasible, &witness) == EQC_OK);
    CHECK(feasible == 1);
    REQUIRE(witness != nullptr);
    eqc_coloring* parsed = nullptr;
    REQUIRE(eqc_coloring_parse(witness, &parsed) == EQC_OK);
    int valid = 0;
    CHECK(eqc_verify(k33, parsed, &valid, nullptr) == EQC_OK);
    CHECK(valid == 1);
    eqc_coloring_free(parsed);
    eqc_string_free(witness);
    witness = nullptr;

    REQUIRE(eqc_oracle_equitable(k33, 3, 0, &feasible, &witness) == EQC_OK);
    CHECK(feasible == 0);
    CHECK(witness == nullptr);
    eqc_graph_free(k33);

    int clean = -1;
    char* report = nullptr;
    REQUIRE(eqc_oracle_sweep(3, &clean, &report) == EQC_OK);
    CHECK(clean == 1);
    REQUIRE(report != nullptr);
    CHECK(std::string(report).find("divergences") != std::string::npos);
    eqc_string_free(report);
}
