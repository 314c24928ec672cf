#pragma once

#include "core/coloring.hpp"
#include "core/graph.hpp"
#include "core/trace.hpp"

#include <vector>

namespace equicolor {

struct PadResult {
    Graph padded;
    std::vector<int> pad_vertices; // ascending, the appended ids
};

// Appends r*ceil(n/r) - n pairwise-adjacent vertices with no edges into g so
// the padded order is divisible by r. In any proper coloring the pads occupy
// distinct classes, so stripping them changes each class size by at most one.
PadResult pad_for_divisibility(const Graph& g, int r);

struct ScheduledEdge {
    int x = -1; // endpoint that had minimum degree when the edge was peeled
    int y = -1;
    bool operator==(const ScheduledEdge& other) const { return x == other.x && y == other.y; }
};

// Reverse of repeated minimum-degree edge peeling (ties by lowest id; the
// peeled vertex keeps its remaining edges for later rounds). Inserting edges
// in the returned order keeps every arriving endpoint at its degeneracy-order
// residual degree.
std::vector<ScheduledEdge> insertion_schedule(const Graph& g);

struct EngineOptions {
    bool collect_trace = false;
    int max_repair_rounds = 0; // per insertion; 0 means r + 1
};

struct RunStats {
    bool strict = false; // invariant assertions were armed for this run
    int insertions = 0;
    int conflicts = 0;
    long long repair_moves = 0;
    long long profiles_checked = 0; // solo profiles computed by repair moves
    int max_access_seen = 0;
};

struct EngineResult {
    Coloring coloring;        // on the original vertices, verified equitable
    Coloring padded_coloring; // including pads, as the trace replays it
    std::vector<int> pad_vertices;
    std::vector<MoveRecord> trace; // empty unless options.collect_trace
    RunStats stats;
};

// Builds an equitable r-coloring of g by inserting edges along the insertion
// schedule and repairing conflicts with accessibility-increasing moves.
// Throws RepairExhausted when the move catalog runs dry (expected only for
// inputs outside the supported classes or below their degree threshold) and
// InvariantViolation when an armed assertion fails.
EngineResult equitable_color_run(const Graph& g, int r, const ClassParams& params,
                                 const EngineOptions& options = {});

Coloring equitable_color(const Graph& g, int r, const ClassParams& params);

} // namespace equicolor
