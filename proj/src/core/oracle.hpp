#pragma once

#include "core/coloring.hpp"
#include "core/graph.hpp"
#include "core/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace equicolor {

struct OracleVerdict {
    bool feasible = false;
    std::optional<Coloring> witness; // set iff feasible; passes verify_coloring
    long long nodes_explored = 0;
};

// Exact equitable r-colorability by backtracking with class-size caps and
// first-use label canonicalisation. Guarded to small graphs; raise max_n to
// override deliberately.
OracleVerdict brute_force_equitable(const Graph& g, int r, int max_n = 16);

// Max over vertex subsets S and bipartitions of S of (cut edges)/|S|.
Rat brute_force_bipartite_density(const Graph& g, int max_n = 16);

struct SweepCase {
    int n = 0;
    int r = 0;
    std::vector<std::pair<int, int>> edges;
    bool engine_success = false;
    bool oracle_feasible = false;
};

struct SweepReport {
    long long graphs_examined = 0;       // labelled graphs covered
    long long representatives = 0;       // one per isomorphism class actually run
    long long runs = 0;                  // (representative, r) engine executions
    long long engine_successes = 0;
    long long oracle_confirmed = 0;
    std::vector<SweepCase> hard_divergences;   // engine success, oracle infeasible
    std::vector<SweepCase> missed_feasible;    // engine failure, oracle feasible
    bool clean() const { return hard_divergences.empty() && missed_feasible.empty(); }
    std::string to_text() const;
};

// Runs the engine against every graph on up to n_max vertices (one
// representative per isomorphism class; colorability is invariant under
// relabelling) for every r in [1, min(n, r_cap)] (r_cap = 0 means r up to n),
// and cross-checks against brute_force_equitable.
SweepReport exhaustive_small_sweep(int n_max, const ClassParams& params = ClassParams::ic_planar(),
                                   int r_cap = 0);

} // namespace equicolor
