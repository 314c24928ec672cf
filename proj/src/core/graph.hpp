#pragma once

#include "core/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace equicolor {

// Simple undirected graph over vertex ids 0..n-1. Neighbour lists stay
// sorted so membership tests are logarithmic and iteration order is fixed.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    // Pairs normalised to u < v, in insertion order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

enum class ClassKind { IcPlanar, NicPlanar, DensityPair };

// Density profile of a supported graph class: m1 bounds e(G)/1 against
// m1*n for arbitrary members, m2 likewise for bipartite members, and
// delta_threshold is the smallest maximum degree for which the coloring
// guarantee is claimed.
struct ClassParams {
    ClassKind kind = ClassKind::DensityPair;
    Rat m1;
    Rat m2;
    int delta_threshold = 0;

    static ClassParams ic_planar();
    static ClassParams nic_planar();
    static ClassParams density_pair(const Rat& m1, const Rat& m2, int delta_threshold);

    void validate() const; // throws GuardError unless m2 <= m1 <= 1.8*m2
};

struct BudgetReport {
    bool pass = false;
    bool bipartite_mode = false;
    int vertices = 0;
    int edges = 0;
    Rat budget;
    Rat slack; // budget - edges

    std::string to_text() const;
};

// Necessary edge-count condition for membership in the class described by
// params. bipartite_mode selects the tighter bound for bipartite members and
// requires the input to actually be bipartite.
BudgetReport check_edge_budget(const Graph& g, const ClassParams& params, bool bipartite_mode);

bool is_bipartite(const Graph& g);

struct DegeneracyResult {
    std::vector<int> order; // removal order, min-degree first, ties by lowest id
    int degeneracy = 0;
};

DegeneracyResult degeneracy_order(const Graph& g);

enum class DensestMode { Exhaustive, ExactFlow };

// max over nonempty S of e(G[S]) / |S|. Exhaustive mode enumerates subsets
// (guarded to n <= 20); ExactFlow runs an exact parametric min-cut search and
// has no size guard.
Rat densest_subgraph_density(const Graph& g, DensestMode mode);

// Edge-list document: optional "format: v1" line, a vertex-count line, then
// one "u v" line per edge. Parsing stops at an optional "crossings:" section
// so drawn-instance documents load as plain graphs too.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

} // namespace equicolor
