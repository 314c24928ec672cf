#pragma once

#include "core/coloring.hpp"
#include "core/graph.hpp"

#include <optional>
#include <vector>

namespace equicolor {

struct VertexMove {
    int vertex = -1;
    int from_class = -1; // -1 means the vertex was held aside
    int to_class = -1;   // -1 means the vertex is being held aside
    bool operator==(const VertexMove&) const = default;
};

// Movability digraph of a coloring: an arc i -> j exists when some vertex of
// class i has no neighbour inside class j, i.e. it could move there without
// breaking properness. Witness lists are sorted by vertex id.
struct ClassDigraph {
    int num_classes = 0;
    int small_class = -1;
    std::vector<std::vector<std::vector<int>>> witnesses; // [from][to]

    bool has_arc(int from, int to) const {
        return from != to && !witnesses[from][to].empty();
    }
};

// Count of v's neighbours in each class of c. Unassigned neighbours are not
// counted anywhere.
std::vector<int> class_neighbor_counts(const Graph& h, const Coloring& c, int v);
int class_neighbor_count(const Graph& h, const Coloring& c, int v, int cls);

// barred_vertices (optional) are never used as witnesses, for callers that
// need part of the coloring frozen while probing movability.
ClassDigraph build_class_digraph(const Graph& h, const Coloring& c, int small_class,
                                 const std::vector<bool>* barred_vertices = nullptr);

struct AccessPartition {
    std::vector<bool> accessible;  // per class; small class always accessible
    std::vector<int> accessible_list; // ascending
    std::vector<int> blocked_list;    // ascending
    int count = 0;                    // = accessible_list.size()
};

// Classes with a directed path to the small class (which counts as
// accessible itself).
AccessPartition accessible_classes(const ClassDigraph& d);

// Accessible classes whose removal leaves every other accessible class with
// a path to the small class.
std::vector<int> terminals(const ClassDigraph& d, const AccessPartition& access);

// Strongly connected components of the sub-digraph induced by `subset`.
// Components are listed with sorted members, ordered by smallest member.
std::vector<std::vector<int>> strong_components(const ClassDigraph& d,
                                                const std::vector<int>& subset);

// Shortest arc path from one class to another, ties broken toward the
// lexicographically smallest class sequence. Classes in avoid (optional,
// per-class flags) are skipped; endpoints must not be avoided.
std::optional<std::vector<int>> find_class_path(const ClassDigraph& d, int from, int to,
                                                const std::vector<bool>* avoid = nullptr);

// Re-validates one witness per arc of the class path against the current
// coloring (lowest eligible id) and moves them all one step forward. The
// first class shrinks by one, the last grows by one, properness is
// preserved. Throws InvariantViolation if some arc has gone stale.
std::vector<VertexMove> switch_witnesses(const Graph& h, Coloring& c,
                                         const std::vector<int>& class_path,
                                         const std::vector<bool>* barred_vertices = nullptr);

} // namespace equicolor
