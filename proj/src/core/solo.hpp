#pragma once

#include "core/coloring.hpp"
#include "core/digraph.hpp"
#include "core/graph.hpp"
#include "core/rational.hpp"

#include <optional>
#include <vector>

namespace equicolor {

// Per-vertex data for a vertex u sitting in an accessible class V_i.
// A vertex v in a blocked class is a "solo" neighbor of u when u is v's only
// neighbor inside V_i; two solos of u that are non-adjacent to each other are
// "nice". Swapping u out and a solo v in keeps V_i independent.
struct SoloProfile {
    int vertex = -1;
    int home_class = -1;
    std::vector<int> solo;      // ascending vertex ids
    std::vector<int> nice_solo; // ascending, subset of solo
    std::vector<int> class_counts; // e_H(vertex, V_j) for every class j
    int n0 = 0; // blocked classes with no neighbor of vertex
    int n1 = 0; // blocked classes with exactly one neighbor
    int n2 = 0; // blocked classes with two or more neighbors

    int q() const { return static_cast<int>(solo.size()); }
    int q_nice() const { return static_cast<int>(nice_solo.size()); }
};

// Throws GuardError when u lies in a blocked class.
SoloProfile solo_profile(const Graph& h, const Coloring& c, const AccessPartition& access,
                         int u);

// Lowest-id z in profile.solo with z != w and zw not an edge, if any.
std::optional<int> nice_partner(const Graph& h, const SoloProfile& profile, int w);

// Weight of one vertex u of `base` under the marked-class weighting: each
// neighbor v in a blocked class contributes 1/e_H(v, base), halved when v's
// class is marked.
Rat vertex_weight(const Graph& h, const Coloring& c, const AccessPartition& access, int base,
                  const std::vector<bool>& marked_class, int u,
                  const std::vector<bool>* barred_vertices = nullptr);

// Sum of vertex_weight over the members of `base`. Self-checks the exact
// identity sum = |B| - |W|/2 (B = vertices of blocked classes, W = vertices of
// marked classes, barred vertices excluded from both sides) and throws
// InvariantViolation when it fails.
Rat class_weight_sum(const Graph& h, const Coloring& c, const AccessPartition& access, int base,
                     const std::vector<int>& marked_classes,
                     const std::vector<bool>* barred_vertices = nullptr);

// Maximum-weight vertex of `base` outside `exclude` with weight strictly above
// `threshold`; ties broken by lowest id. Returns nullopt when nothing exceeds
// the threshold.
std::optional<int> find_overloaded_vertex(const Graph& h, const Coloring& c,
                                          const AccessPartition& access, int base,
                                          const std::vector<int>& marked_classes, const Rat& threshold,
                                          const std::vector<int>& exclude,
                                          const std::vector<bool>* barred_vertices = nullptr);

} // namespace equicolor
