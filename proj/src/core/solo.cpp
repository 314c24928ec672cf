#include "core/solo.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <string>

namespace equicolor {

SoloProfile solo_profile(const Graph& h, const Coloring& c, const AccessPartition& access,
                         int u) {
    int home = c.class_of(u);
    if (home < 0) throw GuardError("solo profile of an unassigned vertex");
    if (!access.accessible[home]) throw GuardError("solo profile of a vertex in a blocked class");

    SoloProfile p;
    p.vertex = u;
    p.home_class = home;
    p.class_counts = class_neighbor_counts(h, c, u);
    for (int cls : access.blocked_list) {
        int count = p.class_counts[cls];
        if (count == 0)
            ++p.n0;
        else if (count == 1)
            ++p.n1;
        else
            ++p.n2;
    }
    for (int v : h.neighbors(u)) {
        int cls = c.class_of(v);
        if (cls < 0 || access.accessible[cls]) continue;
        if (class_neighbor_count(h, c, v, home) == 1) p.solo.push_back(v);
    }
    for (int v : p.solo) {
        for (int w : p.solo) {
            if (w != v && !h.has_edge(v, w)) {
                p.nice_solo.push_back(v);
                break;
            }
        }
    }
    return p;
}

std::optional<int> nice_partner(const Graph& h, const SoloProfile& profile, int w) {
    for (int z : profile.solo) {
        if (z != w && !h.has_edge(z, w)) return z;
    }
    return std::nullopt;
}

Rat vertex_weight(const Graph& h, const Coloring& c, const AccessPartition& access, int base,
                  const std::vector<bool>& marked_class, int u,
                  const std::vector<bool>* barred_vertices) {
    Rat total = make_rat(0);
    for (int v : h.neighbors(u)) {
        int cls = c.class_of(v);
        if (cls < 0 || access.accessible[cls]) continue;
        if (barred_vertices && (*barred_vertices)[v]) continue;
        int e = class_neighbor_count(h, c, v, base);
        if (e == 0) throw InvariantViolation("blocked-class vertex with no neighbor in the base class");
        total += (marked_class[cls] ? make_rat(1, 2) : make_rat(1)) / make_rat(e);
    }
    return total;
}

namespace {

std::vector<bool> marked_flags(const Coloring& c, const AccessPartition& access,
                               const std::vector<int>& marked_classes) {
    std::vector<bool> flags(static_cast<std::size_t>(c.num_classes()), false);
    for (int cls : marked_classes) {
        if (cls < 0 || cls >= c.num_classes()) throw GuardError("marked class out of range");
        if (access.accessible[cls]) throw GuardError("marked class must be blocked");
        flags[cls] = true;
    }
    return flags;
}

} // namespace

Rat class_weight_sum(const Graph& h, const Coloring& c, const AccessPartition& access, int base,
                     const std::vector<int>& marked_classes,
                     const std::vector<bool>* barred_vertices) {
    if (base < 0 || base >= c.num_classes()) throw GuardError("base class out of range");
    if (!access.accessible[base]) throw GuardError("base class must be accessible");
    auto marked = marked_flags(c, access, marked_classes);

    Rat sum = make_rat(0);
    for (int u : c.members(base)) sum += vertex_weight(h, c, access, base, marked, u, barred_vertices);

    long long blocked_count = 0, marked_count = 0;
    for (int cls : access.blocked_list) {
        for (int v : c.members(cls)) {
            if (barred_vertices && (*barred_vertices)[v]) continue;
            ++blocked_count;
            if (marked[cls]) ++marked_count;
        }
    }
    Rat expected = make_rat(blocked_count) - make_rat(marked_count, 2);
    if (sum != expected) {
        throw InvariantViolation("weight sum " + rat_to_string(sum) + " for class " +
                                 std::to_string(base) + " differs from expected " +
                                 rat_to_string(expected));
    }
    return sum;
}

std::optional<int> find_overloaded_vertex(const Graph& h, const Coloring& c,
                                          const AccessPartition& access, int base,
                                          const std::vector<int>& marked_classes, const Rat& threshold,
                                          const std::vector<int>& exclude,
                                          const std::vector<bool>* barred_vertices) {
    if (base < 0 || base >= c.num_classes()) throw GuardError("base class out of range");
    if (!access.accessible[base]) throw GuardError("base class must be accessible");
    auto marked = marked_flags(c, access, marked_classes);
    std::vector<bool> excluded(static_cast<std::size_t>(h.vertex_count()), false);
    for (int v : exclude) excluded[v] = true;

    std::optional<int> best;
    Rat best_weight = make_rat(0);
    for (int u : c.members(base)) {
        if (excluded[u]) continue;
        if (barred_vertices && (*barred_vertices)[u]) continue;
        Rat w = vertex_weight(h, c, access, base, marked, u, barred_vertices);
        if (w <= threshold) continue;
        if (!best || w > best_weight) {
            best = u;
            best_weight = w;
        }
    }
    return best;
}

} // namespace equicolor
