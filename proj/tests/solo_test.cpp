#include "core/coloring.hpp"
#include "core/digraph.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/solo.hpp"
#include "core/util.hpp"

#include <doctest.h>

#include <algorithm>

using namespace equicolor;

namespace {

AccessPartition only_small_accessible(int r, int small) {
    AccessPartition access;
    access.accessible.assign(static_cast<std::size_t>(r), false);
    access.accessible[static_cast<std::size_t>(small)] = true;
    access.accessible_list = {small};
    for (int j = 0; j < r; ++j)
        if (j != small) access.blocked_list.push_back(j);
    access.count = 1;
    return access;
}

// Classes V0 = {0,4}, V1 = {1,5}, V2 = {2,6}, V3 = {3,7}; V0 accessible.
struct SoloFixture {
    Graph h{8};
    Coloring c{8, 4};
    AccessPartition access = only_small_accessible(4, 0);

    SoloFixture() {
        for (int v = 0; v < 8; ++v) c.assign(v, v % 4);
        h.add_edge(0, 1); // solo: 1's only V0 neighbor is 0
        h.add_edge(0, 2); // solo likewise
    }
};

} // namespace

TEST_CASE("solo profile counts") {
    SoloFixture fx;

    SoloProfile p = solo_profile(fx.h, fx.c, fx.access, 0);
    CHECK(p.vertex == 0);
    CHECK(p.home_class == 0);
    CHECK(p.solo == std::vector<int>{1, 2});
    CHECK(p.nice_solo == std::vector<int>{1, 2}); // 1-2 not an edge
    CHECK(p.q() == 2);
    CHECK(p.q_nice() == 2);
    CHECK(p.class_counts == std::vector<int>{0, 1, 1, 0});
    CHECK(p.n0 == 1);
    CHECK(p.n1 == 2);
    CHECK(p.n2 == 0);
    CHECK(p.n0 + p.n1 + p.n2 == 3); // = number of blocked classes

    // Adding the edge between the two solos erases their niceness.
    fx.h.add_edge(1, 2);
    SoloProfile p2 = solo_profile(fx.h, fx.c, fx.access, 0);
    CHECK(p2.q() == 2);
    CHECK(p2.q_nice() == 0);

    // A vertex with no neighbors in blocked classes has an empty profile.
    SoloProfile empty = solo_profile(fx.h, fx.c, fx.access, 4);
    CHECK(empty.q() == 0);
    CHECK(empty.q_nice() == 0);
    CHECK(empty.n0 == 3);

    // Profiles are defined for accessible-class vertices only.
    CHECK_THROWS_AS(solo_profile(fx.h, fx.c, fx.access, 1), GuardError);
}

TEST_CASE("solo needs a unique edge into the home class") {
    SoloFixture fx;
    fx.h.add_edge(0, 3);
    fx.h.add_edge(3, 4); // 3 now has two V0 neighbors: not a solo of 0
    SoloProfile p = solo_profile(fx.h, fx.c, fx.access, 0);
    CHECK(p.solo == std::vector<int>{1, 2});
    CHECK(p.class_counts[3] == 1);
    CHECK(p.n1 == 3);

    // Swapping u out and any solo in keeps the home class independent.
    for (int v : p.solo) {
        Coloring swapped = fx.c;
        swapped.unassign(0);
        swapped.move(v, 0);
        bool independent = true;
        for (int a : swapped.members(0))
            for (int b : swapped.members(0))
                if (a < b && fx.h.has_edge(a, b)) independent = false;
        CHECK(independent);
    }
}

TEST_CASE("nice partner lookup") {
    SoloFixture fx;
    SoloProfile p = solo_profile(fx.h, fx.c, fx.access, 0);
    CHECK(nice_partner(fx.h, p, 1) == 2);
    CHECK(nice_partner(fx.h, p, 2) == 1);

    fx.h.add_edge(1, 2);
    SoloProfile p2 = solo_profile(fx.h, fx.c, fx.access, 0);
    CHECK_FALSE(nice_partner(fx.h, p2, 1).has_value());
}

namespace {

// SoloFixture plus one anchor edge from every other blocked vertex into V0,
// which makes the blocked classes genuinely blocked: each of their vertices
// touches V0, so no arc into V0 exists and the weight identity is exact.
struct WeightFixture : SoloFixture {
    WeightFixture() {
        for (int v : {3, 5, 6, 7}) h.add_edge(4, v);
        ClassDigraph d = build_class_digraph(h, c, 0);
        access = accessible_classes(d);
    }
};

} // namespace

TEST_CASE("weight sums satisfy the marked-class identity") {
    WeightFixture fx;
    REQUIRE(fx.access.accessible_list == std::vector<int>{0});
    // |B| = 6 blocked vertices; nobody marked.
    CHECK(class_weight_sum(fx.h, fx.c, fx.access, 0, {}) == make_rat(6));
    // Marking V3 (size 2) subtracts half its size.
    CHECK(class_weight_sum(fx.h, fx.c, fx.access, 0, {3}) == make_rat(5));
    // Marking everything blocked gives |B|/2.
    CHECK(class_weight_sum(fx.h, fx.c, fx.access, 0, {1, 2, 3}) == make_rat(3));

    // No blocked classes: the sum is empty.
    AccessPartition all_access;
    all_access.accessible.assign(4, true);
    all_access.accessible_list = {0, 1, 2, 3};
    all_access.count = 4;
    CHECK(class_weight_sum(fx.h, fx.c, all_access, 0, {}) == make_rat(0));
}

TEST_CASE("weight identity holds on honestly derived partitions") {
    // Random graphs colored greedily (properness only; the identity does not
    // need balance), with the digraph and access partition derived honestly.
    Rng rng(4242);
    int checked = 0;
    for (int trial = 0; trial < 2000 && checked < 60; ++trial) {
        int n = 8 + static_cast<int>(rng.below(5));
        int r = 2 + static_cast<int>(rng.below(3));
        Graph h(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.35)) h.add_edge(u, v);
        Coloring c(n, r);
        bool colored = true;
        for (int v = 0; v < n && colored; ++v) {
            int best = -1;
            for (int j = 0; j < r; ++j) {
                if (class_neighbor_count(h, c, v, j) > 0) continue;
                if (best == -1 || c.class_size(j) < c.class_size(best)) best = j;
            }
            if (best == -1)
                colored = false;
            else
                c.assign(v, best);
        }
        if (!colored) continue;
        ClassDigraph d = build_class_digraph(h, c, 0);
        AccessPartition access = accessible_classes(d);
        if (access.blocked_list.empty()) continue;
        ++checked;
        long long blocked_vertices = 0;
        for (int j : access.blocked_list) blocked_vertices += c.class_size(j);
        for (int base : access.accessible_list) {
            std::vector<int> marked;
            long long marked_vertices = 0;
            for (int j : access.blocked_list) {
                if (rng.chance(0.5)) {
                    marked.push_back(j);
                    marked_vertices += c.class_size(j);
                }
            }
            Rat expect = make_rat(blocked_vertices) - make_rat(marked_vertices, 2);
            CHECK(class_weight_sum(h, c, access, base, marked) == expect);
        }
    }
    CHECK(checked >= 30); // the loop found enough nontrivial configurations
}

TEST_CASE("overloaded vertex search") {
    WeightFixture fx;
    // Weights in V0: vertex 0 carries its two solos, vertex 4 its four anchors.
    CHECK(vertex_weight(fx.h, fx.c, fx.access, 0, std::vector<bool>(4, false), 0) ==
          make_rat(2));
    CHECK(vertex_weight(fx.h, fx.c, fx.access, 0, std::vector<bool>(4, false), 4) ==
          make_rat(4));

    // Strictly-above semantics: nothing exceeds the maximum itself.
    CHECK(find_overloaded_vertex(fx.h, fx.c, fx.access, 0, {}, make_rat(4), {}) ==
          std::nullopt);
    // The mean is 3, so pigeonhole guarantees a hit for thresholds below it.
    CHECK(find_overloaded_vertex(fx.h, fx.c, fx.access, 0, {}, make_rat(3), {}) == 4);
    // Excluding the heavy vertex exposes the next one over the threshold.
    CHECK(find_overloaded_vertex(fx.h, fx.c, fx.access, 0, {}, make_rat(1), {4}) == 0);
    CHECK(find_overloaded_vertex(fx.h, fx.c, fx.access, 0, {}, make_rat(2), {4}) ==
          std::nullopt);

    // Marking halves the contribution of marked-class neighbors.
    CHECK(vertex_weight(fx.h, fx.c, fx.access, 0, {false, true, false, false}, 0) ==
          make_rat(3, 2));
    CHECK(vertex_weight(fx.h, fx.c, fx.access, 0, {false, false, false, true}, 4) ==
          make_rat(3));

    // Barred vertices are skipped by the search.
    std::vector<bool> barred(8, false);
    barred[4] = true;
    CHECK(find_overloaded_vertex(fx.h, fx.c, fx.access, 0, {}, make_rat(3), {}, &barred) ==
          std::nullopt);

    // Equal weights tie toward the lowest id.
    Graph tie(4);
    tie.add_edge(0, 1);
    tie.add_edge(2, 3);
    Coloring tc(4, 2);
    tc.assign(0, 0);
    tc.assign(2, 0);
    tc.assign(1, 1);
    tc.assign(3, 1);
    AccessPartition taccess = accessible_classes(build_class_digraph(tie, tc, 0));
    REQUIRE(taccess.blocked_list == std::vector<int>{1});
    CHECK(find_overloaded_vertex(tie, tc, taccess, 0, {}, make_rat(1, 2), {}) == 0);
}
