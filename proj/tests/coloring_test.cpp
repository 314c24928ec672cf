#include "core/coloring.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"

#include <doctest.h>

using namespace equicolor;

namespace {

Graph complete_bipartite(int left, int right) {
    Graph g(left + right);
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v) g.add_edge(u, left + v);
    return g;
}

} // namespace

TEST_CASE("balanced partition sizes") {
    CHECK(balanced_partition(6, 3).sizes() == std::vector<int>{2, 2, 2});
    CHECK(balanced_partition(7, 3).sizes() == std::vector<int>{3, 2, 2});
    CHECK(balanced_partition(3, 5).sizes() == std::vector<int>{1, 1, 1, 0, 0});

    // Round robin: consecutive ids land in distinct classes, sizes differ <= 1.
    for (int n = 0; n <= 12; ++n) {
        for (int r = 1; r <= 6; ++r) {
            Coloring c = balanced_partition(n, r);
            auto report = verify_coloring(Graph(n), c);
            CHECK(report.valid()); // edgeless graphs are always proper
            for (int v = 0; v + 1 < n; ++v)
                if (r > 1) CHECK(c.class_of(v) != c.class_of(v + 1));
        }
    }
}

TEST_CASE("verify coloring verdicts") {
    Graph k33 = complete_bipartite(3, 3);

    Coloring bipartition(6, 2);
    for (int v = 0; v < 6; ++v) bipartition.assign(v, v < 3 ? 0 : 1);
    auto good = verify_coloring(k33, bipartition);
    CHECK(good.covered);
    CHECK(good.proper);
    CHECK(good.equitable);
    CHECK(good.valid());

    // A proper 3-class coloring of K_{3,3} keeps classes inside one side, so
    // some class has size 1 and some size 3: proper but never equitable.
    Coloring lopsided(6, 3);
    lopsided.assign(0, 0);
    lopsided.assign(1, 0);
    lopsided.assign(2, 1);
    for (int v = 3; v < 6; ++v) lopsided.assign(v, 2);
    auto uneven = verify_coloring(k33, lopsided);
    CHECK(uneven.proper);
    CHECK_FALSE(uneven.equitable);
    CHECK(uneven.min_size == 1);
    CHECK(uneven.max_size == 3);

    Graph edge(2);
    edge.add_edge(0, 1);
    Coloring mono(2, 1);
    mono.assign(0, 0);
    mono.assign(1, 0);
    auto bad = verify_coloring(edge, mono);
    CHECK_FALSE(bad.proper);
    REQUIRE(bad.conflict_edges.size() == 1);
    CHECK(bad.conflict_edges[0] == std::pair<int, int>{0, 1});

    // Uncovered vertex is reported as such.
    Coloring partial(2, 2);
    partial.assign(0, 0);
    CHECK_FALSE(verify_coloring(edge, partial).covered);
}

TEST_CASE("moves change exactly two class sizes by one") {
    Coloring c = balanced_partition(9, 3);
    auto before = c.sizes();
    c.move(4, 2); // 4 lives in class 1
    auto after = c.sizes();
    CHECK(after[0] == before[0]);
    CHECK(after[1] == before[1] - 1);
    CHECK(after[2] == before[2] + 1);
    CHECK(c.class_of(4) == 2);

    c.unassign(4);
    CHECK(c.class_of(4) == -1);
    CHECK(c.assigned_count() == 8);
    c.assign(4, 1);
    CHECK(c.sizes() == before);

    // Member lists stay sorted through mutation.
    c.move(1, 2);
    c.move(7, 2);
    const auto& members = c.members(2);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) CHECK(members[i] < members[i + 1]);
}

TEST_CASE("coloring document round trip") {
    Coloring c = balanced_partition(7, 3);
    Coloring back = parse_coloring(format_coloring(c));
    CHECK(back == c);
    CHECK(back.num_classes() == 3);

    CHECK_THROWS_AS(parse_coloring(""), ParseError);
    CHECK_THROWS_AS(parse_coloring("format: v1\n0 0\n"), ParseError); // missing r line
    CHECK_THROWS_AS(parse_coloring("format: v1\nr 2\n0 5\n"), ParseError); // class out of range
    CHECK_THROWS_AS(parse_coloring("format: v1\nr 2\n0 zero\n"), ParseError);

    // Documents describe complete colorings only; a hole is a parse error.
    Coloring holey(3, 2);
    holey.assign(0, 0);
    holey.assign(2, 1);
    CHECK_THROWS_AS(parse_coloring(format_coloring(holey)), ParseError);
}
