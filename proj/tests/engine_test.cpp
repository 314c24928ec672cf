#include "core/engine.hpp"
#include "core/errors.hpp"
#include "core/generator.hpp"
#include "core/graph.hpp"
#include "core/oracle.hpp"
#include "core/util.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace equicolor;

namespace {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int left, int right) {
    Graph g(left + right);
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v) g.add_edge(u, left + v);
    return g;
}

} // namespace

TEST_CASE("padding for divisibility") {
    Graph g(12);
    PadResult same = pad_for_divisibility(g, 4);
    CHECK(same.pad_vertices.empty());
    CHECK(same.padded.vertex_count() == 12);

    Graph g10(10);
    g10.add_edge(0, 9);
    PadResult padded = pad_for_divisibility(g10, 4);
    CHECK(padded.pad_vertices == std::vector<int>{10, 11});
    CHECK(padded.padded.vertex_count() == 12);
    CHECK(padded.padded.edge_count() == 2); // original edge + one pad edge
    CHECK(padded.padded.has_edge(10, 11));

    // Pads form a clique with no edges into the original graph.
    PadResult five = pad_for_divisibility(Graph(7), 6);
    CHECK(five.pad_vertices.size() == 5);
    for (int p : five.pad_vertices) {
        for (int q : five.pad_vertices)
            if (p != q) CHECK(five.padded.has_edge(p, q));
        for (int v = 0; v < 7; ++v) CHECK_FALSE(five.padded.has_edge(p, v));
    }

    CHECK_THROWS_AS(pad_for_divisibility(Graph(3), 0), GuardError);
}

TEST_CASE("insertion schedule") {
    CHECK(insertion_schedule(Graph(4)).empty());

    Graph one(2);
    one.add_edge(0, 1);
    auto single = insertion_schedule(one);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == ScheduledEdge{0, 1}); // x is the lower id on ties

    // Replaying the schedule reconstructs the graph exactly.
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + static_cast<int>(rng.below(8));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.3)) g.add_edge(u, v);
        auto schedule = insertion_schedule(g);
        CHECK(schedule.size() == static_cast<std::size_t>(g.edge_count()));
        Graph rebuilt(n);
        for (const auto& e : schedule) rebuilt.add_edge(e.x, e.y);
        std::set<std::pair<int, int>> want(g.edges().begin(), g.edges().end());
        std::set<std::pair<int, int>> got(rebuilt.edges().begin(), rebuilt.edges().end());
        CHECK(want == got);
    }

    // The arriving endpoint of each edge stays within the degeneracy bound on
    // generated instances: at most 6 edges already touch x when xy arrives.
    DrawnInstance nic = gen_nic_planar(60, 3, 11);
    Graph partial(nic.graph.vertex_count());
    for (const auto& e : insertion_schedule(nic.graph)) {
        partial.add_edge(e.x, e.y);
        CHECK(partial.degree(e.x) <= 6);
    }
}

TEST_CASE("engine colors the calibration instances") {
    Graph k33 = complete_bipartite(3, 3);
    Coloring two = equitable_color(k33, 2, ClassParams::ic_planar());
    CHECK(verify_coloring(k33, two).valid());

    Graph edgeless(10);
    Coloring five = equitable_color(edgeless, 5, ClassParams::ic_planar());
    CHECK(verify_coloring(edgeless, five).valid());
    CHECK(five.sizes() == std::vector<int>{2, 2, 2, 2, 2});

    // Distinctly-colored endpoints never trigger repair.
    Graph single(2);
    single.add_edge(0, 1);
    EngineResult quiet = equitable_color_run(single, 2, ClassParams::ic_planar());
    CHECK(quiet.stats.conflicts == 0);
    CHECK(quiet.stats.insertions == 1);
}

TEST_CASE("engine resolves conflicts and the oracle confirms feasibility") {
    // Twelve vertices, r = 3: several edges join vertices that share a class
    // in the round-robin base coloring, so repairs must fire.
    Graph g = parse_graph("12\n0 3\n1 4\n2 5\n0 1\n1 2\n3 4\n4 5\n6 9\n7 8\n5 6\n8 11\n2 9\n");
    EngineOptions options;
    options.collect_trace = true;
    EngineResult run = equitable_color_run(g, 3, ClassParams::ic_planar(), options);
    CHECK(run.stats.conflicts > 0);
    CHECK(verify_coloring(g, run.coloring).valid());
    OracleVerdict verdict = brute_force_equitable(g, 3);
    CHECK(verdict.feasible);
}

TEST_CASE("engine succeeds on generated class instances with strict checks") {
    for (auto [kind, min_delta] : {std::pair{ClassKind::IcPlanar, 10},
                                   std::pair{ClassKind::NicPlanar, 11}}) {
        ClassParams params =
            kind == ClassKind::IcPlanar ? ClassParams::ic_planar() : ClassParams::nic_planar();
        DrawnInstance inst = kind == ClassKind::IcPlanar ? gen_ic_planar(70, 2, min_delta)
                                                         : gen_nic_planar(70, 2, min_delta);
        int delta = inst.graph.max_degree();
        REQUIRE(delta >= min_delta);
        for (int r : {delta, delta + 2}) {
            EngineResult run = equitable_color_run(inst.graph, r, params);
            CHECK(run.stats.strict); // the invariant assertions were armed
            CHECK(verify_coloring(inst.graph, run.coloring).valid());
        }
        // Below the threshold the guarantee is off, so strict stays dark.
        EngineResult loose = equitable_color_run(inst.graph, delta - 1, params);
        CHECK_FALSE(loose.stats.strict);
        CHECK(verify_coloring(inst.graph, loose.coloring).valid());
    }
}

TEST_CASE("infeasible inputs exhaust the repair catalog") {
    CHECK_THROWS_AS(equitable_color(complete_graph(4), 2, ClassParams::ic_planar()),
                    RepairExhausted);
    CHECK_THROWS_AS(equitable_color(complete_bipartite(3, 3), 3, ClassParams::ic_planar()),
                    RepairExhausted);
    Graph c5 = parse_graph("5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    CHECK_THROWS_AS(equitable_color(c5, 2, ClassParams::ic_planar()), RepairExhausted);

    CHECK_THROWS_AS(equitable_color(Graph(3), 0, ClassParams::ic_planar()), GuardError);

    // The error text preserves the collected trace for later replay.
    EngineOptions options;
    options.collect_trace = true;
    try {
        equitable_color_run(complete_graph(4), 2, ClassParams::ic_planar(), options);
        FAIL("expected RepairExhausted");
    } catch (const RepairExhausted& e) {
        CHECK(std::string(e.what()).find("trace:") != std::string::npos);
    }
}

TEST_CASE("padding strips back to a balanced coloring") {
    // n = 10, r = 4 forces two pads; stripping them must leave a spread <= 1.
    DrawnInstance inst = gen_ic_planar(46, 9, 10);
    int r = inst.graph.max_degree();
    EngineResult run = equitable_color_run(inst.graph, r, ClassParams::ic_planar());
    REQUIRE_FALSE(run.pad_vertices.empty());

    // Pads sit in pairwise distinct classes of the padded coloring.
    std::set<int> pad_classes;
    for (int p : run.pad_vertices) pad_classes.insert(run.padded_coloring.class_of(p));
    CHECK(pad_classes.size() == run.pad_vertices.size());

    auto sizes = run.coloring.sizes();
    CHECK(*std::max_element(sizes.begin(), sizes.end()) -
              *std::min_element(sizes.begin(), sizes.end()) <=
          1);
    CHECK(verify_coloring(inst.graph, run.coloring).valid());
}

TEST_CASE("engine runs are deterministic") {
    DrawnInstance inst = gen_ic_planar(52, 4, 10);
    EngineOptions options;
    options.collect_trace = true;
    EngineResult first = equitable_color_run(inst.graph, 10, ClassParams::ic_planar(), options);
    EngineResult second = equitable_color_run(inst.graph, 10, ClassParams::ic_planar(), options);
    CHECK(first.coloring == second.coloring);
    CHECK(first.padded_coloring == second.padded_coloring);
    CHECK(first.trace == second.trace);
    CHECK(first.stats.conflicts == second.stats.conflicts);
    CHECK(first.stats.repair_moves == second.stats.repair_moves);

    // A generous round cap does not change the outcome.
    EngineOptions capped = options;
    capped.max_repair_rounds = 50;
    EngineResult third = equitable_color_run(inst.graph, 10, ClassParams::ic_planar(), capped);
    CHECK(third.coloring == first.coloring);
}
