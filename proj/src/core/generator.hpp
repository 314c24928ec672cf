#pragma once

#include "core/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equicolor {

// Clockwise neighbor order per vertex; empty when no embedding is known
// (instances read back from text carry none).
struct RotationSystem {
    std::vector<std::vector<int>> order;

    bool empty() const { return order.empty(); }
    bool operator==(const RotationSystem& other) const = default;
};

// One crossing: the diagonals a-c and b-d drawn inside the quadrilateral
// skeleton face with corner cycle a, b, c, d.
struct CrossingPair {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    bool operator==(const CrossingPair& other) const = default;
};

struct DrawnInstance {
    Graph graph;    // skeleton plus all crossing diagonals
    Graph skeleton; // plane subgraph
    RotationSystem rotation;
    std::vector<CrossingPair> crossings;
    std::uint64_t seed = 0;
    ClassKind kind = ClassKind::IcPlanar;
};

struct FaceTrace {
    std::vector<std::vector<int>> faces; // vertex cycles, one per face
};

// Walks the rotation system and returns every face as a vertex cycle. For a
// connected plane embedding, |V| - |E| + |faces| = 2.
FaceTrace trace_faces(const Graph& skeleton, const RotationSystem& rotation);

struct InstanceCheck {
    bool ok = true;
    std::vector<std::string> issues;

    std::string to_text() const;
};

// Re-derives every invariant from scratch: diagonal bookkeeping, quadrilateral
// sides, support overlap rule for the instance's kind, edge budget, degeneracy
// at most 6, and (when a rotation is present) the Euler face check plus
// face membership of every crossing quadrilateral.
InstanceCheck validate_drawn_instance(const DrawnInstance& inst);

// Connected plane grid over n vertices whose inner faces are quadrilaterals.
DrawnInstance gen_quadrangulated_skeleton(int n, std::uint64_t seed);

// Grid skeleton with a hub fanned over the first row (reaching max degree
// min_delta or more), then both diagonals inserted into a maximal set of
// quadrilateral faces in seeded random order, subject to the overlap rule:
// IC keeps crossing supports pairwise disjoint, NIC lets two supports share
// at most one vertex.
DrawnInstance gen_ic_planar(int n, std::uint64_t seed, int min_delta);
DrawnInstance gen_nic_planar(int n, std::uint64_t seed, int min_delta);

// Text round-trip: graph document plus a "crossings:" section of quad corner
// lines. Parsing recovers graph, crossings, and skeleton (no rotation).
std::string format_instance(const DrawnInstance& inst);
DrawnInstance parse_instance(const std::string& text, ClassKind kind);

} // namespace equicolor
