#pragma once

#include "core/coloring.hpp"
#include "core/digraph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace equicolor {

enum class MoveKind {
    Pad,                 // pad vertex placed during setup
    Eject,               // conflicting endpoint pulled out of its class
    Finish,              // ejected vertex re-seated (with any helper moves)
    RelabelSmall,        // small-class normalisation before other repairs
    SoloPromote,         // solo neighbor promoted, donor drops to the small class
    PairedSoloSwap,      // subject/nice-solo exchange between two classes
    ComponentRelocate,   // relocation through the blocked strong component
    CrossMove,           // move across the accessible band plus witness drop
    CompositeDoubleSwap, // four-vertex exchange used when only the small class is accessible
    WitnessSwitch,       // fallback: witness-path switch or solo swap found by search
};

const char* move_kind_name(MoveKind kind);
MoveKind parse_move_kind(std::string_view name); // throws ParseError

struct MoveRecord {
    int step = 0;
    MoveKind kind = MoveKind::WitnessSwitch;
    std::vector<VertexMove> moves; // applied in order; -1 marks the held-aside slot
    int a_before = 0;
    int a_after = 0;
    std::string justification;

    bool operator==(const MoveRecord& other) const;
};

std::string format_move_record(const MoveRecord& record); // single line, no newline
MoveRecord parse_move_record(const std::string& line);    // throws ParseError

std::string format_trace(const std::vector<MoveRecord>& records);
std::vector<MoveRecord> parse_trace(const std::string& text);

// Rebuilds the final coloring by replaying `records` over the canonical base:
// every vertex that never appears in a Pad record starts in class (id mod r);
// pad vertices start unassigned and enter via their Pad record.
Coloring replay_trace(const std::vector<MoveRecord>& records, int total_vertices, int r);

} // namespace equicolor
