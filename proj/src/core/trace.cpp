#include "core/trace.hpp"

#include "core/errors.hpp"

#include <sstream>

namespace equicolor {

namespace {

struct KindName {
    MoveKind kind;
    const char* name;
};

constexpr KindName kKindNames[] = {
    {MoveKind::Pad, "pad"},
    {MoveKind::Eject, "eject"},
    {MoveKind::Finish, "finish"},
    {MoveKind::RelabelSmall, "relabel_small"},
    {MoveKind::SoloPromote, "solo_promote"},
    {MoveKind::PairedSoloSwap, "paired_solo_swap"},
    {MoveKind::ComponentRelocate, "component_relocate"},
    {MoveKind::CrossMove, "cross_move"},
    {MoveKind::CompositeDoubleSwap, "composite_double_swap"},
    {MoveKind::WitnessSwitch, "witness_switch"},
};

} // namespace

const char* move_kind_name(MoveKind kind) {
    for (const auto& entry : kKindNames) {
        if (entry.kind == kind) return entry.name;
    }
    throw GuardError("unknown move kind");
}

MoveKind parse_move_kind(std::string_view name) {
    for (const auto& entry : kKindNames) {
        if (entry.name == name) return entry.kind;
    }
    throw ParseError("unknown move kind '" + std::string(name) + "'");
}

bool MoveRecord::operator==(const MoveRecord& other) const {
    return step == other.step && kind == other.kind && moves == other.moves &&
           a_before == other.a_before && a_after == other.a_after &&
           justification == other.justification;
}

std::string format_move_record(const MoveRecord& record) {
    std::ostringstream out;
    out << "step=" << record.step << " kind=" << move_kind_name(record.kind) << " a_before="
        << record.a_before << " a_after=" << record.a_after << " moved=";
    if (record.moves.empty()) out << "none";
    for (std::size_t i = 0; i < record.moves.size(); ++i) {
        if (i > 0) out << ',';
        const auto& mv = record.moves[i];
        out << mv.vertex << ':' << mv.from_class << '>' << mv.to_class;
    }
    out << " justification=" << record.justification;
    return out.str();
}

namespace {

int parse_int_field(const std::string& token, const std::string& line) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw ParseError("bad integer '" + token + "' in trace line: " + line);
    }
}

} // namespace

MoveRecord parse_move_record(const std::string& line) {
    MoveRecord record;
    std::istringstream in(line);
    std::string token;
    bool saw_step = false, saw_kind = false, saw_before = false, saw_after = false,
         saw_moved = false;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value in trace line: " + line);
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        if (key == "step") {
            record.step = parse_int_field(value, line);
            saw_step = true;
        } else if (key == "kind") {
            record.kind = parse_move_kind(value);
            saw_kind = true;
        } else if (key == "a_before") {
            record.a_before = parse_int_field(value, line);
            saw_before = true;
        } else if (key == "a_after") {
            record.a_after = parse_int_field(value, line);
            saw_after = true;
        } else if (key == "moved") {
            saw_moved = true;
            if (value == "none") continue;
            std::istringstream items(value);
            std::string item;
            while (std::getline(items, item, ',')) {
                auto colon = item.find(':');
                auto arrow = item.find('>', colon == std::string::npos ? 0 : colon + 1);
                if (colon == std::string::npos || arrow == std::string::npos)
                    throw ParseError("bad move entry '" + item + "' in trace line: " + line);
                VertexMove mv;
                mv.vertex = parse_int_field(item.substr(0, colon), line);
                mv.from_class = parse_int_field(item.substr(colon + 1, arrow - colon - 1), line);
                mv.to_class = parse_int_field(item.substr(arrow + 1), line);
                record.moves.push_back(mv);
            }
        } else if (key == "justification") {
            record.justification = value;
            std::string rest;
            if (std::getline(in, rest) && !rest.empty()) record.justification += rest;
            break;
        } else {
            throw ParseError("unknown trace field '" + key + "' in line: " + line);
        }
    }
    if (!saw_step || !saw_kind || !saw_before || !saw_after || !saw_moved)
        throw ParseError("incomplete trace line: " + line);
    return record;
}

std::string format_trace(const std::vector<MoveRecord>& records) {
    std::string out = "format: v1\n";
    for (const auto& record : records) {
        out += format_move_record(record);
        out += '\n';
    }
    return out;
}

std::vector<MoveRecord> parse_trace(const std::string& text) {
    std::vector<MoveRecord> records;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "format: v1") continue;
        records.push_back(parse_move_record(line));
    }
    return records;
}

Coloring replay_trace(const std::vector<MoveRecord>& records, int total_vertices, int r) {
    std::vector<bool> is_pad(static_cast<std::size_t>(total_vertices), false);
    for (const auto& record : records) {
        if (record.kind != MoveKind::Pad) continue;
        for (const auto& mv : record.moves) {
            if (mv.vertex < 0 || mv.vertex >= total_vertices)
                throw GuardError("pad vertex out of range in trace");
            is_pad[mv.vertex] = true;
        }
    }
    Coloring c(total_vertices, r);
    for (int v = 0; v < total_vertices; ++v) {
        if (!is_pad[v]) c.assign(v, v % r);
    }
    for (const auto& record : records) {
        for (const auto& mv : record.moves) {
            if (mv.to_class < 0) {
                c.unassign(mv.vertex);
            } else if (mv.from_class < 0) {
                c.assign(mv.vertex, mv.to_class);
            } else {
                c.move(mv.vertex, mv.to_class);
            }
        }
    }
    return c;
}

} // namespace equicolor
