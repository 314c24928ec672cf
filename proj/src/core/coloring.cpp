#include "core/coloring.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <sstream>

namespace equicolor {

Coloring::Coloring(int n, int r) : r_(r) {
    if (n < 0) throw GuardError("vertex count must be nonnegative");
    if (r < 1) throw GuardError("class count must be at least 1");
    class_of_.assign(static_cast<std::size_t>(n), -1);
    members_.resize(static_cast<std::size_t>(r));
}

void Coloring::assign(int v, int c) {
    if (v < 0 || v >= vertex_count()) throw GuardError("vertex out of range");
    if (c < 0 || c >= r_) throw GuardError("class out of range");
    if (class_of_[v] != -1) throw GuardError("vertex already assigned");
    class_of_[v] = c;
    auto& list = members_[c];
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
    ++assigned_;
}

void Coloring::unassign(int v) {
    if (v < 0 || v >= vertex_count()) throw GuardError("vertex out of range");
    int c = class_of_[v];
    if (c == -1) throw GuardError("vertex not assigned");
    auto& list = members_[c];
    list.erase(std::lower_bound(list.begin(), list.end(), v));
    class_of_[v] = -1;
    --assigned_;
}

void Coloring::move(int v, int c) {
    unassign(v);
    assign(v, c);
}

std::vector<int> Coloring::sizes() const {
    std::vector<int> out(static_cast<std::size_t>(r_));
    for (int c = 0; c < r_; ++c) out[c] = class_size(c);
    return out;
}

Coloring balanced_partition(int n, int r) {
    Coloring c(n, r);
    for (int v = 0; v < n; ++v) c.assign(v, v % r);
    return c;
}

std::string VerifyReport::to_text() const {
    std::ostringstream out;
    out << "format: v1\n";
    out << "covered " << (covered ? 1 : 0) << "\n";
    out << "proper " << (proper ? 1 : 0) << "\n";
    out << "equitable " << (equitable ? 1 : 0) << "\n";
    out << "min_size " << min_size << "\n";
    out << "max_size " << max_size << "\n";
    for (const auto& [u, v] : conflict_edges) {
        out << "conflict " << u << " " << v << "\n";
    }
    return out.str();
}

VerifyReport verify_coloring(const Graph& g, const Coloring& c) {
    VerifyReport report;
    if (c.vertex_count() != g.vertex_count() || c.assigned_count() != g.vertex_count()) {
        return report; // vertex set mismatch: reported via covered=false
    }
    report.covered = true;
    report.proper = true;
    constexpr std::size_t kConflictCap = 16;
    for (const auto& [u, v] : g.edges()) {
        if (c.class_of(u) == c.class_of(v)) {
            report.proper = false;
            if (report.conflict_edges.size() < kConflictCap) {
                report.conflict_edges.emplace_back(u, v);
            }
        }
    }
    auto sizes = c.sizes();
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    report.min_size = *lo;
    report.max_size = *hi;
    report.equitable = (*hi - *lo) <= 1;
    return report;
}

Coloring parse_coloring(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int r = -1;
    std::vector<std::pair<int, int>> rows;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#') continue;
        if (first == "format:") {
            std::string version;
            fields >> version;
            if (version != "v1") throw ParseError("unsupported document version '" + version + "'");
            continue;
        }
        if (first == "r") {
            if (!(fields >> r) || r < 1) {
                throw ParseError("line " + std::to_string(line_no) + ": bad class count");
            }
            continue;
        }
        int v = 0;
        int cls = 0;
        try {
            v = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": expected vertex id");
        }
        if (!(fields >> cls)) {
            throw ParseError("line " + std::to_string(line_no) + ": missing class for vertex " + first);
        }
        rows.emplace_back(v, cls);
        max_vertex = std::max(max_vertex, v);
    }
    if (r == -1) throw ParseError("missing 'r' header in coloring document");
    Coloring c(max_vertex + 1, r);
    for (const auto& [v, cls] : rows) {
        if (cls < 0 || cls >= r) {
            throw ParseError("class " + std::to_string(cls) + " out of range for vertex " +
                             std::to_string(v));
        }
        if (c.class_of(v) != -1) throw ParseError("vertex " + std::to_string(v) + " listed twice");
        c.assign(v, cls);
    }
    for (int v = 0; v <= max_vertex; ++v) {
        if (c.class_of(v) == -1) {
            throw ParseError("vertex " + std::to_string(v) + " has no class");
        }
    }
    return c;
}

std::string format_coloring(const Coloring& c) {
    std::ostringstream out;
    out << "format: v1\nr " << c.num_classes() << "\n";
    for (int v = 0; v < c.vertex_count(); ++v) {
        out << v << " " << c.class_of(v) << "\n";
    }
    return out.str();
}

} // namespace equicolor
