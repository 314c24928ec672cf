#pragma once

#include "core/graph.hpp"

#include <string>
#include <vector>

namespace equicolor {

// Partition of vertices into r classes. Vertices may be temporarily
// unassigned (class -1) while the repair engine holds one aside; class
// member lists stay sorted by vertex id.
class Coloring {
public:
    Coloring() = default;
    Coloring(int n, int r);

    int vertex_count() const { return static_cast<int>(class_of_.size()); }
    int num_classes() const { return r_; }

    int class_of(int v) const { return class_of_[v]; }
    int class_size(int c) const { return static_cast<int>(members_[c].size()); }
    const std::vector<int>& members(int c) const { return members_[c]; }

    void assign(int v, int c);
    void unassign(int v);
    void move(int v, int c);

    int assigned_count() const { return assigned_; }
    std::vector<int> sizes() const;

    bool operator==(const Coloring& other) const {
        return r_ == other.r_ && class_of_ == other.class_of_;
    }

private:
    int r_ = 0;
    int assigned_ = 0;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> members_;
};

// Round-robin assignment by vertex id: class of v is v mod r. Sizes differ by
// at most one and consecutive ids land in distinct classes.
Coloring balanced_partition(int n, int r);

struct VerifyReport {
    bool covered = false;   // every vertex of g carries a class
    bool proper = false;
    bool equitable = false; // class sizes differ by at most 1
    int min_size = 0;
    int max_size = 0;
    std::vector<std::pair<int, int>> conflict_edges; // capped sample
    std::string to_text() const;

    bool valid() const { return covered && proper && equitable; }
};

VerifyReport verify_coloring(const Graph& g, const Coloring& c);

// Document form: "format: v1", an "r <count>" line, then "vertex class" rows.
Coloring parse_coloring(const std::string& text);
std::string format_coloring(const Coloring& c);

} // namespace equicolor
