#include "core/digraph.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace equicolor {

std::vector<int> class_neighbor_counts(const Graph& h, const Coloring& c, int v) {
    std::vector<int> counts(static_cast<std::size_t>(c.num_classes()), 0);
    for (int w : h.neighbors(v)) {
        int cls = c.class_of(w);
        if (cls >= 0) ++counts[cls];
    }
    return counts;
}

int class_neighbor_count(const Graph& h, const Coloring& c, int v, int cls) {
    int count = 0;
    for (int w : h.neighbors(v)) {
        if (c.class_of(w) == cls) ++count;
    }
    return count;
}

ClassDigraph build_class_digraph(const Graph& h, const Coloring& c, int small_class,
                                 const std::vector<bool>* barred_vertices) {
    const int r = c.num_classes();
    if (small_class < 0 || small_class >= r) throw GuardError("small class out of range");
    ClassDigraph d;
    d.num_classes = r;
    d.small_class = small_class;
    d.witnesses.assign(static_cast<std::size_t>(r),
                       std::vector<std::vector<int>>(static_cast<std::size_t>(r)));
    for (int from = 0; from < r; ++from) {
        for (int v : c.members(from)) {
            if (barred_vertices && (*barred_vertices)[v]) continue;
            auto counts = class_neighbor_counts(h, c, v);
            for (int to = 0; to < r; ++to) {
                if (to != from && counts[to] == 0) d.witnesses[from][to].push_back(v);
            }
        }
    }
    return d;
}

AccessPartition accessible_classes(const ClassDigraph& d) {
    const int r = d.num_classes;
    AccessPartition access;
    access.accessible.assign(static_cast<std::size_t>(r), false);
    access.accessible[d.small_class] = true;
    std::queue<int> queue;
    queue.push(d.small_class);
    while (!queue.empty()) {
        int target = queue.front();
        queue.pop();
        for (int from = 0; from < r; ++from) {
            if (!access.accessible[from] && d.has_arc(from, target)) {
                access.accessible[from] = true;
                queue.push(from);
            }
        }
    }
    for (int cls = 0; cls < r; ++cls) {
        (access.accessible[cls] ? access.accessible_list : access.blocked_list).push_back(cls);
    }
    access.count = static_cast<int>(access.accessible_list.size());
    return access;
}

namespace {

bool reaches_small_without(const ClassDigraph& d, int start, int removed) {
    if (start == removed || d.small_class == removed) return false;
    std::vector<bool> seen(static_cast<std::size_t>(d.num_classes), false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        int cls = stack.back();
        stack.pop_back();
        if (cls == d.small_class) return true;
        for (int to = 0; to < d.num_classes; ++to) {
            if (to == removed || seen[to] || !d.has_arc(cls, to)) continue;
            seen[to] = true;
            stack.push_back(to);
        }
    }
    return false;
}

} // namespace

std::vector<int> terminals(const ClassDigraph& d, const AccessPartition& access) {
    std::vector<int> out;
    for (int t : access.accessible_list) {
        bool ok = true;
        for (int other : access.accessible_list) {
            if (other == t || other == d.small_class) continue;
            if (!reaches_small_without(d, other, t)) {
                ok = false;
                break;
            }
        }
        if (t == d.small_class) ok = true; // the small class is terminal by definition
        if (ok) out.push_back(t);
    }
    return out;
}

namespace {

struct TarjanState {
    const ClassDigraph& d;
    const std::vector<int>& nodes;
    std::vector<int> node_index; // position in `nodes`, -1 if outside subset
    std::vector<int> index, low, stack;
    std::vector<bool> on_stack;
    int counter = 0;
    std::vector<std::vector<int>> components;

    explicit TarjanState(const ClassDigraph& dd, const std::vector<int>& nn)
        : d(dd), nodes(nn), node_index(static_cast<std::size_t>(dd.num_classes), -1),
          index(nn.size(), -1), low(nn.size(), 0), on_stack(nn.size(), false) {
        for (std::size_t i = 0; i < nn.size(); ++i) node_index[nn[i]] = static_cast<int>(i);
    }

    void visit(int i) {
        index[i] = low[i] = counter++;
        stack.push_back(i);
        on_stack[i] = true;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (!d.has_arc(nodes[i], nodes[j])) continue;
            if (index[j] == -1) {
                visit(static_cast<int>(j));
                low[i] = std::min(low[i], low[j]);
            } else if (on_stack[j]) {
                low[i] = std::min(low[i], index[j]);
            }
        }
        if (low[i] == index[i]) {
            std::vector<int> component;
            while (true) {
                int j = stack.back();
                stack.pop_back();
                on_stack[j] = false;
                component.push_back(nodes[j]);
                if (j == i) break;
            }
            std::sort(component.begin(), component.end());
            components.push_back(std::move(component));
        }
    }
};

} // namespace

std::vector<std::vector<int>> strong_components(const ClassDigraph& d,
                                                const std::vector<int>& subset) {
    TarjanState state(d, subset);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (state.index[i] == -1) state.visit(static_cast<int>(i));
    }
    std::sort(state.components.begin(), state.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return state.components;
}

std::optional<std::vector<int>> find_class_path(const ClassDigraph& d, int from, int to,
                                                const std::vector<bool>* avoid) {
    if (avoid && ((*avoid)[from] || (*avoid)[to])) return std::nullopt;
    if (from == to) return std::vector<int>{from};
    std::vector<int> parent(static_cast<std::size_t>(d.num_classes), -1);
    std::queue<int> queue;
    parent[from] = from;
    queue.push(from);
    while (!queue.empty()) {
        int cls = queue.front();
        queue.pop();
        for (int next = 0; next < d.num_classes; ++next) {
            if (parent[next] != -1 || (avoid && (*avoid)[next]) || !d.has_arc(cls, next)) continue;
            parent[next] = cls;
            if (next == to) {
                std::vector<int> path{to};
                for (int at = to; at != from; at = parent[at]) path.push_back(parent[at]);
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push(next);
        }
    }
    return std::nullopt;
}

std::vector<VertexMove> switch_witnesses(const Graph& h, Coloring& c,
                                         const std::vector<int>& class_path,
                                         const std::vector<bool>* barred_vertices) {
    if (class_path.size() < 2) return {};
    // Pick every witness against the pre-switch coloring: the donors all sit
    // in distinct classes, so moving them simultaneously keeps each target
    // class free of its new member's neighbours.
    std::vector<VertexMove> moves;
    for (std::size_t i = 0; i + 1 < class_path.size(); ++i) {
        int from = class_path[i];
        int to = class_path[i + 1];
        int witness = -1;
        for (int v : c.members(from)) {
            if (barred_vertices && (*barred_vertices)[v]) continue;
            if (class_neighbor_count(h, c, v, to) == 0) {
                witness = v;
                break;
            }
        }
        if (witness == -1) {
            throw InvariantViolation("stale witness: no vertex of class " + std::to_string(from) +
                                     " can move to class " + std::to_string(to));
        }
        moves.push_back({witness, from, to});
    }
    for (const auto& mv : moves) c.move(mv.vertex, mv.to_class);
    return moves;
}

} // namespace equicolor
