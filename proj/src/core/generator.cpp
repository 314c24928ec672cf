#include "core/generator.hpp"

#include "core/errors.hpp"
#include "core/util.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace equicolor {

std::string InstanceCheck::to_text() const {
    if (ok) return "instance valid";
    std::string out = "instance invalid:";
    for (const auto& issue : issues) out += "\n  " + issue;
    return out;
}

FaceTrace trace_faces(const Graph& skeleton, const RotationSystem& rotation) {
    const int n = skeleton.vertex_count();
    if (static_cast<int>(rotation.order.size()) != n) {
        throw GuardError("rotation system size does not match the skeleton");
    }
    // Position of each neighbor inside a vertex's cyclic order.
    std::vector<std::map<int, int>> position(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& order = rotation.order[v];
        for (std::size_t i = 0; i < order.size(); ++i) {
            position[v][order[i]] = static_cast<int>(i);
        }
    }
    FaceTrace result;
    std::set<std::pair<int, int>> visited; // directed edges already on a face
    for (int u = 0; u < n; ++u) {
        for (int v : rotation.order[u]) {
            if (visited.count({u, v})) continue;
            std::vector<int> cycle;
            int a = u, b = v;
            do {
                visited.insert({a, b});
                cycle.push_back(a);
                auto it = position[b].find(a);
                if (it == position[b].end()) {
                    throw GuardError("rotation system is not symmetric at edge " +
                                     std::to_string(a) + "-" + std::to_string(b));
                }
                int deg = static_cast<int>(rotation.order[b].size());
                int next = rotation.order[b][(it->second + 1) % deg];
                a = b;
                b = next;
            } while (!(a == u && b == v));
            result.faces.push_back(std::move(cycle));
        }
    }
    return result;
}

namespace {

// Smallest tuple over all rotations and both directions of a cycle.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
    std::vector<int> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t shift = 0; shift < cycle.size(); ++shift) {
            std::vector<int> candidate;
            candidate.reserve(cycle.size());
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                candidate.push_back(cycle[(shift + i) % cycle.size()]);
            }
            if (best.empty() || candidate < best) best = candidate;
        }
        std::reverse(cycle.begin(), cycle.end());
    }
    return best;
}

ClassParams params_for(ClassKind kind) {
    return kind == ClassKind::NicPlanar ? ClassParams::nic_planar() : ClassParams::ic_planar();
}

bool connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

// Row-major grid over ids base..base+count-1 with the given width; the last
// row may be partial. Appends edges and clockwise rotations (up, right, down,
// left) in place.
struct GridShape {
    int base = 0;
    int count = 0;
    int width = 1;

    int rows() const { return (count + width - 1) / width; }
    int id(int i, int j) const { return base + i * width + j; }
    bool inside(int i, int j) const {
        if (i < 0 || j < 0 || j >= width) return false;
        int k = i * width + j;
        return k < count;
    }
};

void build_grid(const GridShape& grid, Graph& skeleton, RotationSystem& rotation) {
    for (int i = 0; i < grid.rows(); ++i) {
        for (int j = 0; j < grid.width; ++j) {
            if (!grid.inside(i, j)) continue;
            if (grid.inside(i, j + 1)) skeleton.add_edge(grid.id(i, j), grid.id(i, j + 1));
            if (grid.inside(i + 1, j)) skeleton.add_edge(grid.id(i, j), grid.id(i + 1, j));
            auto& order = rotation.order[grid.id(i, j)];
            if (grid.inside(i - 1, j)) order.push_back(grid.id(i - 1, j));
            if (grid.inside(i, j + 1)) order.push_back(grid.id(i, j + 1));
            if (grid.inside(i + 1, j)) order.push_back(grid.id(i + 1, j));
            if (grid.inside(i, j - 1)) order.push_back(grid.id(i, j - 1));
        }
    }
}

// Quadrilateral cells (a, b, c, d) = (top-left, top-right, bottom-right,
// bottom-left), in row-major order.
std::vector<CrossingPair> grid_cells(const GridShape& grid) {
    std::vector<CrossingPair> cells;
    for (int i = 0; i + 1 < grid.rows(); ++i) {
        for (int j = 0; j + 1 < grid.width; ++j) {
            if (!grid.inside(i + 1, j + 1)) continue;
            cells.push_back({grid.id(i, j), grid.id(i, j + 1), grid.id(i + 1, j + 1),
                             grid.id(i + 1, j)});
        }
    }
    return cells;
}

DrawnInstance gen_crossed(int n, std::uint64_t seed, int min_delta, ClassKind kind) {
    if (n < min_delta + 1) {
        throw GuardError("need at least " + std::to_string(min_delta + 1) +
                         " vertices to reach maximum degree " + std::to_string(min_delta));
    }
    DrawnInstance inst;
    inst.seed = seed;
    inst.kind = kind;
    inst.skeleton = Graph(n);
    inst.rotation.order.assign(static_cast<std::size_t>(n), {});

    // Vertex 0 is the hub; the rest form a grid at least min_delta wide, so
    // fanning the hub over the whole first row reaches the degree target.
    GridShape grid;
    grid.base = 1;
    grid.count = n - 1;
    grid.width = std::max(min_delta,
                          static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n - 1)))));
    build_grid(grid, inst.skeleton, inst.rotation);
    int fan = std::min(grid.width, grid.count);
    for (int j = fan - 1; j >= 0; --j) {
        // Clockwise around the hub, the spokes run right to left as seen
        // from above the first row.
        inst.skeleton.add_edge(0, grid.id(0, j));
        inst.rotation.order[0].push_back(grid.id(0, j));
    }
    for (int j = 0; j < fan; ++j) {
        // The hub sits above the first row, in each vertex's "up" slot.
        auto& order = inst.rotation.order[grid.id(0, j)];
        order.insert(order.begin(), 0);
    }

    inst.graph = inst.skeleton;
    std::vector<CrossingPair> cells = grid_cells(grid);
    Rng rng(seed);
    for (int i = static_cast<int>(cells.size()) - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
        std::swap(cells[i], cells[static_cast<std::size_t>(j)]);
    }

    const BigInt budget_num = params_for(kind).m1.numerator();
    const BigInt budget_den = params_for(kind).m1.denominator();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<CrossingPair> accepted;
    for (const auto& cell : cells) {
        const int support[4] = {cell.a, cell.b, cell.c, cell.d};
        bool fits = true;
        if (kind == ClassKind::NicPlanar) {
            for (const auto& other : accepted) {
                const int others[4] = {other.a, other.b, other.c, other.d};
                int shared = 0;
                for (int u : support) {
                    for (int v : others) {
                        if (u == v) ++shared;
                    }
                }
                if (shared > 1) {
                    fits = false;
                    break;
                }
            }
        } else {
            for (int u : support) {
                if (used[u]) {
                    fits = false;
                    break;
                }
            }
        }
        if (!fits) continue;
        // Stay clearly inside the edge budget m1 * n.
        BigInt next_edges = BigInt(inst.graph.edge_count() + 2) * budget_den;
        if (next_edges > budget_num * n) continue;
        inst.graph.add_edge(cell.a, cell.c);
        inst.graph.add_edge(cell.b, cell.d);
        accepted.push_back(cell);
        for (int u : support) used[u] = true;
    }
    inst.crossings = std::move(accepted);

    auto check = validate_drawn_instance(inst);
    if (!check.ok) {
        throw InvariantViolation("generated instance failed validation: " + check.to_text());
    }
    return inst;
}

} // namespace

InstanceCheck validate_drawn_instance(const DrawnInstance& inst) {
    InstanceCheck check;
    auto flag = [&check](const std::string& issue) {
        check.ok = false;
        check.issues.push_back(issue);
    };
    const int n = inst.graph.vertex_count();
    if (inst.skeleton.vertex_count() != n) {
        flag("skeleton and graph disagree on vertex count");
        return check;
    }

    // Diagonal bookkeeping: each pair contributes two distinct graph edges
    // that are absent from the skeleton, each used by exactly one pair.
    std::set<std::pair<int, int>> diagonals;
    for (const auto& cross : inst.crossings) {
        const int support[4] = {cross.a, cross.b, cross.c, cross.d};
        std::set<int> distinct(support, support + 4);
        if (distinct.size() != 4 || *distinct.begin() < 0 || *distinct.rbegin() >= n) {
            flag("crossing support is not four distinct vertices");
            continue;
        }
        for (auto [u, v] : {std::pair{cross.a, cross.c}, std::pair{cross.b, cross.d}}) {
            if (u > v) std::swap(u, v);
            if (!inst.graph.has_edge(u, v)) flag("crossed diagonal missing from the graph");
            if (inst.skeleton.has_edge(u, v)) flag("crossed diagonal also lies in the skeleton");
            if (!diagonals.insert({u, v}).second) flag("diagonal shared by two crossing pairs");
        }
        for (auto [u, v] : {std::pair{cross.a, cross.b}, std::pair{cross.b, cross.c},
                            std::pair{cross.c, cross.d}, std::pair{cross.d, cross.a}}) {
            if (!inst.skeleton.has_edge(u, v)) flag("quadrilateral side missing from skeleton");
        }
    }
    if (inst.skeleton.edge_count() + 2 * static_cast<int>(inst.crossings.size()) !=
        inst.graph.edge_count()) {
        flag("graph edges are not skeleton edges plus one diagonal pair per crossing");
    }
    for (const auto& [u, v] : inst.skeleton.edges()) {
        if (!inst.graph.has_edge(u, v)) flag("skeleton edge missing from the graph");
    }

    // Support overlap rule.
    for (std::size_t i = 0; i < inst.crossings.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.crossings.size(); ++j) {
            const auto& p = inst.crossings[i];
            const auto& q = inst.crossings[j];
            const int ps[4] = {p.a, p.b, p.c, p.d};
            const int qs[4] = {q.a, q.b, q.c, q.d};
            int shared = 0;
            for (int u : ps) {
                for (int v : qs) {
                    if (u == v) ++shared;
                }
            }
            int allowed = inst.kind == ClassKind::NicPlanar ? 1 : 0;
            if (shared > allowed) {
                flag("crossing supports share " + std::to_string(shared) +
                     " vertices, over the allowed " + std::to_string(allowed));
            }
        }
    }

    if (!connected(inst.skeleton)) flag("skeleton is not connected");

    auto budget = check_edge_budget(inst.graph, params_for(inst.kind), false);
    if (!budget.pass) flag("edge budget violated: " + budget.to_text());

    auto degen = degeneracy_order(inst.graph);
    if (degen.degeneracy > 6) {
        flag("degeneracy " + std::to_string(degen.degeneracy) + " exceeds 6");
    }

    if (!inst.rotation.empty()) {
        bool shape_ok = static_cast<int>(inst.rotation.order.size()) == n;
        for (int v = 0; shape_ok && v < n; ++v) {
            auto sorted = inst.rotation.order[v];
            std::sort(sorted.begin(), sorted.end());
            auto expected = inst.skeleton.neighbors(v);
            std::vector<int> expected_sorted(expected.begin(), expected.end());
            std::sort(expected_sorted.begin(), expected_sorted.end());
            if (sorted != expected_sorted) shape_ok = false;
        }
        if (!shape_ok) {
            flag("rotation system does not list each skeleton neighborhood exactly once");
        } else {
            auto trace = trace_faces(inst.skeleton, inst.rotation);
            long long euler = static_cast<long long>(n) - inst.skeleton.edge_count() +
                              static_cast<long long>(trace.faces.size());
            if (euler != 2) {
                flag("face trace breaks Euler's identity: V - E + F = " + std::to_string(euler));
            }
            std::set<std::vector<int>> quad_faces;
            for (const auto& face : trace.faces) {
                if (face.size() == 4) quad_faces.insert(canonical_cycle(face));
            }
            std::set<std::vector<int>> used_faces;
            for (const auto& cross : inst.crossings) {
                auto key = canonical_cycle({cross.a, cross.b, cross.c, cross.d});
                if (!quad_faces.count(key)) {
                    flag("crossing quadrilateral is not a face of the embedding");
                } else if (!used_faces.insert(key).second) {
                    flag("two crossing pairs drawn inside the same face");
                }
            }
        }
    }
    return check;
}

DrawnInstance gen_quadrangulated_skeleton(int n, std::uint64_t seed) {
    if (n < 4) throw GuardError("need at least 4 vertices for a quadrangulated skeleton");
    DrawnInstance inst;
    inst.seed = seed;
    inst.skeleton = Graph(n);
    inst.rotation.order.assign(static_cast<std::size_t>(n), {});
    GridShape grid;
    grid.count = n;
    grid.width = std::max(2, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))));
    build_grid(grid, inst.skeleton, inst.rotation);
    inst.graph = inst.skeleton;
    auto check = validate_drawn_instance(inst);
    if (!check.ok) {
        throw InvariantViolation("generated skeleton failed validation: " + check.to_text());
    }
    return inst;
}

DrawnInstance gen_ic_planar(int n, std::uint64_t seed, int min_delta) {
    return gen_crossed(n, seed, min_delta, ClassKind::IcPlanar);
}

DrawnInstance gen_nic_planar(int n, std::uint64_t seed, int min_delta) {
    return gen_crossed(n, seed, min_delta, ClassKind::NicPlanar);
}

std::string format_instance(const DrawnInstance& inst) {
    std::string out = format_graph(inst.graph);
    out += "crossings:\n";
    for (const auto& cross : inst.crossings) {
        out += std::to_string(cross.a) + " " + std::to_string(cross.b) + " " +
               std::to_string(cross.c) + " " + std::to_string(cross.d) + "\n";
    }
    return out;
}

DrawnInstance parse_instance(const std::string& text, ClassKind kind) {
    DrawnInstance inst;
    inst.kind = kind;
    inst.graph = parse_graph(text);

    std::istringstream in(text);
    std::string line;
    bool in_crossings = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#') continue;
        if (!in_crossings) {
            if (first == "crossings:") in_crossings = true;
            continue;
        }
        CrossingPair cross;
        std::istringstream quad(line);
        if (!(quad >> cross.a >> cross.b >> cross.c >> cross.d)) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": crossing line needs four corner ids");
        }
        std::string extra;
        if (quad >> extra) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": crossing line has extra tokens");
        }
        inst.crossings.push_back(cross);
    }

    inst.skeleton = Graph(inst.graph.vertex_count());
    std::set<std::pair<int, int>> diagonals;
    for (const auto& cross : inst.crossings) {
        for (auto [u, v] : {std::pair{cross.a, cross.c}, std::pair{cross.b, cross.d}}) {
            if (u > v) std::swap(u, v);
            diagonals.insert({u, v});
        }
    }
    for (const auto& [u, v] : inst.graph.edges()) {
        if (!diagonals.count({u, v})) inst.skeleton.add_edge(u, v);
    }
    return inst;
}

} // namespace equicolor
