#include "core/graph.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace equicolor {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw GuardError("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw GuardError("vertex id " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n_) + ")");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GuardError("self loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
        throw GuardError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    auto insert_sorted = [](std::vector<int>& list, int x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const std::vector<int>& shorter = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(shorter.begin(), shorter.end(), target);
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
    return best;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    return adj_ == other.adj_;
}

ClassParams ClassParams::ic_planar() {
    ClassParams p;
    p.kind = ClassKind::IcPlanar;
    p.m1 = make_rat(7, 2);
    p.m2 = make_rat(9, 4);
    p.delta_threshold = 10;
    return p;
}

ClassParams ClassParams::nic_planar() {
    ClassParams p;
    p.kind = ClassKind::NicPlanar;
    p.m1 = make_rat(18, 5);
    p.m2 = make_rat(5, 2);
    p.delta_threshold = 11;
    return p;
}

ClassParams ClassParams::density_pair(const Rat& m1, const Rat& m2, int delta_threshold) {
    ClassParams p;
    p.kind = ClassKind::DensityPair;
    p.m1 = m1;
    p.m2 = m2;
    p.delta_threshold = delta_threshold;
    p.validate();
    return p;
}

void ClassParams::validate() const {
    if (m2 <= make_rat(0)) throw GuardError("density bound m2 must be positive");
    if (m2 > m1) throw GuardError("density bounds need m2 <= m1");
    if (m1 > m2 * make_rat(9, 5)) throw GuardError("density bounds need m1 <= 1.8*m2");
    if (delta_threshold < 0) throw GuardError("delta threshold must be nonnegative");
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> queue;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        queue.push(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string BudgetReport::to_text() const {
    std::ostringstream out;
    out << "format: v1\n";
    out << "bipartite " << (bipartite_mode ? 1 : 0) << "\n";
    out << "vertices " << vertices << "\n";
    out << "edges " << edges << "\n";
    out << "budget " << rat_to_string(budget) << "\n";
    out << "slack " << rat_to_string(slack) << "\n";
    out << "pass " << (pass ? 1 : 0) << "\n";
    return out.str();
}

BudgetReport check_edge_budget(const Graph& g, const ClassParams& params, bool bipartite_mode) {
    params.validate();
    if (bipartite_mode && !is_bipartite(g)) {
        throw GuardError("bipartite budget requested for a non-bipartite graph");
    }
    const Rat n = make_rat(g.vertex_count());
    Rat budget;
    if (g.vertex_count() <= 2) {
        // The class bounds below are stated for graphs with at least three
        // vertices; any simple graph this small is a member.
        budget = make_rat(g.vertex_count() == 2 ? 1 : 0);
    } else {
        switch (params.kind) {
        case ClassKind::IcPlanar:
            budget = bipartite_mode ? make_rat(9, 4) * n - make_rat(4)
                                    : make_rat(7, 2) * n - make_rat(7);
            break;
        case ClassKind::NicPlanar:
            budget = bipartite_mode ? make_rat(5, 2) * n - make_rat(5)
                                    : make_rat(18, 5) * n - make_rat(36, 5);
            break;
        case ClassKind::DensityPair:
            budget = (bipartite_mode ? params.m2 : params.m1) * n;
            break;
        }
    }
    BudgetReport report;
    report.bipartite_mode = bipartite_mode;
    report.vertices = g.vertex_count();
    report.edges = g.edge_count();
    report.budget = budget;
    report.slack = budget - make_rat(g.edge_count());
    report.pass = report.slack >= make_rat(0);
    return report;
}

DegeneracyResult degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    DegeneracyResult result;
    result.order.reserve(static_cast<std::size_t>(n));
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::vector<std::set<int>> buckets(static_cast<std::size_t>(n + 1));
    for (int v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        buckets[degree[v]].insert(v);
    }
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    int cursor = 0;
    for (int step = 0; step < n; ++step) {
        while (cursor > 0 && !buckets[cursor - 1].empty()) --cursor;
        while (buckets[cursor].empty()) ++cursor;
        int v = *buckets[cursor].begin();
        buckets[cursor].erase(buckets[cursor].begin());
        removed[v] = true;
        result.order.push_back(v);
        result.degeneracy = std::max(result.degeneracy, degree[v]);
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            buckets[degree[w]].erase(w);
            --degree[w];
            buckets[degree[w]].insert(w);
        }
    }
    return result;
}

namespace {

// Dinic max-flow on int64 capacities; sized for the parametric density cuts.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : head_(static_cast<std::size_t>(n), -1) {}

    void add_edge(int from, int to, std::int64_t cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    std::int64_t max_flow(int source, int sink) {
        std::int64_t total = 0;
        while (build_levels(source, sink)) {
            iter_ = head_;
            std::int64_t pushed;
            while ((pushed = augment(source, sink, std::numeric_limits<std::int64_t>::max())) > 0) {
                total += pushed;
            }
        }
        return total;
    }

    // Call after max_flow: vertices still reachable from source.
    std::vector<bool> source_side(int source) const {
        std::vector<bool> seen(head_.size(), false);
        std::vector<int> stack{source};
        seen[source] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    stack.push_back(arcs_[a].to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        std::int64_t cap;
    };

    bool build_levels(int source, int sink) {
        level_.assign(head_.size(), -1);
        std::queue<int> queue;
        level_[source] = 0;
        queue.push(source);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && level_[arcs_[a].to] == -1) {
                    level_[arcs_[a].to] = level_[v] + 1;
                    queue.push(arcs_[a].to);
                }
            }
        }
        return level_[sink] != -1;
    }

    std::int64_t augment(int v, int sink, std::int64_t limit) {
        if (v == sink) return limit;
        for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
            std::int64_t pushed = augment(arc.to, sink, std::min(limit, arc.cap));
            if (pushed > 0) {
                arc.cap -= pushed;
                arcs_[a ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> iter_;
    std::vector<int> level_;
    std::vector<Arc> arcs_;
};

// Finds a vertex set with e(S)/|S| strictly above lambda, or nullopt.
std::optional<std::vector<int>> denser_subset(const Graph& g, const Rat& lambda) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n == 0) return std::nullopt;
    std::int64_t p = static_cast<std::int64_t>(lambda.numerator());
    std::int64_t q = static_cast<std::int64_t>(lambda.denominator());
    // Classic parametric cut: S beats lambda iff the min source cut drops
    // below m*n*q. All capacities are scaled by q to stay integral.
    FlowNetwork net(n + 2);
    const int source = n;
    const int sink = n + 1;
    for (int v = 0; v < n; ++v) {
        net.add_edge(source, v, static_cast<std::int64_t>(m) * q);
        net.add_edge(v, sink, static_cast<std::int64_t>(m) * q + 2 * p - static_cast<std::int64_t>(g.degree(v)) * q);
    }
    for (const auto& [u, v] : g.edges()) {
        net.add_edge(u, v, q);
        net.add_edge(v, u, q);
    }
    std::int64_t cut = net.max_flow(source, sink);
    if (cut >= static_cast<std::int64_t>(m) * n * q) return std::nullopt;
    std::vector<bool> side = net.source_side(source);
    std::vector<int> subset;
    for (int v = 0; v < n; ++v) {
        if (side[v]) subset.push_back(v);
    }
    if (subset.empty()) return std::nullopt;
    return subset;
}

Rat subset_density(const Graph& g, const std::vector<int>& subset) {
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : subset) in[v] = true;
    long long inside = 0;
    for (const auto& [u, v] : g.edges()) {
        if (in[u] && in[v]) ++inside;
    }
    return Rat(BigInt(inside), BigInt(subset.size()));
}

} // namespace

Rat densest_subgraph_density(const Graph& g, DensestMode mode) {
    const int n = g.vertex_count();
    if (n == 0) throw GuardError("densest subgraph needs at least one vertex");
    if (mode == DensestMode::Exhaustive) {
        if (n > 20) throw GuardError("exhaustive densest-subgraph mode capped at 20 vertices");
        Rat best = make_rat(0);
        const auto& edges = g.edges();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            long long inside = 0;
            for (const auto& [u, v] : edges) {
                if ((mask >> u & 1u) && (mask >> v & 1u)) ++inside;
            }
            Rat density(BigInt(inside), BigInt(__builtin_popcount(mask)));
            best = std::max(best, density);
        }
        return best;
    }
    // Exact search: any achieved density is a fraction with denominator at
    // most n, so once the undecided window narrows past 1/n^2 the best
    // achieved value so far is the maximum.
    Rat best = make_rat(g.edge_count(), n);
    Rat hi = Rat(BigInt(std::max(1, g.edge_count())), BigInt(1)) + make_rat(1);
    const Rat resolution = Rat(BigInt(1), BigInt(static_cast<long long>(n) * n));
    while (hi - best > resolution) {
        Rat mid = (best + hi) / make_rat(2);
        auto subset = denser_subset(g, mid);
        if (subset) {
            Rat achieved = subset_density(g, *subset);
            best = std::max(best, achieved);
        } else {
            hi = mid;
        }
    }
    return best;
}

namespace {

int parse_int_token(const std::string& token, int line_no) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + token + "'");
    }
    if (pos != token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": trailing characters in '" + token + "'");
    }
    return value;
}

} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_n = false;
    Graph g;
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
        if (first == "crossings:") break;
        if (!have_n) {
            std::string extra;
            if (fields >> extra) {
                throw ParseError("line " + std::to_string(line_no) + ": vertex count line has extra tokens");
            }
            g = Graph(parse_int_token(first, line_no));
            have_n = true;
            continue;
        }
        std::string second;
        if (!(fields >> second)) {
            throw ParseError("line " + std::to_string(line_no) + ": edge line needs two endpoints");
        }
        std::string extra;
        if (fields >> extra) {
            throw ParseError("line " + std::to_string(line_no) + ": edge line has extra tokens");
        }
        int u = parse_int_token(first, line_no);
        int v = parse_int_token(second, line_no);
        try {
            g.add_edge(u, v);
        } catch (const GuardError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!have_n) throw ParseError("missing vertex count header");
    return g;
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "format: v1\n" << g.vertex_count() << "\n";
    auto sorted = g.edges();
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [u, v] : sorted) out << u << " " << v << "\n";
    return out.str();
}

} // namespace equicolor
