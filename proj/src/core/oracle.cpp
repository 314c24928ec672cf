#include "core/oracle.hpp"

#include "core/engine.hpp"
#include "core/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace equicolor {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    return adj;
}

struct EquitableSearch {
    const std::vector<std::uint32_t>& adj;
    int n, r, lo, hi, big_limit;
    std::vector<std::uint32_t> class_mask;
    std::vector<int> count;
    std::vector<int> assignment;
    long long nodes = 0;
    int big_used = 0;
    int deficit; // sum over classes of (lo - count), while count < lo

    EquitableSearch(const std::vector<std::uint32_t>& a, int n_, int r_)
        : adj(a), n(n_), r(r_), lo(n_ / r_), hi((n_ + r_ - 1) / r_), big_limit(n_ % r_),
          class_mask(static_cast<std::size_t>(r_), 0), count(static_cast<std::size_t>(r_), 0),
          assignment(static_cast<std::size_t>(n_), -1), deficit(lo * r_) {}

    bool extend(int v) {
        if (v == n) return true;
        for (int c = 0; c < r; ++c) {
            if (c > 0 && count[c - 1] == 0) break; // classes open in id order
            if (count[c] == hi) continue;
            bool becomes_big = count[c] >= lo;
            if (becomes_big && big_used == big_limit) continue;
            if (adj[v] & class_mask[c]) continue;
            int remaining = n - v - 1;
            int new_deficit = deficit - (count[c] < lo ? 1 : 0);
            if (new_deficit > remaining) continue;
            ++nodes;
            class_mask[c] |= std::uint32_t{1} << v;
            ++count[c];
            if (becomes_big) ++big_used;
            std::swap(deficit, new_deficit);
            assignment[v] = c;
            if (extend(v + 1)) return true;
            assignment[v] = -1;
            std::swap(deficit, new_deficit);
            if (becomes_big) --big_used;
            --count[c];
            class_mask[c] &= ~(std::uint32_t{1} << v);
        }
        return false;
    }
};

} // namespace

OracleVerdict brute_force_equitable(const Graph& g, int r, int max_n) {
    const int n = g.vertex_count();
    if (r < 1) throw GuardError("class count must be positive");
    if (n > max_n) throw GuardError("graph too large for the exhaustive oracle");
    if (n > 31) throw GuardError("exhaustive oracle supports at most 31 vertices");
    auto adj = adjacency_masks(g);
    EquitableSearch search(adj, n, r);
    OracleVerdict verdict;
    verdict.feasible = search.extend(0);
    verdict.nodes_explored = search.nodes;
    if (verdict.feasible) {
        Coloring witness(n, r);
        for (int v = 0; v < n; ++v) witness.assign(v, search.assignment[v]);
        verdict.witness = std::move(witness);
    }
    return verdict;
}

Rat brute_force_bipartite_density(const Graph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n) throw GuardError("graph too large for the exhaustive oracle");
    if (n > 20) throw GuardError("exhaustive density oracle supports at most 20 vertices");
    auto adj = adjacency_masks(g);
    long long best_num = 0;
    long long best_den = 1;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        int size = std::popcount(s);
        int best_cut = 0;
        // Fix the lowest vertex of S on one side to halve the enumeration.
        std::uint32_t low = s & (~s + 1);
        std::uint32_t rest = s ^ low;
        std::uint32_t x = 0;
        while (true) {
            std::uint32_t side = x | low;
            std::uint32_t other = s ^ side;
            int cut = 0;
            for (std::uint32_t bits = side; bits != 0; bits &= bits - 1) {
                int v = std::countr_zero(bits);
                cut += std::popcount(adj[v] & other);
            }
            best_cut = std::max(best_cut, cut);
            if (x == rest) break;
            x = (x - rest) & rest;
        }
        // best_cut/size > best_num/best_den, cross-multiplied
        if (static_cast<long long>(best_cut) * best_den > best_num * size) {
            best_num = best_cut;
            best_den = size;
        }
    }
    return make_rat(best_num, best_den);
}

namespace {

int pair_slot(int u, int v, int n) { // u < v
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

Graph graph_from_mask(std::uint32_t mask, int n) {
    Graph g(n);
    int slot = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++slot) {
            if (mask & (std::uint32_t{1} << slot)) g.add_edge(u, v);
        }
    }
    return g;
}

// slot_maps[p][slot of (u,v)] = slot of (perm_p(u), perm_p(v))
std::vector<std::vector<int>> permutation_slot_maps(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const int slots = n * (n - 1) / 2;
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> map(static_cast<std::size_t>(slots));
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                int a = std::min(perm[u], perm[v]);
                int b = std::max(perm[u], perm[v]);
                map[pair_slot(u, v, n)] = pair_slot(a, b, n);
            }
        }
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

} // namespace

SweepReport exhaustive_small_sweep(int n_max, const ClassParams& params, int r_cap) {
    // n = 9 would need 2^36 marks (8.6 GB); the mask-space walk tops out at 8.
    if (n_max < 1 || n_max > 8) throw GuardError("sweep supports 1 <= n_max <= 8");
    SweepReport report;
    for (int n = 1; n <= n_max; ++n) {
        const int slots = n * (n - 1) / 2;
        auto slot_maps = permutation_slot_maps(n);
        std::vector<bool> visited(std::size_t{1} << slots, false);
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots); ++mask) {
            if (visited[mask]) continue;
            for (const auto& map : slot_maps) {
                std::uint32_t image = 0;
                for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
                    image |= std::uint32_t{1} << map[std::countr_zero(bits)];
                }
                visited[image] = true;
            }
            ++report.representatives;
            Graph g = graph_from_mask(mask, n);
            const int r_hi = r_cap > 0 ? std::min(n, r_cap) : n;
            for (int r = 1; r <= r_hi; ++r) {
                ++report.runs;
                bool engine_success = false;
                try {
                    Coloring c = equitable_color(g, r, params);
                    auto check = verify_coloring(g, c);
                    engine_success = check.valid();
                } catch (const RepairExhausted&) {
                    engine_success = false;
                }
                auto verdict = brute_force_equitable(g, r);
                if (engine_success) {
                    ++report.engine_successes;
                    if (verdict.feasible) ++report.oracle_confirmed;
                }
                if (engine_success != verdict.feasible) {
                    SweepCase diverged;
                    diverged.n = n;
                    diverged.r = r;
                    diverged.edges = g.edges();
                    diverged.engine_success = engine_success;
                    diverged.oracle_feasible = verdict.feasible;
                    (engine_success ? report.hard_divergences : report.missed_feasible)
                        .push_back(std::move(diverged));
                }
            }
        }
        report.graphs_examined += std::int64_t{1} << slots;
    }
    return report;
}

std::string SweepReport::to_text() const {
    std::ostringstream out;
    out << "graphs examined: " << graphs_examined << "\n"
        << "isomorphism-class representatives run: " << representatives << "\n"
        << "(graph, r) engine runs: " << runs << "\n"
        << "engine successes: " << engine_successes << "\n"
        << "oracle-confirmed successes: " << oracle_confirmed << "\n"
        << "hard divergences (engine success, oracle infeasible): " << hard_divergences.size()
        << "\n"
        << "missed feasible (engine failure, oracle feasible): " << missed_feasible.size() << "\n";
    auto dump = [&out](const std::vector<SweepCase>& cases, const char* label) {
        for (const auto& sc : cases) {
            out << label << ": n=" << sc.n << " r=" << sc.r << " edges=";
            for (std::size_t i = 0; i < sc.edges.size(); ++i) {
                if (i > 0) out << ',';
                out << sc.edges[i].first << '-' << sc.edges[i].second;
            }
            out << "\n";
        }
    };
    dump(hard_divergences, "hard");
    dump(missed_feasible, "missed");
    return out.str();
}

} // namespace equicolor
