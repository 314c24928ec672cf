#include "core/engine.hpp"

#include "core/digraph.hpp"
#include "core/errors.hpp"
#include "core/solo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace equicolor {

PadResult pad_for_divisibility(const Graph& g, int r) {
    if (r < 1) throw GuardError("class count must be positive");
    const int n = g.vertex_count();
    const int t = (r - n % r) % r;
    PadResult result;
    result.padded = Graph(n + t);
    for (const auto& [u, v] : g.edges()) result.padded.add_edge(u, v);
    for (int i = 0; i < t; ++i) {
        result.pad_vertices.push_back(n + i);
        for (int j = 0; j < i; ++j) result.padded.add_edge(n + j, n + i);
    }
    return result;
}

std::vector<ScheduledEdge> insertion_schedule(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::set<std::pair<int, int>> by_degree; // (degree, vertex), degree >= 1
    for (int v = 0; v < n; ++v) {
        if (!adj[v].empty()) by_degree.emplace(static_cast<int>(adj[v].size()), v);
    }
    std::vector<ScheduledEdge> peeled;
    while (!by_degree.empty()) {
        auto [dx, x] = *by_degree.begin();
        int y = *adj[x].begin();
        peeled.push_back({x, y});
        int dy = static_cast<int>(adj[y].size());
        by_degree.erase({dx, x});
        by_degree.erase({dy, y});
        adj[x].erase(y);
        adj[y].erase(x);
        if (!adj[x].empty()) by_degree.emplace(static_cast<int>(adj[x].size()), x);
        if (!adj[y].empty()) by_degree.emplace(static_cast<int>(adj[y].size()), y);
    }
    std::reverse(peeled.begin(), peeled.end());
    return peeled;
}

namespace {

// One edge insertion's repair session. The held-aside endpoint x stays
// unassigned while moves raise the number of accessible classes until a class
// free of x turns up.
class RepairRun {
public:
    RepairRun(const Graph& h, Coloring& c, int x, int small, int real_n,
              const ClassParams& params, bool strict, bool collect_trace,
              std::vector<MoveRecord>& trace, int& step_counter, RunStats& stats, int cap)
        : h_(h), c_(c), x_(x), small_(small), real_n_(real_n), params_(params), strict_(strict),
          collect_(collect_trace), trace_(trace), step_(step_counter), stats_(stats),
          rounds_cap_(cap), r_(c.num_classes()), full_(h.vertex_count() / c.num_classes()) {}

    void run();

private:
    const Graph& h_;
    Coloring& c_;
    int x_;
    int small_;
    int real_n_; // pads carry ids >= real_n_; structural claims hold on real vertices
    const ClassParams& params_;
    bool strict_;
    bool collect_;
    std::vector<MoveRecord>& trace_;
    int& step_;
    RunStats& stats_;
    int rounds_cap_;
    int r_;
    int full_; // common class size s of the padded order

    // Rebuilt at the top of every round.
    ClassDigraph d_;
    AccessPartition access_;
    std::vector<std::vector<int>> blocked_components_;
    std::vector<bool> core_; // classes of the largest blocked strong component
    std::vector<int> core_list_;

    void emit(MoveKind kind, std::vector<VertexMove> moves, int a_before, int a_after,
              const char* justification) {
        if (kind != MoveKind::Eject && kind != MoveKind::Finish) ++stats_.repair_moves;
        if (!collect_) return;
        MoveRecord record;
        record.step = step_++;
        record.kind = kind;
        record.moves = std::move(moves);
        record.a_before = a_before;
        record.a_after = a_after;
        record.justification = justification;
        trace_.push_back(std::move(record));
    }

    void rebuild() {
        d_ = build_class_digraph(h_, c_, small_, nullptr);
        access_ = accessible_classes(d_);
        stats_.max_access_seen = std::max(stats_.max_access_seen, access_.count);
        blocked_components_.clear();
        core_.assign(static_cast<std::size_t>(r_), false);
        core_list_.clear();
        if (!access_.blocked_list.empty()) {
            blocked_components_ = strong_components(d_, access_.blocked_list);
            const std::vector<int>* largest = nullptr;
            for (const auto& comp : blocked_components_) {
                if (!largest || comp.size() > largest->size()) largest = &comp;
            }
            core_list_ = *largest;
            for (int cls : core_list_) core_[cls] = true;
        }
        if (strict_) {
            if (access_.count >= 4 && access_.count <= 6) {
                throw InvariantViolation(
                    "accessible-class count " + std::to_string(access_.count) +
                    " fell in the excluded band {4,5,6}; the density argument rules this out");
            }
            if (access_.count <= 3 && static_cast<int>(core_list_.size()) < r_ - 3) {
                throw InvariantViolation(
                    "largest blocked strong component has " +
                    std::to_string(core_list_.size()) + " classes, below the required " +
                    std::to_string(r_ - 3));
            }
        }
    }

    SoloProfile profile_checked(int u) const {
        ++stats_.profiles_checked;
        SoloProfile p = solo_profile(h_, c_, access_, u);
        if (strict_ && u < real_n_) {
            int threshold = params_.kind == ClassKind::IcPlanar ? 6 : 7;
            if (p.q() >= threshold && p.q_nice() < p.q() - 2) {
                throw InvariantViolation("solo degree " + std::to_string(p.q()) +
                                         " with nice solo degree " + std::to_string(p.q_nice()) +
                                         " violates the q' >= q - 2 guarantee");
            }
        }
        return p;
    }

    int count_in(int v, int cls, const Coloring& c) const {
        return class_neighbor_count(h_, c, v, cls);
    }

    // -1 unless exactly one class has size full_-1 and the rest full_.
    int unique_small(const Coloring& c) const {
        int small = -1;
        for (int cls = 0; cls < r_; ++cls) {
            int size = static_cast<int>(c.members(cls).size());
            if (size == full_) continue;
            if (size != full_ - 1 || small != -1) return -1;
            small = cls;
        }
        return small;
    }

    bool moved_vertices_proper(const Coloring& c, const std::vector<VertexMove>& moves) const {
        for (const auto& mv : moves) {
            int cls = c.class_of(mv.vertex);
            if (cls < 0) continue;
            if (count_in(mv.vertex, cls, c) != 0) return false;
        }
        return true;
    }

    // True when the held vertex can be seated from this state: some
    // accessible class is free of it and either is the small class or reaches
    // it along a witness path. Seating only adds witnesses, so a path found
    // here survives the assignment and the next finish attempt succeeds.
    bool finish_ready(const Coloring& c2, const ClassDigraph& d2,
                      const AccessPartition& access2, int small2) const {
        for (int target : access2.accessible_list) {
            if (class_neighbor_count(h_, c2, x_, target) != 0) continue;
            if (target == small2) return true;
            if (find_class_path(d2, target, small2, nullptr)) return true;
        }
        return false;
    }

    // Applies `moves` to a copy, appends an optional witness-path switch from
    // path_from to path_to (computed on the mid-state digraph, honouring
    // avoid), and commits when the result is a legal state that either has
    // more accessible classes or lets the held vertex finish immediately.
    bool commit_if_progress(std::vector<VertexMove> moves, int path_from, int path_to,
                            const std::vector<bool>* avoid, MoveKind kind,
                            const char* justification) {
        Coloring c2 = c_;
        for (const auto& mv : moves) {
            if (mv.from_class < 0)
                c2.assign(mv.vertex, mv.to_class);
            else
                c2.move(mv.vertex, mv.to_class);
        }
        if (path_from >= 0 && path_from != path_to) {
            ClassDigraph d2 = build_class_digraph(h_, c2, path_to, nullptr);
            auto path = find_class_path(d2, path_from, path_to, avoid);
            if (!path) return false;
            std::vector<VertexMove> switched;
            try {
                switched = switch_witnesses(h_, c2, *path, nullptr);
            } catch (const InvariantViolation&) {
                return false;
            }
            moves.insert(moves.end(), switched.begin(), switched.end());
        }
        int small2 = unique_small(c2);
        if (small2 < 0) return false;
        if (!moved_vertices_proper(c2, moves)) return false;
        ClassDigraph d3 = build_class_digraph(h_, c2, small2, nullptr);
        AccessPartition access3 = accessible_classes(d3);
        if (access3.count <= access_.count && !finish_ready(c2, d3, access3, small2))
            return false;
        int before = access_.count;
        c_ = std::move(c2);
        small_ = small2;
        emit(kind, std::move(moves), before, access3.count, justification);
        return true;
    }

    bool try_finish();
    bool try_evacuation_finish();
    bool relabel_small_classes();
    bool move_solo_promote();
    bool move_paired_solo_swap();
    bool move_component_relocate();
    bool move_cross();
    bool move_composite_double_swap();
    bool move_fallback_search();

    std::vector<int> members_by_weight(int base, const std::vector<bool>& marked) const;

    std::string state_dump() const {
        std::string out = "classes:";
        for (int cls = 0; cls < r_; ++cls) {
            out += cls == 0 ? " " : " | ";
            out += std::to_string(cls) + (access_.accessible[cls] ? "*" : "") + ":";
            for (int v : c_.members(cls)) out += " " + std::to_string(v);
        }
        out += "; held-vertex class counts:";
        for (int cls = 0; cls < r_; ++cls) {
            out += " " + std::to_string(class_neighbor_count(h_, c_, x_, cls));
        }
        return out;
    }

    bool finish_commit(Coloring&& c2, std::vector<VertexMove> moves, const char* justification) {
        if (unique_small(c2) != -1) return false;
        for (int cls = 0; cls < r_; ++cls) {
            if (static_cast<int>(c2.members(cls).size()) != full_) return false;
        }
        if (!moved_vertices_proper(c2, moves)) return false;
        if (count_in(x_, c2.class_of(x_), c2) != 0) return false;
        c_ = std::move(c2);
        emit(MoveKind::Finish, std::move(moves), access_.count, access_.count, justification);
        return true;
    }
};

std::vector<int> RepairRun::members_by_weight(int base, const std::vector<bool>& marked) const {
    std::vector<std::pair<Rat, int>> weighted;
    for (int u : c_.members(base)) {
        weighted.emplace_back(vertex_weight(h_, c_, access_, base, marked, u), u);
    }
    std::sort(weighted.begin(), weighted.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<int> order;
    order.reserve(weighted.size());
    for (const auto& [w, u] : weighted) order.push_back(u);
    return order;
}

bool RepairRun::try_finish() {
    for (int target : access_.accessible_list) {
        if (count_in(x_, target, c_) != 0) continue;
        if (target == small_) {
            Coloring c2 = c_;
            c2.assign(x_, target);
            if (finish_commit(std::move(c2), {{x_, -1, target}},
                              "held vertex seated directly into the small class"))
                return true;
            continue;
        }
        // Seating x only adds potential witnesses, and the path out of the
        // target class never uses arcs into it, so the round digraph answers
        // the path query without a rebuild.
        auto path = find_class_path(d_, target, small_, nullptr);
        if (!path) continue;
        Coloring c2 = c_;
        c2.assign(x_, target);
        std::vector<VertexMove> moves{{x_, -1, target}};
        std::vector<VertexMove> switched;
        try {
            switched = switch_witnesses(h_, c2, *path, nullptr);
        } catch (const InvariantViolation&) {
            continue;
        }
        moves.insert(moves.end(), switched.begin(), switched.end());
        if (finish_commit(std::move(c2), std::move(moves),
                          "held vertex seated into an accessible class free of it"))
            return true;
    }
    return false;
}

bool RepairRun::try_evacuation_finish() {
    for (int target = 0; target < r_; ++target) {
        if (count_in(x_, target, c_) != 1) continue;
        int blocker = -1;
        for (int w : h_.neighbors(x_)) {
            if (c_.class_of(w) == target) {
                blocker = w;
                break;
            }
        }
        if (blocker < 0) continue;
        std::vector<int> destinations{small_};
        for (int k = 0; k < r_; ++k) {
            if (k != small_) destinations.push_back(k);
        }
        for (int dest : destinations) {
            if (dest == target || count_in(blocker, dest, c_) != 0) continue;
            Coloring c2 = c_;
            c2.move(blocker, dest);
            c2.assign(x_, target);
            std::vector<VertexMove> moves{{blocker, target, dest}, {x_, -1, target}};
            if (dest != small_) {
                ClassDigraph d2 = build_class_digraph(h_, c2, small_, nullptr);
                auto path = find_class_path(d2, dest, small_, nullptr);
                if (!path) continue;
                std::vector<VertexMove> switched;
                try {
                    switched = switch_witnesses(h_, c2, *path, nullptr);
                } catch (const InvariantViolation&) {
                    continue;
                }
                moves.insert(moves.end(), switched.begin(), switched.end());
            }
            if (finish_commit(std::move(c2), std::move(moves),
                              "single blocker evacuated, held vertex seated, sizes rebalanced"))
                return true;
        }
    }
    return false;
}

bool RepairRun::relabel_small_classes() {
    if (access_.count != 3) return false;
    std::vector<int> others;
    for (int cls : access_.accessible_list) {
        if (cls != small_) others.push_back(cls);
    }
    bool direct0 = d_.has_arc(others[0], small_);
    bool direct1 = d_.has_arc(others[1], small_);
    if (direct0 && direct1) return false;
    // Exactly one lacks a direct arc; the chain runs through the other class.
    int via = direct0 ? others[0] : others[1];
    if (d_.witnesses[via][small_].empty()) return false;
    int u = d_.witnesses[via][small_].front();
    int before = access_.count;
    int old_small = small_;
    c_.move(u, old_small);
    small_ = via;
    // u's old class is independent, so u itself witnesses the arc from its
    // new class back to the shrunken one; the other class's arc survives.
    ClassDigraph d2 = build_class_digraph(h_, c_, small_, nullptr);
    AccessPartition after = accessible_classes(d2);
    emit(MoveKind::RelabelSmall, {{u, via, old_small}}, before, after.count,
         "small class renamed so both accessible classes point at it directly");
    return true;
}

bool RepairRun::move_solo_promote() {
    for (int home : access_.accessible_list) {
        if (home == small_) continue;
        for (int v : c_.members(home)) {
            if (count_in(v, small_, c_) != 0) continue;
            SoloProfile p = profile_checked(v);
            for (int u : p.solo) {
                std::vector<VertexMove> moves{{u, c_.class_of(u), home}, {v, home, small_}};
                if (commit_if_progress(std::move(moves), -1, -1, nullptr,
                                           MoveKind::SoloPromote,
                                           "solo neighbor promoted; its class became the small "
                                           "class inside the blocked component"))
                    return true;
            }
        }
    }
    return false;
}

bool RepairRun::move_paired_solo_swap() {
    for (int home : access_.accessible_list) {
        std::vector<int> movers;
        for (int v : c_.members(home)) {
            if (count_in(v, small_, c_) == 0) movers.push_back(v);
        }
        for (int subject : c_.members(home)) {
            bool has_helper = movers.size() >= 2 || (movers.size() == 1 && movers[0] != subject);
            if (home != small_ && !has_helper) continue;
            SoloProfile p = profile_checked(subject);
            if (p.nice_solo.empty()) continue;
            if (strict_ && subject < real_n_ && p.n2 < (p.q_nice() + 1) / 2) {
                throw InvariantViolation(
                    "subject with nice solo degree " + std::to_string(p.q_nice()) +
                    " sees only " + std::to_string(p.n2) +
                    " blocked classes twice; the two-neighbor bound requires more");
            }
            for (int w : p.nice_solo) {
                int w_class = c_.class_of(w);
                if (p.class_counts[w_class] != 1) continue;
                std::vector<VertexMove> moves{{subject, home, w_class}, {w, w_class, home}};
                if (commit_if_progress(std::move(moves), -1, -1, nullptr,
                                           MoveKind::PairedSoloSwap,
                                           "subject exchanged with its unique nice solo; the "
                                           "partner solo certifies a new arc"))
                    return true;
            }
        }
    }
    return false;
}

bool RepairRun::move_component_relocate() {
    if (core_list_.empty()) return false;
    std::vector<bool> avoid_base(static_cast<std::size_t>(r_), false);
    for (int cls = 0; cls < r_; ++cls) avoid_base[cls] = !core_[cls];
    for (int home : access_.accessible_list) {
        std::vector<int> movers;
        for (int v : c_.members(home)) {
            if (count_in(v, small_, c_) == 0) movers.push_back(v);
        }
        for (int subject : c_.members(home)) {
            bool has_helper = movers.size() >= 2 || (movers.size() == 1 && movers[0] != subject);
            if (home != small_ && !has_helper) continue;
            SoloProfile p = profile_checked(subject);
            if (p.nice_solo.empty()) continue;
            std::vector<int> free_core;
            for (int cls : core_list_) {
                if (p.class_counts[cls] == 0) free_core.push_back(cls);
            }
            if (free_core.empty()) continue;
            for (int w : p.nice_solo) {
                int w_class = c_.class_of(w);
                if (!core_[w_class]) continue;
                auto partner = nice_partner(h_, p, w);
                if (!partner) continue;
                std::vector<bool> avoid = avoid_base;
                int partner_class = c_.class_of(*partner);
                if (partner_class != w_class) avoid[partner_class] = true;
                for (int landing : free_core) {
                    if (avoid[landing]) continue;
                    std::vector<VertexMove> moves{{subject, home, landing}, {w, w_class, home}};
                    if (commit_if_progress(std::move(moves), landing, w_class, &avoid,
                                               MoveKind::ComponentRelocate,
                                               "subject relocated through the blocked strong "
                                               "component; its nice solo backfilled the home "
                                               "class"))
                        return true;
                }
            }
        }
    }
    return false;
}

bool RepairRun::move_cross() {
    if (access_.count != 3) return false;
    std::vector<bool> unmarked(static_cast<std::size_t>(r_), false);
    for (int home : access_.accessible_list) {
        if (home == small_) continue;
        for (int subject : members_by_weight(home, unmarked)) {
            for (int landing : access_.accessible_list) {
                if (landing == small_ || landing == home) continue;
                if (count_in(subject, landing, c_) != 0) continue;
                std::vector<VertexMove> moves{{subject, home, landing}};
                if (commit_if_progress(std::move(moves), landing, small_, nullptr,
                                           MoveKind::CrossMove,
                                           "heavy vertex crossed the accessible band; a witness "
                                           "dropped into the small class"))
                    return true;
            }
        }
    }
    return false;
}

bool RepairRun::move_composite_double_swap() {
    if (access_.count != 1 || core_list_.empty()) return false;
    std::vector<bool> unmarked(static_cast<std::size_t>(r_), false);
    std::vector<bool> marked(static_cast<std::size_t>(r_), false);
    for (int cls : access_.blocked_list) {
        if (!core_[cls]) marked[cls] = true;
    }
    std::vector<bool> avoid_base(static_cast<std::size_t>(r_), false);
    for (int cls = 0; cls < r_; ++cls) avoid_base[cls] = !core_[cls];
    for (int v : members_by_weight(small_, unmarked)) {
        SoloProfile pv = profile_checked(v);
        std::vector<int> free_core;
        for (int cls : core_list_) {
            if (pv.class_counts[cls] == 0) free_core.push_back(cls);
        }
        if (free_core.empty()) continue;
        // v's solos grouped by class, for the paired backfill.
        std::map<int, std::vector<int>> solos_of_v;
        for (int s : pv.solo) solos_of_v[c_.class_of(s)].push_back(s);
        for (int v2 : members_by_weight(small_, marked)) {
            if (v2 == v) continue;
            SoloProfile pv2 = profile_checked(v2);
            for (int z : pv2.solo) {
                int z_class = c_.class_of(z);
                if (!core_[z_class]) continue;
                for (const auto& [b_class, group] : solos_of_v) {
                    if (b_class == z_class) continue;
                    std::vector<int> clean;
                    for (int cand : group) {
                        if (!h_.has_edge(cand, z)) clean.push_back(cand);
                    }
                    if (clean.size() < 2) continue;
                    int z1 = clean[0];
                    int count_v2_b = pv2.class_counts[b_class];
                    bool v2_fits = count_v2_b == 0 || (count_v2_b == 1 && h_.has_edge(v2, z1));
                    if (!v2_fits) continue;
                    std::vector<bool> avoid = avoid_base;
                    avoid[b_class] = true;
                    for (int landing : free_core) {
                        if (avoid[landing]) continue;
                        std::vector<VertexMove> moves{{v, small_, landing},
                                                      {v2, small_, b_class},
                                                      {z, z_class, small_},
                                                      {z1, b_class, small_}};
                        if (commit_if_progress(std::move(moves), landing, z_class, &avoid,
                                                   MoveKind::CompositeDoubleSwap,
                                                   "two small-class vertices traded against a "
                                                   "solo pair; the remaining pair partner "
                                                   "certifies the new arc"))
                            return true;
                    }
                }
            }
        }
    }
    return false;
}

bool RepairRun::move_fallback_search() {
    // Pure small-class handoff along a witness path.
    for (int from : access_.accessible_list) {
        if (from == small_) continue;
        if (commit_if_progress({}, from, small_, nullptr, MoveKind::WitnessSwitch,
                               "small class handed along a witness path"))
            return true;
    }
    // Every legal single-vertex move, rebalanced by one witness-path switch.
    const int n = h_.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (v == x_) continue;
        int home = c_.class_of(v);
        if (home < 0) continue;
        for (int dest = 0; dest < r_; ++dest) {
            if (dest == home || count_in(v, dest, c_) != 0) continue;
            std::vector<VertexMove> moves{{v, home, dest}};
            if (commit_if_progress(std::move(moves), dest, home, nullptr,
                                       MoveKind::WitnessSwitch,
                                       "single relocation rebalanced by a witness path"))
                return true;
        }
    }
    // Cross-class exchanges: two vertices trade classes, sizes untouched.
    for (int u = 0; u < n; ++u) {
        int cu = c_.class_of(u);
        if (cu < 0) continue;
        for (int w = u + 1; w < n; ++w) {
            int cw = c_.class_of(w);
            if (cw < 0 || cw == cu) continue;
            int across = h_.has_edge(u, w) ? 1 : 0;
            if (count_in(u, cw, c_) != across || count_in(w, cu, c_) != across) continue;
            std::vector<VertexMove> moves{{u, cu, cw}, {w, cw, cu}};
            if (commit_if_progress(std::move(moves), -1, -1, nullptr, MoveKind::WitnessSwitch,
                                   "two vertices traded classes to free a class for the held "
                                   "vertex"))
                return true;
        }
    }
    // Solo swaps, optionally rebalanced by one witness-path switch.
    for (int home : access_.accessible_list) {
        for (int u : c_.members(home)) {
            SoloProfile p = profile_checked(u);
            for (int s : p.solo) {
                int s_class = c_.class_of(s);
                std::vector<int> targets{small_};
                for (int k = 0; k < r_; ++k) {
                    if (k != small_) targets.push_back(k);
                }
                for (int dest : targets) {
                    if (dest == home) continue;
                    int cnt = count_in(u, dest, c_);
                    bool fits = dest == s_class ? cnt == 1 : cnt == 0;
                    if (!fits) continue;
                    std::vector<VertexMove> moves{{s, s_class, home}, {u, home, dest}};
                    int path_from = (dest == small_ || dest == s_class) ? -1 : dest;
                    if (commit_if_progress(std::move(moves), path_from, s_class, nullptr,
                                               MoveKind::WitnessSwitch,
                                               "solo exchange rebalanced by a witness path"))
                        return true;
                }
            }
        }
    }
    return false;
}

void RepairRun::run() {
    emit(MoveKind::Eject, {{x_, small_, -1}}, 0, 0,
         "inserted edge closed inside one class; endpoint held aside");
    const int hard_stop = 2 * rounds_cap_ + 4;
    for (int round = 0; round < hard_stop; ++round) {
        rebuild();
        if (try_finish()) return;
        if (access_.count == 3 && relabel_small_classes()) continue;
        if (move_solo_promote()) continue;
        if (move_paired_solo_swap()) continue;
        if (move_component_relocate()) continue;
        if (move_cross()) continue;
        if (move_composite_double_swap()) continue;
        if (move_fallback_search()) continue;
        if (try_evacuation_finish()) return;
        throw RepairExhausted("no applicable repair move with " +
                              std::to_string(access_.count) + " of " + std::to_string(r_) +
                              " classes accessible while re-seating vertex " +
                              std::to_string(x_) + "; " + state_dump());
    }
    throw RepairExhausted("repair round limit reached while re-seating vertex " +
                          std::to_string(x_));
}

} // namespace

EngineResult equitable_color_run(const Graph& g, int r, const ClassParams& params,
                                 const EngineOptions& options) {
    if (r < 1) throw GuardError("class count must be positive");
    params.validate();
    const int n = g.vertex_count();

    EngineResult result;
    result.stats.strict = params.kind != ClassKind::DensityPair &&
                          r >= params.delta_threshold && g.max_degree() <= r &&
                          g.max_degree() >= params.delta_threshold &&
                          check_edge_budget(g, params, false).pass;

    PadResult padding = pad_for_divisibility(g, r);
    result.pad_vertices = padding.pad_vertices;
    const int total = n + static_cast<int>(padding.pad_vertices.size());

    Graph h(total);
    for (std::size_t i = 0; i < padding.pad_vertices.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            h.add_edge(padding.pad_vertices[j], padding.pad_vertices[i]);
        }
    }
    Coloring c(total, r);
    for (int v = 0; v < n; ++v) c.assign(v, v % r);
    int step = 0;
    for (int pad : padding.pad_vertices) {
        c.assign(pad, pad % r);
        if (options.collect_trace) {
            MoveRecord record;
            record.step = step++;
            record.kind = MoveKind::Pad;
            record.moves = {{pad, -1, pad % r}};
            record.justification = "pad placed to make the order divisible by the class count";
            result.trace.push_back(std::move(record));
        }
    }

    // On exhaustion or a tripped assertion, attach the trace so far: these
    // are exactly the runs whose evidence callers need to keep.
    auto rethrow_with_trace = [&](const std::exception& e, auto tag) -> void {
        std::string what = e.what();
        if (options.collect_trace && !result.trace.empty()) {
            what += "\ntrace:\n" + format_trace(result.trace);
        }
        throw decltype(tag)(what);
    };

    const int cap = options.max_repair_rounds > 0 ? options.max_repair_rounds : r + 1;
    for (const auto& edge : insertion_schedule(g)) {
        ++result.stats.insertions;
        h.add_edge(edge.x, edge.y);
        if (c.class_of(edge.x) != c.class_of(edge.y)) continue;
        ++result.stats.conflicts;
        RepairRun repair(h, c, edge.x, c.class_of(edge.x), n, params, result.stats.strict,
                         options.collect_trace, result.trace, step, result.stats, cap);
        c.unassign(edge.x);
        try {
            repair.run();
        } catch (const RepairExhausted& e) {
            rethrow_with_trace(e, RepairExhausted(""));
        } catch (const InvariantViolation& e) {
            rethrow_with_trace(e, InvariantViolation(""));
        }
    }

    auto padded_check = verify_coloring(h, c);
    if (!padded_check.valid()) {
        throw InvariantViolation("final padded coloring failed verification: " +
                                 padded_check.to_text());
    }
    result.padded_coloring = c;

    Coloring stripped(n, r);
    for (int v = 0; v < n; ++v) stripped.assign(v, c.class_of(v));
    auto check = verify_coloring(g, stripped);
    if (!check.valid()) {
        throw InvariantViolation("stripped coloring failed verification: " + check.to_text());
    }
    result.coloring = std::move(stripped);
    return result;
}

Coloring equitable_color(const Graph& g, int r, const ClassParams& params) {
    return equitable_color_run(g, r, params, {}).coloring;
}

} // namespace equicolor
