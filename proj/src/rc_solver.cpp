#include "rainbow/rc_solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace rainbow {

std::size_t PartialEdgeColoring::assigned_count() const {
    return static_cast<std::size_t>(
        std::count_if(colors_.begin(), colors_.end(), [](Color c) { return c != kUnassigned; }));
}

std::vector<std::pair<EdgeId, Color>> PartialEdgeColoring::entries() const {
    std::vector<std::pair<EdgeId, Color>> out;
    for (EdgeId e = 0; e < colors_.size(); ++e)
        if (colors_[e] != kUnassigned) out.emplace_back(e, colors_[e]);
    return out;
}

namespace {

constexpr std::size_t kMaxSearchColors = 64;

std::uint64_t full_domain(std::size_t k) {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw Error(std::string(what) + ": graph is disconnected");
}

/// Exact backtracking over edge colorings restricted to the candidate paths
/// of the target pairs. A pair is open while one of its candidate paths can
/// still become rainbow; a pair left with a single such path forces its
/// uncolored edges off the colors already on that path.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, std::size_t k, const std::vector<VertexPair>& targets,
                   std::vector<std::uint64_t> domains, bool symmetry, const SolverOptions& options)
        : g_(g), k_(k), symmetry_(symmetry), domain_(std::move(domains)),
          color_(g.edge_count(), kNone), edge_paths_(g.edge_count()) {
        pair_begin_.push_back(0);
        for (const auto& p : targets) {
            enumerate_paths(p, options.max_paths_per_pair);
            pair_begin_.push_back(static_cast<std::uint32_t>(path_begin_.size()));
        }
        path_begin_.push_back(static_cast<std::uint32_t>(path_edges_.size()));
        for (std::uint32_t p = 0; p + 1 < path_begin_.size(); ++p)
            for (auto i = path_begin_[p]; i < path_begin_[p + 1]; ++i) edge_paths_[path_edges_[i]].push_back(p);
        path_pair_.resize(path_begin_.size() - 1);
        for (std::uint32_t pair = 0; pair < targets.size(); ++pair)
            for (auto p = pair_begin_[pair]; p < pair_begin_[pair + 1]; ++p) path_pair_[p] = pair;
        satisfied_.assign(targets.size(), 0);
        pair_stamp_.assign(targets.size(), 0);
    }

    std::optional<EdgeColoring> run() {
        for (std::uint32_t i = 0; i + 1 < pair_begin_.size(); ++i)
            if (pair_begin_[i] == pair_begin_[i + 1]) return std::nullopt;
        std::vector<EdgeId> pending;
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (domain_[e] == 0) return std::nullopt;
            if (std::popcount(domain_[e]) == 1) {
                assign(e, static_cast<Color>(std::countr_zero(domain_[e])));
                pending.push_back(e);
            }
        }
        std::vector<std::uint32_t> all(pair_begin_.size() - 1);
        for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
        if (!propagate(all, pending)) return std::nullopt;
        if (!dfs()) return std::nullopt;
        std::vector<Color> out(g_.edge_count());
        for (EdgeId e = 0; e < out.size(); ++e)
            out[e] = color_[e] != kNone ? color_[e] : static_cast<Color>(std::countr_zero(domain_[e]));
        return EdgeColoring(std::move(out));
    }

private:
    static constexpr Color kNone = ~Color{0};
    enum class PathState { Dead, Rainbow, Open };
    enum class Slot { Color, Domain, Satisfied, MaxUsed };
    struct TrailEntry {
        Slot slot;
        std::uint32_t index;
        std::uint64_t old;
    };

    void enumerate_paths(const VertexPair& p, std::size_t cap) {
        const auto dist = bfs_distances(g_, p.v());
        const std::size_t before = path_begin_.size();
        std::vector<EdgeId> edges;
        std::vector<bool> on_path(g_.vertex_count(), false);
        auto walk = [&](auto&& self, Vertex x) -> void {
            if (x == p.v()) {
                if (path_begin_.size() - before >= cap) {
                    throw InstanceTooLarge("more than " + std::to_string(cap) +
                                           " candidate paths for pair (" + std::to_string(p.u()) + "," +
                                           std::to_string(p.v()) + ")");
                }
                path_begin_.push_back(static_cast<std::uint32_t>(path_edges_.size()));
                path_edges_.insert(path_edges_.end(), edges.begin(), edges.end());
                return;
            }
            on_path[x] = true;
            const auto nbrs = g_.neighbors(x);
            const auto inc = g_.incident_edges(x);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const Vertex w = nbrs[i];
                if (on_path[w] || dist[w] == kInfinity || edges.size() + 1 + dist[w] > k_) continue;
                edges.push_back(inc[i]);
                self(self, w);
                edges.pop_back();
            }
            on_path[x] = false;
        };
        walk(walk, p.u());
    }

    PathState path_state(std::uint32_t p) const {
        std::uint64_t used = 0;
        bool complete = true;
        for (auto i = path_begin_[p]; i < path_begin_[p + 1]; ++i) {
            const Color c = color_[path_edges_[i]];
            if (c == kNone) {
                complete = false;
                continue;
            }
            const std::uint64_t bit = std::uint64_t{1} << c;
            if (used & bit) return PathState::Dead;
            used |= bit;
        }
        if (complete) return PathState::Rainbow;
        for (auto i = path_begin_[p]; i < path_begin_[p + 1]; ++i) {
            const EdgeId e = path_edges_[i];
            if (color_[e] == kNone && (domain_[e] & ~used) == 0) return PathState::Dead;
        }
        return PathState::Open;
    }

    void set_domain(EdgeId e, std::uint64_t d) {
        trail_.push_back({Slot::Domain, e, domain_[e]});
        domain_[e] = d;
    }

    void assign(EdgeId e, Color c) {
        trail_.push_back({Slot::Color, e, color_[e]});
        color_[e] = c;
        set_domain(e, std::uint64_t{1} << c);
        if (static_cast<long>(c) > max_used_) {
            trail_.push_back({Slot::MaxUsed, 0, static_cast<std::uint64_t>(max_used_)});
            max_used_ = static_cast<long>(c);
        }
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const auto t = trail_.back();
            trail_.pop_back();
            switch (t.slot) {
                case Slot::Color: color_[t.index] = static_cast<Color>(t.old); break;
                case Slot::Domain: domain_[t.index] = t.old; break;
                case Slot::Satisfied: satisfied_[t.index] = static_cast<char>(t.old); break;
                case Slot::MaxUsed: max_used_ = static_cast<long>(t.old); break;
            }
        }
    }

    /// Re-examines a pair; returns false on conflict. Changed edges are
    /// appended to `changed`.
    bool revise(std::uint32_t pair, std::vector<EdgeId>& changed) {
        if (satisfied_[pair]) return true;
        std::size_t open = 0;
        std::uint32_t last_open = 0;
        for (auto p = pair_begin_[pair]; p < pair_begin_[pair + 1]; ++p) {
            switch (path_state(p)) {
                case PathState::Rainbow:
                    trail_.push_back({Slot::Satisfied, pair, 0});
                    satisfied_[pair] = 1;
                    return true;
                case PathState::Open:
                    ++open;
                    last_open = p;
                    break;
                case PathState::Dead: break;
            }
        }
        if (open == 0) return false;
        if (open > 1) return true;
        std::uint64_t used = 0;
        for (auto i = path_begin_[last_open]; i < path_begin_[last_open + 1]; ++i)
            if (color_[path_edges_[i]] != kNone) used |= std::uint64_t{1} << color_[path_edges_[i]];
        for (auto i = path_begin_[last_open]; i < path_begin_[last_open + 1]; ++i) {
            const EdgeId e = path_edges_[i];
            if (color_[e] != kNone) continue;
            const std::uint64_t d = domain_[e] & ~used;
            if (d == 0) return false;
            if (d == domain_[e]) continue;
            if (std::popcount(d) == 1) {
                const auto c = static_cast<Color>(std::countr_zero(d));
                assign(e, c);
                used |= d;
            } else {
                set_domain(e, d);
            }
            changed.push_back(e);
        }
        return true;
    }

    bool propagate(const std::vector<std::uint32_t>& initial_pairs, std::vector<EdgeId> changed) {
        ++stamp_;
        std::deque<std::uint32_t> queue;
        auto enqueue = [&](std::uint32_t pair) {
            if (pair_stamp_[pair] != stamp_ && !satisfied_[pair]) {
                pair_stamp_[pair] = stamp_;
                queue.push_back(pair);
            }
        };
        for (auto pair : initial_pairs) enqueue(pair);
        auto flush_changed = [&] {
            for (EdgeId e : changed)
                for (auto p : edge_paths_[e]) enqueue(path_pair(p));
            changed.clear();
        };
        flush_changed();
        while (!queue.empty()) {
            const auto pair = queue.front();
            queue.pop_front();
            pair_stamp_[pair] = 0;
            if (!revise(pair, changed)) return false;
            flush_changed();
        }
        return true;
    }

    std::uint32_t path_pair(std::uint32_t p) const { return path_pair_[p]; }

    /// Uncolored edge lying on open candidate paths of the most unsatisfied
    /// pairs (ties to the lower edge id); nullopt when every pair is satisfied.
    std::optional<EdgeId> choose_edge() {
        std::vector<std::uint32_t> score(g_.edge_count(), 0);
        std::vector<std::uint32_t> seen(g_.edge_count(), kNoPair);
        bool any_open = false;
        for (std::uint32_t pair = 0; pair + 1 < pair_begin_.size(); ++pair) {
            if (satisfied_[pair]) continue;
            any_open = true;
            for (auto p = pair_begin_[pair]; p < pair_begin_[pair + 1]; ++p) {
                if (path_state(p) != PathState::Open) continue;
                for (auto i = path_begin_[p]; i < path_begin_[p + 1]; ++i) {
                    const EdgeId e = path_edges_[i];
                    if (color_[e] == kNone && seen[e] != pair) {
                        seen[e] = pair;
                        ++score[e];
                    }
                }
            }
        }
        if (!any_open) return std::nullopt;
        const auto best = std::max_element(score.begin(), score.end());
        return static_cast<EdgeId>(best - score.begin());
    }

    bool dfs() {
        const auto e = choose_edge();
        if (!e) return true;
        const std::uint64_t domain = domain_[*e];
        for (Color c = 0; c < k_; ++c) {
            if (!(domain & (std::uint64_t{1} << c))) continue;
            if (symmetry_ && static_cast<long>(c) > max_used_ + 1) break;
            const std::size_t mark = trail_.size();
            assign(*e, c);
            if (propagate({}, {*e}) && dfs()) return true;
            undo(mark);
        }
        return false;
    }

    static constexpr std::uint32_t kNoPair = ~std::uint32_t{0};

    const Graph& g_;
    std::size_t k_;
    bool symmetry_;
    std::vector<std::uint64_t> domain_;
    std::vector<Color> color_;
    std::vector<std::uint32_t> pair_begin_;
    std::vector<std::uint32_t> path_begin_;
    std::vector<EdgeId> path_edges_;
    std::vector<std::vector<std::uint32_t>> edge_paths_;
    std::vector<std::uint32_t> path_pair_;
    std::vector<char> satisfied_;
    std::vector<std::uint32_t> pair_stamp_;
    std::uint32_t stamp_ = 0;
    long max_used_ = -1;
    std::vector<TrailEntry> trail_;
};

std::vector<VertexPair> non_adjacent(const Graph& g, const PairSet& pairs) {
    std::vector<VertexPair> out;
    for (const auto& p : pairs)
        if (!g.has_edge(p.u(), p.v())) out.push_back(p);
    return out;
}

std::optional<EdgeColoring> solve(const Graph& g, std::size_t k, const PairSet& pairs,
                                  std::vector<std::uint64_t> domains, bool symmetry,
                                  const SolverOptions& options) {
    if (k > kMaxSearchColors) {
        throw InstanceTooLarge("palette of " + std::to_string(k) + " colors exceeds the search limit of " +
                               std::to_string(kMaxSearchColors));
    }
    ColoringSearch search(g, k, non_adjacent(g, pairs), std::move(domains), symmetry, options);
    auto result = search.run();
    if (result && !pairs_rainbow_connected(g, *result, pairs)) {
        throw std::logic_error("coloring search produced an invalid witness");
    }
    return result;
}

}  // namespace

RcBounds rc_bounds(const Graph& g) {
    if (g.vertex_count() < 2) throw Error("rc_bounds: need at least 2 vertices");
    require_connected(g, "rc_bounds");
    return {std::max<std::size_t>(diameter(g), 1), g.vertex_count() - 1};
}

std::optional<std::size_t> closed_form_rc(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw Error("closed_form_rc: need at least 2 vertices");
    require_connected(g, "closed_form_rc");
    const std::size_t m = g.edge_count();
    if (m == n * (n - 1) / 2) return 1;
    if (m == n - 1) return n - 1;
    bool two_regular = true;
    for (Vertex v = 0; v < n; ++v) two_regular = two_regular && g.degree(v) == 2;
    if (two_regular && n > 3) return (n + 1) / 2;
    return std::nullopt;
}

EdgeColoring spanning_tree_coloring(const Graph& g) {
    require_connected(g, "spanning_tree_coloring");
    std::vector<Color> colors(g.edge_count(), 0);
    Color next = 0;
    for (EdgeId e : spanning_tree(g)) colors[e] = next++;
    return EdgeColoring(std::move(colors));
}

std::optional<EdgeColoring> decide_rc_leq(const Graph& g, std::size_t k, const SolverOptions& options) {
    require_connected(g, "decide_rc_leq");
    const std::size_t n = g.vertex_count();
    if (k < 1 || k + 1 > n) {
        throw Error("decide_rc_leq: k = " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
    }
    if (k == n - 1) return spanning_tree_coloring(g);
    return solve(g, k, all_pairs(n), std::vector<std::uint64_t>(g.edge_count(), full_domain(k)), true,
                 options);
}

SolveResult rc_exact(const Graph& g, const SolverOptions& options) {
    const auto bounds = rc_bounds(g);
    const std::size_t n = g.vertex_count();
    if (const auto rc = closed_form_rc(g)) {
        if (*rc == 1) return {1, EdgeColoring(std::vector<Color>(g.edge_count(), 0))};
        if (*rc == n - 1) return {*rc, spanning_tree_coloring(g)};
        auto witness = decide_rc_leq(g, *rc, options);
        if (!witness) throw std::logic_error("cycle closed form has no witness");
        return {*rc, std::move(*witness)};
    }
    for (std::size_t k = bounds.lower; k <= bounds.upper; ++k) {
        if (auto witness = decide_rc_leq(g, k, options)) return {k, std::move(*witness)};
    }
    throw std::logic_error("rc_exact: spanning-tree bound not attained");
}

std::optional<EdgeColoring> decide_subset_rc2(const Graph& g, const PairSet& pairs,
                                              const SolverOptions& options) {
    for (const auto& p : pairs) {
        if (!g.is_vertex(p.v())) {
            throw Error("pair (" + std::to_string(p.u()) + "," + std::to_string(p.v()) +
                        ") references a vertex outside the graph");
        }
    }
    return solve(g, 2, pairs, std::vector<std::uint64_t>(g.edge_count(), full_domain(2)), true, options);
}

std::optional<EdgeColoring> decide_extension_rc2(const Graph& g, const PartialEdgeColoring& partial,
                                                 const SolverOptions& options) {
    if (partial.size() != g.edge_count()) {
        throw Error("partial coloring covers " + std::to_string(partial.size()) + " edges but graph has " +
                    std::to_string(g.edge_count()));
    }
    std::vector<std::uint64_t> domains(g.edge_count(), full_domain(2));
    for (const auto& [e, c] : partial.entries()) {
        if (c > 1) throw Error("partial coloring uses color " + std::to_string(c) + " outside {0,1}");
        domains[e] = std::uint64_t{1} << c;
    }
    if (!is_connected(g)) return std::nullopt;
    return solve(g, 2, all_pairs(g.vertex_count()), std::move(domains), partial.assigned_count() == 0,
                 options);
}

}  // namespace rainbow
