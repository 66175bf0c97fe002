#include "rainbow/rainbow_path.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace rainbow {

std::size_t EdgeColoring::palette_size() const {
    std::vector<Color> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::size_t EdgeColoring::color_bound() const {
    if (colors_.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(colors_.begin(), colors_.end())) + 1;
}

PairSet all_pairs(std::size_t n) {
    PairSet out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.emplace_hint(out.end(), u, v);
    return out;
}

namespace {

/// Length caps dist, dist+1, ... tried before the uncapped path search.
constexpr std::size_t kShallowCaps = 3;

/// Depth-first rainbow search towards a fixed target. Colors are renumbered
/// densely; neighbors are tried closest-to-target first, and a branch is cut
/// when the colors already used plus the remaining distance exceed the
/// palette. With a small palette the search runs over rainbow walks (a
/// rainbow walk always contains a rainbow path) so that failure of a
/// (vertex, used-colors) state is target-determined and can be memoized
/// across every source. Larger palettes search simple paths, first with a
/// few shallow length caps so that short paths are found before deep
/// branches are explored, and cut a branch once the target is unreachable
/// over unvisited vertices and unused colors.
class PathSearcher {
public:
    PathSearcher(const Graph& g, const EdgeColoring& chi, const SearchOptions& options) : g_(g) {
        if (chi.size() != g.edge_count()) {
            throw Error("coloring has " + std::to_string(chi.size()) + " entries but graph has " +
                        std::to_string(g.edge_count()) + " edges");
        }
        std::unordered_map<Color, std::uint32_t> index;
        color_.reserve(chi.size());
        for (EdgeId e = 0; e < chi.size(); ++e) {
            auto [it, inserted] = index.try_emplace(chi[e], static_cast<std::uint32_t>(index.size()));
            color_.push_back(it->second);
        }
        palette_ = index.size();
        memo_ = palette_ <= std::min<std::size_t>(options.memo_palette_limit, 32);
    }

    void set_target(Vertex target) {
        target_ = target;
        dist_ = bfs_distances(g_, target);
        order_.assign(g_.vertex_count(), {});
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            const auto nbrs = g_.neighbors(v);
            auto& ord = order_[v];
            for (std::uint32_t i = 0; i < nbrs.size(); ++i)
                if (dist_[nbrs[i]] != kInfinity) ord.push_back(i);
            // Stable: ties keep ascending vertex id.
            std::stable_sort(ord.begin(), ord.end(),
                             [&](auto a, auto b) { return dist_[nbrs[a]] < dist_[nbrs[b]]; });
        }
        failed_dense_.clear();
        failed_sparse_.clear();
        if (memo_ && (g_.vertex_count() << palette_) <= (std::size_t{1} << 26)) {
            failed_dense_.assign(g_.vertex_count() << palette_, false);
        }
    }

    std::optional<RainbowPath> search(Vertex source) {
        if (source == target_) throw Error("rainbow path endpoints must differ");
        if (dist_[source] == kInfinity || dist_[source] > palette_) return std::nullopt;
        if (memo_) return search_walks(source);
        for (std::size_t cap = dist_[source]; cap < std::min(palette_, dist_[source] + kShallowCaps); ++cap)
            if (auto path = search_paths(source, cap)) return path;
        return search_paths(source, palette_);
    }

private:
    struct Frame {
        Vertex v;
        std::uint64_t mask;
        std::size_t next;
        EdgeId via;
    };

    bool failed(Vertex v, std::uint64_t mask) const {
        if (!failed_dense_.empty()) return failed_dense_[(std::size_t{v} << palette_) | mask];
        return failed_sparse_.contains((std::uint64_t{v} << palette_) | mask);
    }

    void mark_failed(Vertex v, std::uint64_t mask) {
        if (!failed_dense_.empty()) {
            failed_dense_[(std::size_t{v} << palette_) | mask] = true;
        } else {
            failed_sparse_.insert((std::uint64_t{v} << palette_) | mask);
        }
    }

    std::optional<RainbowPath> search_walks(Vertex source) {
        if (failed(source, 0)) return std::nullopt;
        std::vector<Frame> stack{{source, 0, 0, 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& ord = order_[f.v];
            if (f.next == ord.size()) {
                mark_failed(f.v, f.mask);
                stack.pop_back();
                continue;
            }
            const std::uint32_t i = ord[f.next++];
            const Vertex w = g_.neighbors(f.v)[i];
            const EdgeId e = g_.incident_edges(f.v)[i];
            const std::uint64_t bit = std::uint64_t{1} << color_[e];
            if (f.mask & bit) continue;
            const std::uint64_t mask = f.mask | bit;
            const auto used = static_cast<std::size_t>(std::popcount(mask));
            if (used + dist_[w] > palette_) {
                f.next = ord.size();  // remaining neighbors are no closer
                continue;
            }
            if (w == target_) {
                stack.push_back({w, mask, 0, e});
                return loop_erased(stack);
            }
            if (failed(w, mask)) continue;
            stack.push_back({w, mask, 0, e});
        }
        return std::nullopt;
    }

    /// Simple rainbow paths of at most `cap` edges.
    std::optional<RainbowPath> search_paths(Vertex source, std::size_t cap) {
        std::vector<bool> visited(g_.vertex_count(), false);
        std::vector<bool> used(palette_, false);
        std::size_t used_count = 0;
        std::vector<Frame> stack{{source, 0, 0, 0}};
        visited[source] = true;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& ord = order_[f.v];
            if (f.next == ord.size()) {
                visited[f.v] = false;
                if (stack.size() > 1) {
                    used[color_[f.via]] = false;
                    --used_count;
                }
                stack.pop_back();
                continue;
            }
            const std::uint32_t i = ord[f.next++];
            const Vertex w = g_.neighbors(f.v)[i];
            const EdgeId e = g_.incident_edges(f.v)[i];
            if (visited[w] || used[color_[e]]) continue;
            if (used_count + 1 + dist_[w] > cap) {
                f.next = ord.size();
                continue;
            }
            if (w != target_ && !reachable(w, visited, used, color_[e])) continue;
            stack.push_back({w, 0, 0, e});
            if (w == target_) return loop_erased(stack);
            visited[w] = true;
            used[color_[e]] = true;
            ++used_count;
        }
        return std::nullopt;
    }

    /// Whether the target can still be reached from `from` through unvisited
    /// vertices over edges whose colors are unused (`extra` counts as used).
    /// A necessary condition for extending the current path.
    bool reachable(Vertex from, const std::vector<bool>& visited, const std::vector<bool>& used,
                   std::uint32_t extra) {
        if (++stamp_ == 0) {
            std::fill(seen_.begin(), seen_.end(), 0);
            stamp_ = 1;
        }
        seen_.resize(g_.vertex_count(), 0);
        queue_.clear();
        queue_.push_back(from);
        seen_[from] = stamp_;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const Vertex x = queue_[head];
            const auto nbrs = g_.neighbors(x);
            const auto inc = g_.incident_edges(x);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const Vertex y = nbrs[i];
                const auto c = color_[inc[i]];
                if (seen_[y] == stamp_ || visited[y] || used[c] || c == extra) continue;
                if (y == target_) return true;
                seen_[y] = stamp_;
                queue_.push_back(y);
            }
        }
        return false;
    }

    RainbowPath loop_erased(const std::vector<Frame>& stack) const {
        RainbowPath path;
        std::unordered_map<Vertex, std::size_t> position;
        for (std::size_t i = 0; i < stack.size(); ++i) {
            const Vertex v = stack[i].v;
            if (auto it = position.find(v); it != position.end()) {
                const std::size_t keep = it->second + 1;
                for (std::size_t j = keep; j < path.vertices.size(); ++j) position.erase(path.vertices[j]);
                path.vertices.resize(keep);
                path.edge_ids.resize(keep - 1);
                continue;
            }
            if (i > 0) path.edge_ids.push_back(stack[i].via);
            position[v] = path.vertices.size();
            path.vertices.push_back(v);
        }
        return path;
    }

    const Graph& g_;
    std::vector<std::uint32_t> color_;
    std::size_t palette_ = 0;
    bool memo_ = false;
    Vertex target_ = 0;
    std::vector<std::size_t> dist_;
    std::vector<std::vector<std::uint32_t>> order_;
    std::vector<bool> failed_dense_;
    std::unordered_set<std::uint64_t> failed_sparse_;
    std::vector<std::uint32_t> seen_;
    std::vector<Vertex> queue_;
    std::uint32_t stamp_ = 0;
};

void check_vertex(const Graph& g, Vertex v) {
    if (!g.is_vertex(v)) throw Error("invalid vertex id " + std::to_string(v));
}


}  // namespace

std::optional<RainbowPath> find_rainbow_path(const Graph& g, const EdgeColoring& chi, Vertex s,
                                             Vertex t, const SearchOptions& options) {
    check_vertex(g, s);
    check_vertex(g, t);
    if (s == t) throw Error("rainbow path endpoints must differ");
    PathSearcher searcher(g, chi, options);
    searcher.set_target(t);
    return searcher.search(s);
}

Verdict pairs_rainbow_connected(const Graph& g, const EdgeColoring& chi, const PairSet& pairs,
                                const SearchOptions& options) {
    PathSearcher searcher(g, chi, options);
    std::optional<Vertex> target;
    // Pairs arrive grouped by u; searching v -> u shares the target-side state.
    for (const auto& p : pairs) {
        check_vertex(g, p.u());
        check_vertex(g, p.v());
        if (target != p.u()) {
            searcher.set_target(p.u());
            target = p.u();
        }
        if (!searcher.search(p.v())) return {false, p};
    }
    return {};
}

Verdict is_rainbow_connected(const Graph& g, const EdgeColoring& chi, const SearchOptions& options) {
    const std::size_t n = g.vertex_count();
    if (chi.size() != g.edge_count()) {
        throw Error("coloring has " + std::to_string(chi.size()) + " entries but graph has " +
                    std::to_string(g.edge_count()) + " edges");
    }
    PathSearcher searcher(g, chi, options);
    for (Vertex u = 0; u + 1 < n; ++u) {
        searcher.set_target(u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (!searcher.search(v)) return {false, VertexPair(u, v)};
        }
    }
    return {};
}

bool is_rainbow_path(const Graph& g, const EdgeColoring& chi, const RainbowPath& path, Vertex s,
                     Vertex t) {
    const auto& vs = path.vertices;
    if (vs.size() < 2 || path.edge_ids.size() + 1 != vs.size()) return false;
    if (vs.front() != s || vs.back() != t) return false;
    std::set<Vertex> seen(vs.begin(), vs.end());
    if (seen.size() != vs.size()) return false;
    std::set<Color> colors;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const auto e = g.edge_id(vs[i], vs[i + 1]);
        if (!e || *e != path.edge_ids[i]) return false;
        if (!colors.insert(chi[*e]).second) return false;
    }
    return true;
}

}  // namespace rainbow
