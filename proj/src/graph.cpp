#include "rainbow/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rainbow/random.hpp"

namespace rainbow {

VertexPair::VertexPair(Vertex a, Vertex b) : u_(std::min(a, b)), v_(std::max(a, b)) {
    if (a == b) throw Error("degenerate vertex pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Graph::Graph(std::size_t n, std::vector<VertexPair> edges)
    : edges_(std::move(edges)), adjacency_(n), incident_(n) {
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto [u, v] = std::pair{edges_[e].u(), edges_[e].v()};
        if (v >= n) {
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") references a vertex outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
        incident_[u].push_back(e);
        incident_[v].push_back(e);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& nbrs = adjacency_[v];
        auto& inc = incident_[v];
        std::vector<std::size_t> order(nbrs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return nbrs[a] < nbrs[b]; });
        std::vector<Vertex> sorted_nbrs;
        std::vector<EdgeId> sorted_inc;
        sorted_nbrs.reserve(order.size());
        sorted_inc.reserve(order.size());
        for (auto i : order) {
            if (!sorted_nbrs.empty() && sorted_nbrs.back() == nbrs[i]) {
                throw Error("duplicate edge (" + std::to_string(std::min<std::size_t>(v, nbrs[i])) + "," +
                            std::to_string(std::max<std::size_t>(v, nbrs[i])) + ")");
            }
            sorted_nbrs.push_back(nbrs[i]);
            sorted_inc.push_back(inc[i]);
        }
        nbrs = std::move(sorted_nbrs);
        inc = std::move(sorted_inc);
    }
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
    if (!is_vertex(a) || !is_vertex(b) || a == b) return std::nullopt;
    // Search the shorter list.
    if (adjacency_[a].size() > adjacency_[b].size()) std::swap(a, b);
    const auto& nbrs = adjacency_[a];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
    if (it == nbrs.end() || *it != b) return std::nullopt;
    return incident_[a][static_cast<std::size_t>(it - nbrs.begin())];
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::size_t> dist(g.vertex_count(), kInfinity);
    std::deque<Vertex> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] == kInfinity) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::size_t diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (auto d : bfs_distances(g, v)) {
            if (d == kInfinity) return kInfinity;
            best = std::max(best, d);
        }
    }
    return best;
}

std::size_t min_degree(const Graph& g) {
    std::size_t best = kInfinity;
    for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
    return g.vertex_count() == 0 ? 0 : best;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kInfinity; });
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
    if (!g.is_vertex(u) || !g.is_vertex(v)) throw Error("invalid vertex id");
    if (u == v) throw Error("common_neighbors requires distinct vertices");
    std::vector<Vertex> out;
    const auto a = g.neighbors(u);
    const auto b = g.neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<EdgeId> spanning_tree(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<EdgeId> tree;
    if (n == 0) return tree;
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        const auto nbrs = g.neighbors(v);
        const auto inc = g.incident_edges(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (!seen[nbrs[i]]) {
                seen[nbrs[i]] = true;
                tree.push_back(inc[i]);
                queue.push_back(nbrs[i]);
            }
        }
    }
    if (tree.size() + 1 != n) throw Error("spanning_tree: graph is disconnected");
    return tree;
}

Graph with_edge(const Graph& g, Vertex a, Vertex b) {
    auto edges = g.edges();
    edges.emplace_back(a, b);
    return Graph(g.vertex_count(), std::move(edges));
}

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0,1]");
}

}  // namespace

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw Error("gen_gnp: n must be at least 1");
    check_probability(p);
    Rng rng(seed);
    std::vector<VertexPair> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (uniform_unit(rng) < p) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

std::optional<Graph> gen_gnp_if_min_degree(std::size_t n, double p, std::uint64_t seed,
                                           std::size_t min_deg) {
    if (n < 1) throw Error("gen_gnp: n must be at least 1");
    check_probability(p);
    Rng rng(seed);
    std::vector<VertexPair> edges;
    std::vector<std::size_t> degree(n, 0);
    // Same draw order as gen_gnp. After row u every pair touching u is drawn.
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (uniform_unit(rng) < p) {
                edges.emplace_back(u, v);
                ++degree[u];
                ++degree[v];
            }
        }
        if (degree[u] < min_deg) return std::nullopt;
    }
    return Graph(n, std::move(edges));
}

Graph gen_cycle(std::size_t k) {
    if (k < 3) throw Error("gen_cycle: k must be at least 3");
    std::vector<VertexPair> edges;
    for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % k));
    return Graph(k, std::move(edges));
}

Graph gen_clique(std::size_t n) {
    if (n < 1) throw Error("gen_clique: n must be at least 1");
    std::vector<VertexPair> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph gen_star(std::size_t n) {
    if (n < 1) throw Error("gen_star: n must be at least 1");
    std::vector<VertexPair> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, std::move(edges));
}

Graph gen_path(std::size_t n) {
    if (n < 1) throw Error("gen_path: n must be at least 1");
    std::vector<VertexPair> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, std::move(edges));
}

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw Error("gen_random_tree: n must be at least 1");
    Rng rng(seed);
    std::vector<VertexPair> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(uniform_below(rng, v)), v);
    return Graph(n, std::move(edges));
}

}  // namespace rainbow
