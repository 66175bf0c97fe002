#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Color = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Returned by distance queries for unreachable vertices.
inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

/// Unordered pair of distinct vertices, stored as (min, max).
class VertexPair {
public:
    VertexPair(Vertex a, Vertex b);

    Vertex u() const noexcept { return u_; }
    Vertex v() const noexcept { return v_; }

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;

private:
    Vertex u_;
    Vertex v_;
};

/// Simple undirected graph on vertices 0..n-1. Edge ids are positions in the
/// construction-order edge list and never change.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n, std::vector<VertexPair> edges = {});

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<VertexPair>& edges() const noexcept { return edges_; }
    const VertexPair& edge(EdgeId e) const { return edges_.at(e); }

    /// Neighbors of v in ascending id order.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    /// Edge ids parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const { return incident_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }
    std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;

    bool is_vertex(std::size_t v) const noexcept { return v < vertex_count(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<VertexPair> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// BFS distances from source; kInfinity for unreachable vertices.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Largest shortest-path distance, kInfinity if disconnected, 0 for n = 1.
std::size_t diameter(const Graph& g);
std::size_t min_degree(const Graph& g);
bool is_connected(const Graph& g);
std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v);

/// Edge ids of the BFS tree from vertex 0 (neighbors visited in ascending
/// id order), listed in discovery order. Throws on disconnected input.
std::vector<EdgeId> spanning_tree(const Graph& g);

/// Copy of g with one extra edge appended (id m).
Graph with_edge(const Graph& g, Vertex a, Vertex b);

// Deterministic generators. All randomness comes from std::mt19937_64
// seeded with the given seed; see random.hpp for the derived draws.

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// gen_gnp(n, p, seed) if its minimum degree is at least min_deg, else
/// nullopt. Rejects as soon as a vertex's degree is final and too small.
std::optional<Graph> gen_gnp_if_min_degree(std::size_t n, double p, std::uint64_t seed,
                                           std::size_t min_deg);

Graph gen_cycle(std::size_t k);
Graph gen_clique(std::size_t n);
/// Center 0 joined to 1..n-1.
Graph gen_star(std::size_t n);
Graph gen_path(std::size_t n);
/// Vertex i >= 1 attaches to a uniformly chosen earlier vertex.
Graph gen_random_tree(std::size_t n, std::uint64_t seed);

}  // namespace rainbow
