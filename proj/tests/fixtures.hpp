#pragma once

#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_path.hpp"

namespace fixture {

using rainbow::Graph;
using rainbow::Vertex;
using rainbow::VertexPair;

inline Graph make(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    std::vector<VertexPair> out;
    for (const auto& [a, b] : edges) out.emplace_back(a, b);
    return Graph(n, std::move(out));
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - i+5.
inline Graph petersen() {
    std::vector<VertexPair> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(e));
}

/// Triangles {0,1,2} and {3,4,5} joined by edge 2-3.
inline Graph two_triangles() { return make(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

/// Center 0 with legs of lengths as even as possible over n-1 vertices.
inline Graph spider(std::size_t n, std::size_t legs) {
    std::vector<VertexPair> e;
    std::vector<Vertex> tip(legs, 0);
    for (Vertex v = 1; v < n; ++v) {
        const std::size_t leg = (v - 1) % legs;
        e.emplace_back(tip[leg], v);
        tip[leg] = v;
    }
    return Graph(n, std::move(e));
}

inline rainbow::EdgeColoring colors(std::initializer_list<rainbow::Color> c) {
    return rainbow::EdgeColoring(std::vector<rainbow::Color>(c));
}

}  // namespace fixture
