#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Total assignment of a color id to every edge id.
class EdgeColoring {
public:
    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    std::size_t size() const noexcept { return colors_.size(); }
    Color operator[](EdgeId e) const { return colors_.at(e); }
    void set(EdgeId e, Color c) { colors_.at(e) = c; }
    const std::vector<Color>& colors() const noexcept { return colors_; }

    /// Number of distinct color ids in use.
    std::size_t palette_size() const;
    /// One past the largest color id (0 for an empty coloring).
    std::size_t color_bound() const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::vector<Color> colors_;
};

/// Set of unordered vertex pairs, iterated in lexicographic order.
using PairSet = std::set<VertexPair>;

/// All C(n,2) pairs of 0..n-1.
PairSet all_pairs(std::size_t n);

struct RainbowPath {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edge_ids;

    std::size_t length() const noexcept { return edge_ids.size(); }
};

struct SearchOptions {
    /// Palettes up to this size use the (vertex, used-color-set) failure memo.
    std::size_t memo_palette_limit = 24;
};

/// Rainbow s-t path if one exists. Exact.
std::optional<RainbowPath> find_rainbow_path(const Graph& g, const EdgeColoring& chi, Vertex s,
                                             Vertex t, const SearchOptions& options = {});

/// Outcome of a connectivity check; `failing` is the lexicographically first
/// pair without a rainbow path.
struct Verdict {
    bool ok = true;
    std::optional<VertexPair> failing;

    explicit operator bool() const noexcept { return ok; }
};

Verdict is_rainbow_connected(const Graph& g, const EdgeColoring& chi,
                             const SearchOptions& options = {});
Verdict pairs_rainbow_connected(const Graph& g, const EdgeColoring& chi, const PairSet& pairs,
                                const SearchOptions& options = {});

/// Structural check of a claimed rainbow path (adjacency, simplicity,
/// distinct colors, endpoints).
bool is_rainbow_path(const Graph& g, const EdgeColoring& chi, const RainbowPath& path, Vertex s,
                     Vertex t);

}  // namespace rainbow
