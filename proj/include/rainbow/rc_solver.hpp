#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_path.hpp"

namespace rainbow {

/// Colors assigned to a subset of the edges of a fixed-size edge list.
class PartialEdgeColoring {
public:
    PartialEdgeColoring() = default;
    explicit PartialEdgeColoring(std::size_t edge_count) : colors_(edge_count, kUnassigned) {}

    std::size_t size() const noexcept { return colors_.size(); }
    bool is_assigned(EdgeId e) const { return colors_.at(e) != kUnassigned; }
    std::optional<Color> get(EdgeId e) const {
        const auto c = colors_.at(e);
        return c == kUnassigned ? std::nullopt : std::optional<Color>(c);
    }
    void assign(EdgeId e, Color c) { colors_.at(e) = c; }
    void clear(EdgeId e) { colors_.at(e) = kUnassigned; }

    std::size_t assigned_count() const;
    /// Assigned (edge, color) entries in edge-id order.
    std::vector<std::pair<EdgeId, Color>> entries() const;

    friend bool operator==(const PartialEdgeColoring&, const PartialEdgeColoring&) = default;

private:
    static constexpr Color kUnassigned = ~Color{0};
    std::vector<Color> colors_;
};

class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

struct SolverOptions {
    /// Per-pair cap on enumerated candidate paths; exceeding it throws
    /// InstanceTooLarge.
    std::size_t max_paths_per_pair = 50'000;
};

struct SolveResult {
    std::size_t rc = 0;
    EdgeColoring witness;
};

struct RcBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
};

/// diam(G) <= rc(G) <= n-1. Requires a connected graph with n >= 2.
RcBounds rc_bounds(const Graph& g);

/// rc for cliques (1), trees (n-1) and cycles C_k, k > 3 (ceil(k/2)).
std::optional<std::size_t> closed_form_rc(const Graph& g);

/// Distinct colors 0..n-2 on the BFS tree edges, color 0 elsewhere.
EdgeColoring spanning_tree_coloring(const Graph& g);

/// A coloring with at most k colors that makes g rainbow connected, if any.
std::optional<EdgeColoring> decide_rc_leq(const Graph& g, std::size_t k,
                                          const SolverOptions& options = {});

SolveResult rc_exact(const Graph& g, const SolverOptions& options = {});

/// 2-coloring under which every listed pair has a rainbow path.
std::optional<EdgeColoring> decide_subset_rc2(const Graph& g, const PairSet& pairs,
                                              const SolverOptions& options = {});

/// Completion of a partial {0,1}-coloring that makes g rainbow connected.
std::optional<EdgeColoring> decide_extension_rc2(const Graph& g, const PartialEdgeColoring& partial,
                                                 const SolverOptions& options = {});

}  // namespace rainbow
