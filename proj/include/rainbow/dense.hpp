#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_path.hpp"
#include "rainbow/rc_solver.hpp"

namespace rainbow {

/// Exact rational used for every failure bound.
using Rational = boost::multiprecision::cpp_rational;

// Random 3-colorings of diameter-2 graphs with minimum degree at least
// 8 log2 n are rainbow connected with high probability. Each non-adjacent
// pair gets a fixed family of witness paths; the probability that none of
// them turns rainbow under a uniform completion of a partial coloring is
// computed exactly and drives the conditional-expectation colorer.

/// ceil(c * log2 n), exact for powers of two.
std::size_t log2_threshold(std::size_t n, unsigned multiplier);

struct DensePreconditions {
    bool ok = true;
    std::string message;  ///< names the failed condition, e.g. "min degree 1 < 80"
    std::optional<Vertex> vertex;
    std::optional<VertexPair> pair;

    explicit operator bool() const noexcept { return ok; }
};

/// diameter <= 2 and min degree >= 8 log2 n.
DensePreconditions check_dense_preconditions(const Graph& g);

enum class WitnessCase { Adjacent, Common, Bridged };

struct WitnessPath {
    std::vector<Vertex> vertices;  ///< u..v
    std::vector<EdgeId> edges;     ///< bridged: (u,x), (x,b(x)), (b(x),v)
};

struct PairWitness {
    VertexPair pair{0, 1};
    WitnessCase kind = WitnessCase::Adjacent;
    std::vector<WitnessPath> paths;
};

class NoWitnessError : public Error {
public:
    NoWitnessError(VertexPair pair, const std::string& what) : Error(what), pair_(pair) {}
    VertexPair pair() const noexcept { return pair_; }

private:
    VertexPair pair_;
};

class CertificateError : public Error {
public:
    using Error::Error;
};

/// Frozen per-pair witness paths.
class WitnessFamily {
public:
    /// Validates endpoints, edge ids, and that private edges (every edge of a
    /// common path; the first two edges of a bridged path) are distinct
    /// within each pair's family and never coincide with a shared edge.
    WitnessFamily(const Graph& g, std::vector<PairWitness> witnesses);

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<PairWitness>& witnesses() const noexcept { return witnesses_; }
    const PairWitness* find(VertexPair pair) const;
    /// Pairs (indices into witnesses()) whose paths use edge e.
    const std::vector<std::uint32_t>& pairs_using(EdgeId e) const { return by_edge_.at(e); }
    std::size_t max_paths() const noexcept { return max_paths_; }

private:
    std::size_t n_;
    std::vector<PairWitness> witnesses_;
    std::vector<std::vector<std::uint32_t>> by_edge_;
    std::size_t max_paths_ = 0;
};

/// Adjacent / common (first ceil(2 log2 n) common neighbors) / bridged
/// (first ceil(6 log2 n) x in N(u)\N(v), b(x) the lowest neighbor of x in
/// N(v)\N(u), else in N(u)&N(v)) for every pair. Throws NoWitnessError.
WitnessFamily build_witness_family(const Graph& g);

/// Probability that no witness path of `pair` is rainbow when the uncolored
/// edges are completed uniformly from {0,1,2}.
Rational pair_failure_bound(const WitnessFamily& family, VertexPair pair, const PartialEdgeColoring& partial);

/// Sum over pairs of min(1, pair_failure_bound).
Rational expected_failures_bound(const WitnessFamily& family, const PartialEdgeColoring& partial);

EdgeColoring random_3_coloring(const Graph& g, std::uint64_t seed);

/// Called after each edge is fixed with the edge id and the bound reached.
using BoundObserver = std::function<void(EdgeId, const Rational&)>;

/// Colors edges in id order, each with the color in {0,1,2} minimizing
/// expected_failures_bound (ties to the smaller color). Throws
/// CertificateError when the initial bound is not below 1.
EdgeColoring derandomized_3_coloring(const Graph& g, const BoundObserver& observer = {});
EdgeColoring derandomized_3_coloring(const Graph& g, const WitnessFamily& family,
                                     const BoundObserver& observer = {});

}  // namespace rainbow
