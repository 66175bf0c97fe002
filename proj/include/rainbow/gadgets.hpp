#pragma once

#include <cstddef>
#include <vector>

#include "rainbow/cnf.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/rainbow_path.hpp"
#include "rainbow/rc_solver.hpp"

namespace rainbow {

// Answer-preserving constructions between the rainbow-connectivity problems
// and 3-SAT. Original vertex and edge ids are always kept; new vertices and
// edges are appended in the order documented on each function.

struct ExtensionInstance {
    Graph graph;
    PartialEdgeColoring partial;
};

struct SubsetInstance {
    Graph graph;
    PairSet pairs;
};

struct StInstance {
    Graph graph;
    EdgeColoring coloring;
    Vertex s = 0;
    Vertex t = 0;
};

struct ColoredGraph {
    Graph graph;
    EdgeColoring coloring;
};

/// Satisfiable iff the partial coloring extends to a rainbow 2-coloring.
///
/// Vertices: clauses 0..m-1, variables m..m+n-1, apex m+n. Edges, in order:
/// clause-variable for each distinct variable of each clause (color 0 when
/// the literal is positive, 1 when negative), variable-apex (uncolored),
/// clause clique, variable clique (both color 0). Requires both polarities
/// for every variable and no tautological clause.
ExtensionInstance reduce_sat_to_extension(const CnfFormula& phi);

/// Extension instance -> subset instance with the same answer.
///
/// Vertices n, n+1, n+2 are b1, c, b2; then one c_e per pre-colored edge in
/// edge-id order. Color 0 edges belong to b1, color 1 edges to b2; low(e) is
/// the smaller endpoint.
SubsetInstance reduce_extension_to_subset(const Graph& g, const PartialEdgeColoring& partial);

/// Subset instance -> graph with rc = 2 iff the subset instance is solvable.
///
/// x_v = n + v; then one vertex per unordered pair of V outside `pairs`, in
/// lexicographic order. The new vertices form a clique.
Graph reduce_subset_to_rc2(const Graph& g, const PairSet& pairs);

/// Gadget path that replaces one literal occurrence in the s-t construction.
struct LiteralPath {
    std::size_t clause = 0;
    std::size_t position = 0;
    Literal literal;
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

struct StGadget {
    StInstance instance;
    std::vector<LiteralPath> literal_paths;  ///< in (clause, position) order
};

/// Layered s-t gadget: a rainbow s-t path exists iff phi is satisfiable.
///
/// s = 0; each occurrence (clause, position) contributes a path of l+1
/// vertices (positive literal, l = negative occurrences of its variable) or
/// k+1 vertices (negative literal, k = positive occurrences); t is the last
/// vertex. Gadget path edges come first, then layer-crossing edges layer by
/// layer. Shared colors alpha(j,a,b) take ids in (j,a,b) order, crossing
/// edges get fresh ids after them.
StGadget build_sat_st_gadget(const CnfFormula& phi);
StInstance reduce_sat_to_st(const CnfFormula& phi);

/// Colored graph that is rainbow connected iff the instance has a rainbow
/// s-t path.
///
/// Original ids are kept. Then s', t', b, the shadow s^1, shadows v^1, v^2
/// of each inner vertex in ascending id order, and t^2 (3n+1 vertices in
/// total). Special colors c1..c4 are the four ids after the input's largest.
ColoredGraph reduce_st_to_connectivity(const StInstance& inst);

/// Replace every edge by a path of k/2 edges; k even, k >= 2. The fresh
/// vertices of edge e are appended in edge-id order.
Graph subdivide_even_k(const Graph& g, std::size_t k);

}  // namespace rainbow
