#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rainbow/gadgets.hpp"
#include "rainbow/random.hpp"

using namespace rainbow;
using fixture::make;

namespace {

Clause clause(int a, int b, int c) {
    auto lit = [](int x) { return Literal{static_cast<std::size_t>(x < 0 ? -x : x), x < 0}; };
    return Clause{lit(a), lit(b), lit(c)};
}

const CnfFormula kSat(2, {clause(1, 2, 2), clause(-1, -2, -2)});
const CnfFormula kUnsat(1, {clause(1, 1, 1), clause(-1, -1, -1)});

}  // namespace

TEST_CASE("sat to extension layout") {
    const auto inst = reduce_sat_to_extension(kSat);
    CHECK(inst.graph.vertex_count() == 5);
    // Vertices: clauses 0,1; x = 2, y = 3; apex 4.
    CHECK(inst.partial.size() - inst.partial.assigned_count() == 2);
    const auto e = inst.graph.edge_id(1, 3);
    REQUIRE(e);
    CHECK(inst.partial.get(*e) == std::optional<Color>(1));
    CHECK(inst.partial.get(*inst.graph.edge_id(0, 2)) == std::optional<Color>(0));
    CHECK_FALSE(inst.partial.is_assigned(*inst.graph.edge_id(2, 4)));
    CHECK(inst.partial.get(*inst.graph.edge_id(0, 1)) == std::optional<Color>(0));
    CHECK(inst.partial.get(*inst.graph.edge_id(2, 3)) == std::optional<Color>(0));
    CHECK(decide_extension_rc2(inst.graph, inst.partial));
    CHECK_FALSE(decide_extension_rc2(reduce_sat_to_extension(kUnsat).graph, reduce_sat_to_extension(kUnsat).partial));
}

TEST_CASE("sat to extension rejects bad formulas") {
    CHECK_THROWS_AS(reduce_sat_to_extension(CnfFormula(1, {clause(1, 1, 1)})), Error);
    CHECK_THROWS_AS(reduce_sat_to_extension(CnfFormula(1, {clause(1, -1, 1), clause(-1, -1, -1)})), Error);
}

TEST_CASE("extension to subset layout") {
    PartialEdgeColoring partial(2);
    partial.assign(0, 0);
    const auto inst = reduce_extension_to_subset(gen_path(3), partial);
    CHECK(inst.graph.vertex_count() == 7);
    CHECK(inst.pairs.size() == 7);
    CHECK(inst.graph.has_edge(3, 4));  // b1 - c
    CHECK(inst.graph.has_edge(4, 5));  // c - b2
    CHECK(inst.graph.has_edge(3, 6));  // b1 - c_e
    CHECK(inst.graph.has_edge(6, 0));  // c_e - low(e)
    CHECK(inst.pairs.contains({4, 6}));
    CHECK(inst.pairs.contains({3, 0}));
    CHECK(inst.pairs.contains({6, 1}));
    CHECK(inst.pairs.contains({3, 5}));
    CHECK(decide_extension_rc2(gen_path(3), partial));
    CHECK(decide_subset_rc2(inst.graph, inst.pairs));

    const auto empty = reduce_extension_to_subset(gen_path(3), PartialEdgeColoring(2));
    CHECK(empty.graph.vertex_count() == 6);
    PairSet expected = all_pairs(3);
    expected.insert({3, 5});
    CHECK(empty.pairs == expected);
}

TEST_CASE("extension to subset: shared low endpoint breaks the equivalence") {
    // Path 1-0-2 with both edges pre-colored 0 has no extension, but the
    // pair {b1, 0} is served by either c_e, so the subset instance is yes.
    const Graph g = make(3, {{0, 1}, {0, 2}});
    PartialEdgeColoring partial(2);
    partial.assign(0, 0);
    partial.assign(1, 0);
    CHECK_FALSE(oracle::exists_coloring(g, 2, oracle::every_pair(3), {0, 0}));
    const auto inst = reduce_extension_to_subset(g, partial);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& p : inst.pairs) pairs.emplace_back(p.u(), p.v());
    CHECK(oracle::exists_coloring(inst.graph, 2, pairs, std::vector<std::optional<Color>>(inst.graph.edge_count())));
}

TEST_CASE("extension to subset agrees when low endpoints are distinct per color") {
    Rng rng(31);
    int checked = 0;
    for (const auto& g : oracle::connected_labeled_graphs(4)) {
        for (int i = 0; i < 3; ++i) {
            PartialEdgeColoring partial(g.edge_count());
            std::vector<std::optional<Color>> fixed(g.edge_count());
            std::set<std::pair<Vertex, Color>> lows;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (uniform_below(rng, 2) == 0) continue;
                const auto c = static_cast<Color>(uniform_below(rng, 2));
                if (!lows.emplace(g.edge(e).u(), c).second) continue;
                partial.assign(e, c);
                fixed[e] = c;
            }
            const bool lhs = oracle::exists_coloring(g, 2, oracle::every_pair(4), fixed);
            const auto inst = reduce_extension_to_subset(g, partial);
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (const auto& p : inst.pairs) pairs.emplace_back(p.u(), p.v());
            const bool rhs =
                oracle::exists_coloring(inst.graph, 2, pairs, std::vector<std::optional<Color>>(inst.graph.edge_count()));
            CHECK(lhs == rhs);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("subset to rc2 layout") {
    const Graph g = reduce_subset_to_rc2(gen_path(3), {{0, 2}});
    CHECK(g.vertex_count() == 8);
    for (Vertex v = 0; v < 3; ++v) CHECK(g.has_edge(v, 3 + v));
    CHECK(g.has_edge(0, 6));  // non-pair {0,1}
    CHECK(g.has_edge(1, 6));
    CHECK(g.has_edge(1, 7));  // non-pair {1,2}
    CHECK(g.has_edge(2, 7));
    for (Vertex a = 3; a < 8; ++a)
        for (Vertex b = a + 1; b < 8; ++b) CHECK(g.has_edge(a, b));
    CHECK(reduce_subset_to_rc2(gen_path(4), all_pairs(4)).vertex_count() == 8);
    CHECK_THROWS_AS(reduce_subset_to_rc2(gen_path(3), {{0, 5}}), Error);
}

TEST_CASE("s-t gadget colors") {
    const auto gadget = build_sat_st_gadget(kSat);
    REQUIRE(gadget.literal_paths.size() == 6);
    std::map<Color, int> uses;
    const auto& chi = gadget.instance.coloring;
    for (const auto& p : gadget.literal_paths)
        for (EdgeId e : p.edges) ++uses[chi[e]];
    // x: k = l = 1 gives one shared color; y: k = l = 2 gives four. Each
    // shared color sits on one positive and one negative occurrence path.
    CHECK(uses.size() == 5);
    for (const auto& [c, count] : uses) CHECK(count == 2);
    // The x-path of clause 0 and the not-x path of clause 1 share a color.
    const auto& px = gadget.literal_paths[0];
    const auto& pnx = gadget.literal_paths[3];
    REQUIRE(px.edges.size() == 1);
    REQUIRE(pnx.edges.size() == 1);
    CHECK(chi[px.edges[0]] == chi[pnx.edges[0]]);
    CHECK(gadget.instance.s == 0);
    CHECK(gadget.instance.t == gadget.instance.graph.vertex_count() - 1);
    CHECK(find_rainbow_path(gadget.instance.graph, chi, gadget.instance.s, gadget.instance.t));
    CHECK_THROWS_AS(reduce_sat_to_st(CnfFormula(1, {clause(1, 1, 1)})), Error);
}

TEST_CASE("s-t gadget multi-occurrence shared colors") {
    // x occurs positively 5 times and negatively once.
    const CnfFormula phi(1, {clause(1, 1, 1), clause(-1, 1, 1)});
    const auto gadget = build_sat_st_gadget(phi);
    const auto& chi = gadget.instance.coloring;
    CHECK(gadget.literal_paths[3].edges.size() == 5);
    for (std::size_t i = 0; i < gadget.literal_paths.size(); ++i) {
        if (i == 3) continue;
        CHECK(gadget.literal_paths[i].edges.size() == 1);
    }
    // The negative path's a-th edge equals the a-th positive occurrence's edge color.
    std::size_t a = 0;
    for (std::size_t i = 0; i < gadget.literal_paths.size(); ++i) {
        if (i == 3) continue;
        CHECK(chi[gadget.literal_paths[i].edges[0]] == chi[gadget.literal_paths[3].edges[a]]);
        ++a;
    }
}

TEST_CASE("st to connectivity layout") {
    const StInstance inst{gen_path(4), EdgeColoring(std::vector<Color>{0, 1, 2}), 0, 3};
    const auto out = reduce_st_to_connectivity(inst);
    CHECK(out.graph.vertex_count() == 3 * 4 + 1);
    CHECK(out.coloring.size() == out.graph.edge_count());
    for (EdgeId e = 0; e < 3; ++e) {
        CHECK(out.graph.edge(e) == inst.graph.edge(e));
        CHECK(out.coloring[e] == inst.coloring[e]);
    }
    CHECK(is_rainbow_connected(out.graph, out.coloring));
    const StInstance blocked{gen_path(4), EdgeColoring(std::vector<Color>{0, 1, 0}), 0, 3};
    CHECK_FALSE(is_rainbow_connected(reduce_st_to_connectivity(blocked).graph, reduce_st_to_connectivity(blocked).coloring));
    CHECK_THROWS_AS(reduce_st_to_connectivity(StInstance{gen_path(4), EdgeColoring(std::vector<Color>{0, 1}), 0, 3}), Error);
    CHECK_THROWS_AS(reduce_st_to_connectivity(StInstance{gen_path(4), EdgeColoring(std::vector<Color>{0, 1, 2}), 2, 2}), Error);
}

TEST_CASE("st to connectivity matches s-t search on random instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = gen_gnp(6, 0.45, seed);
        if (!is_connected(g)) continue;
        std::vector<Color> c(g.edge_count());
        for (EdgeId e = 0; e < c.size(); ++e) c[e] = static_cast<Color>((e * 7 + seed) % 3);
        const StInstance inst{g, EdgeColoring(c), 0, 5};
        const auto out = reduce_st_to_connectivity(inst);
        CHECK(oracle::has_rainbow_path(g, c, 0, 5) == static_cast<bool>(is_rainbow_connected(out.graph, out.coloring)));
    }
}

TEST_CASE("even subdivision") {
    const Graph c8 = subdivide_even_k(gen_cycle(4), 4);
    CHECK(c8.vertex_count() == 8);
    CHECK(c8.edge_count() == 8);
    for (Vertex v = 0; v < 8; ++v) CHECK(c8.degree(v) == 2);
    CHECK(rc_exact(gen_cycle(4)).rc == 2);
    CHECK(rc_exact(c8).rc == 4);

    const Graph c6 = subdivide_even_k(gen_clique(3), 4);
    CHECK(c6.vertex_count() == 6);
    CHECK(rc_exact(c6).rc == 3);
    CHECK(rc_exact(gen_clique(3)).rc == 1);

    CHECK(subdivide_even_k(gen_path(3), 2) == gen_path(3));
    CHECK(subdivide_even_k(gen_path(2), 6).edge_count() == 3);
    CHECK_THROWS_AS(subdivide_even_k(gen_cycle(4), 3), Error);
    CHECK_THROWS_AS(subdivide_even_k(gen_cycle(4), 0), Error);
}

TEST_CASE("even subdivision of an rc 2 graph can exceed k") {
    // Two triangles sharing vertex 0 have rc 2, but after splitting every
    // edge in two the midpoints of {1,2} and {3,4} are 6 apart.
    const Graph g = make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK(oracle::rc(g) == 2);
    const Graph sub = subdivide_even_k(g, 4);
    std::size_t diam = 0;
    for (const auto& [a, b] : oracle::every_pair(sub.vertex_count())) diam = std::max(diam, oracle::bfs_distance(sub, a, b));
    CHECK(diam == 6);
    CHECK_FALSE(decide_rc_leq(sub, 4));
}
