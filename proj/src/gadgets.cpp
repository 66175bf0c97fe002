#include "rainbow/gadgets.hpp"

#include <algorithm>
#include <map>

namespace rainbow {

namespace {

bool has_tautology(const CnfFormula& phi) {
    for (const auto& c : phi.clauses())
        for (const auto& a : c)
            for (const auto& b : c)
                if (a.variable == b.variable && a.negated != b.negated) return true;
    return false;
}

void require_both_polarities(const CnfFormula& phi, const char* what) {
    if (!phi.has_both_polarities()) {
        throw Error(std::string(what) + ": every variable must occur both positively and negatively");
    }
}

void add_clique(std::vector<VertexPair>& edges, Vertex first, Vertex last) {
    for (Vertex a = first; a < last; ++a)
        for (Vertex b = a + 1; b < last; ++b) edges.emplace_back(a, b);
}

}  // namespace

ExtensionInstance reduce_sat_to_extension(const CnfFormula& phi) {
    require_both_polarities(phi, "reduce_sat_to_extension");
    if (has_tautology(phi)) throw Error("reduce_sat_to_extension: tautological clause");
    const auto m = static_cast<Vertex>(phi.clauses().size());
    const auto n = static_cast<Vertex>(phi.variable_count());
    const Vertex apex = m + n;
    std::vector<VertexPair> edges;
    std::vector<Color> colors;
    for (Vertex i = 0; i < m; ++i) {
        std::vector<std::size_t> seen;
        for (const auto& lit : phi.clauses()[i]) {
            if (std::find(seen.begin(), seen.end(), lit.variable) != seen.end()) continue;
            seen.push_back(lit.variable);
            edges.emplace_back(i, static_cast<Vertex>(m + lit.variable - 1));
            colors.push_back(lit.negated ? 1 : 0);
        }
    }
    const std::size_t occurrence_edges = edges.size();
    for (Vertex j = 0; j < n; ++j) edges.emplace_back(m + j, apex);
    const std::size_t apex_end = edges.size();
    add_clique(edges, 0, m);
    add_clique(edges, m, m + n);
    PartialEdgeColoring partial(edges.size());
    for (EdgeId e = 0; e < occurrence_edges; ++e) partial.assign(e, colors[e]);
    for (EdgeId e = static_cast<EdgeId>(apex_end); e < edges.size(); ++e) partial.assign(e, 0);
    return {Graph(apex + 1, std::move(edges)), std::move(partial)};
}

SubsetInstance reduce_extension_to_subset(const Graph& g, const PartialEdgeColoring& partial) {
    if (partial.size() != g.edge_count()) {
        throw Error("reduce_extension_to_subset: partial coloring does not match the edge count");
    }
    const auto n = static_cast<Vertex>(g.vertex_count());
    const Vertex b1 = n, c = n + 1, b2 = n + 2;
    std::vector<VertexPair> edges = g.edges();
    edges.emplace_back(b1, c);
    edges.emplace_back(c, b2);
    PairSet pairs = all_pairs(n);
    pairs.emplace(b1, b2);
    Vertex next = n + 3;
    for (const auto& [e, color] : partial.entries()) {
        if (color > 1) throw Error("reduce_extension_to_subset: color " + std::to_string(color) + " outside {0,1}");
        const Vertex ce = next++;
        const Vertex bi = color == 0 ? b1 : b2;
        const Vertex low = g.edge(e).u();
        const Vertex high = g.edge(e).v();
        edges.emplace_back(bi, ce);
        edges.emplace_back(ce, low);
        pairs.emplace(c, ce);
        pairs.emplace(bi, low);
        pairs.emplace(ce, high);
    }
    return {Graph(next, std::move(edges)), std::move(pairs)};
}

Graph reduce_subset_to_rc2(const Graph& g, const PairSet& pairs) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (const auto& p : pairs)
        if (p.v() >= n) throw Error("reduce_subset_to_rc2: pair references a vertex outside the graph");
    std::vector<VertexPair> edges = g.edges();
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n + v);
    Vertex next = 2 * n;
    for (const auto& p : all_pairs(n)) {
        if (pairs.contains(p)) continue;
        edges.emplace_back(p.u(), next);
        edges.emplace_back(p.v(), next);
        ++next;
    }
    add_clique(edges, n, next);
    return Graph(next, std::move(edges));
}

StGadget build_sat_st_gadget(const CnfFormula& phi) {
    require_both_polarities(phi, "reduce_sat_to_st");
    const auto& clauses = phi.clauses();
    const std::size_t m = clauses.size();

    // Occurrence index of each literal among its variable's positive
    // (resp. negative) occurrences, in (clause, position) order.
    std::vector<std::size_t> positives(phi.variable_count() + 1, 0), negatives(phi.variable_count() + 1, 0);
    std::vector<std::array<std::size_t, 3>> rank(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t p = 0; p < 3; ++p) {
            const auto& lit = clauses[i][p];
            rank[i][p] = lit.negated ? negatives[lit.variable]++ : positives[lit.variable]++;
        }
    // alpha(j, a, b) for a < k_j, b < l_j.
    std::vector<Color> alpha_base(phi.variable_count() + 1, 0);
    Color next_color = 0;
    for (std::size_t j = 1; j <= phi.variable_count(); ++j) {
        alpha_base[j] = next_color;
        next_color += static_cast<Color>(positives[j] * negatives[j]);
    }
    auto alpha = [&](std::size_t j, std::size_t a, std::size_t b) {
        return alpha_base[j] + static_cast<Color>(a * negatives[j] + b);
    };

    StGadget out;
    std::vector<VertexPair> edges;
    std::vector<Color> colors;
    Vertex next_vertex = 1;  // s = 0
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t p = 0; p < 3; ++p) {
            const auto& lit = clauses[i][p];
            const std::size_t j = lit.variable;
            const std::size_t length = lit.negated ? positives[j] : negatives[j];
            LiteralPath path{i, p, lit, {}, {}};
            for (std::size_t q = 0; q <= length; ++q) path.vertices.push_back(next_vertex++);
            for (std::size_t q = 0; q < length; ++q) {
                path.edges.push_back(static_cast<EdgeId>(edges.size()));
                edges.emplace_back(path.vertices[q], path.vertices[q + 1]);
                colors.push_back(lit.negated ? alpha(j, q, rank[i][p]) : alpha(j, rank[i][p], q));
            }
            out.literal_paths.push_back(std::move(path));
        }
    }
    const Vertex s = 0;
    const Vertex t = next_vertex++;
    auto path_of = [&](std::size_t i, std::size_t p) -> const LiteralPath& { return out.literal_paths[3 * i + p]; };
    auto cross = [&](Vertex a, Vertex b) {
        edges.emplace_back(a, b);
        colors.push_back(next_color++);
    };
    for (std::size_t p = 0; p < 3; ++p) cross(s, path_of(0, p).vertices.front());
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t p = 0; p < 3; ++p)
            for (std::size_t q = 0; q < 3; ++q) cross(path_of(i, p).vertices.back(), path_of(i + 1, q).vertices.front());
    for (std::size_t p = 0; p < 3; ++p) cross(path_of(m - 1, p).vertices.back(), t);

    out.instance = StInstance{Graph(next_vertex, std::move(edges)), EdgeColoring(std::move(colors)), s, t};
    return out;
}

StInstance reduce_sat_to_st(const CnfFormula& phi) { return build_sat_st_gadget(phi).instance; }

ColoredGraph reduce_st_to_connectivity(const StInstance& inst) {
    const Graph& g = inst.graph;
    const auto n = static_cast<Vertex>(g.vertex_count());
    if (!g.is_vertex(inst.s) || !g.is_vertex(inst.t) || inst.s == inst.t) {
        throw Error("reduce_st_to_connectivity: s and t must be distinct vertices");
    }
    if (inst.coloring.size() != g.edge_count()) {
        throw Error("reduce_st_to_connectivity: coloring does not match the edge count");
    }
    std::vector<Vertex> inner;
    for (Vertex v = 0; v < n; ++v)
        if (v != inst.s && v != inst.t) inner.push_back(v);

    const auto base = static_cast<Color>(inst.coloring.color_bound());
    const Color c1 = base, c2 = base + 1, c3 = base + 2, c4 = base + 3;
    const Vertex s_prime = n, t_prime = n + 1, b = n + 2;
    const Vertex s1 = n + 3;
    auto shadow = [&](std::size_t index, int which) {
        return static_cast<Vertex>(s1 + 1 + 2 * index + (which - 1));
    };
    const Vertex t2 = s1 + 1 + static_cast<Vertex>(2 * inner.size());
    const Vertex total = t2 + 1;

    std::vector<VertexPair> edges = g.edges();
    std::vector<Color> colors = inst.coloring.colors();
    auto add = [&](Vertex a, Vertex c, Color color) {
        edges.emplace_back(a, c);
        colors.push_back(color);
    };
    add(s_prime, inst.s, c2);
    add(t_prime, inst.t, c1);
    add(inst.s, s1, c1);
    add(inst.t, t2, c2);
    add(b, inst.s, c1);
    for (Vertex v : inner) add(b, v, c3);
    add(b, inst.t, c2);
    for (std::size_t i = 0; i < inner.size(); ++i) {
        add(inner[i], shadow(i, 1), c1);
        add(inner[i], shadow(i, 2), c2);
    }
    for (Vertex a = s1; a < total; ++a)
        for (Vertex c = a + 1; c < total; ++c) add(a, c, c4);
    return {Graph(total, std::move(edges)), EdgeColoring(std::move(colors))};
}

Graph subdivide_even_k(const Graph& g, std::size_t k) {
    if (k < 2 || k % 2 != 0) throw Error("subdivide_even_k: k must be even and at least 2, got " + std::to_string(k));
    const std::size_t segments = k / 2;
    std::vector<VertexPair> edges;
    auto next = static_cast<Vertex>(g.vertex_count());
    for (const auto& e : g.edges()) {
        Vertex prev = e.u();
        for (std::size_t i = 1; i < segments; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, e.v());
    }
    return Graph(next, std::move(edges));
}

}  // namespace rainbow
