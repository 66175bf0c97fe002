#include "rainbow/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "rainbow/random.hpp"

namespace rainbow {

using boost::multiprecision::cpp_int;

std::size_t log2_threshold(std::size_t n, unsigned multiplier) {
    if (n == 0) throw Error("log2_threshold: n must be positive");
    if (std::has_single_bit(n)) return multiplier * static_cast<std::size_t>(std::countr_zero(n));
    return static_cast<std::size_t>(std::ceil(multiplier * std::log2(static_cast<long double>(n))));
}

DensePreconditions check_dense_preconditions(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw Error("check_dense_preconditions: need at least 2 vertices");
    for (Vertex u = 0; u < n; ++u) {
        const auto dist = bfs_distances(g, u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (dist[v] > 2) {
                const std::string d = dist[v] == kInfinity ? std::string("infinite") : std::to_string(dist[v]);
                return {false,
                        "diameter " + d + " > 2 (pair " + std::to_string(u) + " " + std::to_string(v) + ")",
                        std::nullopt, VertexPair(u, v)};
            }
        }
    }
    const std::size_t need = log2_threshold(n, 8);
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) < need) {
            return {false,
                    "min degree " + std::to_string(min_degree(g)) + " < " + std::to_string(need) + " (vertex " +
                        std::to_string(v) + ")",
                    v, std::nullopt};
        }
    }
    return {};
}

namespace {

bool is_bridged(const PairWitness& w) { return w.kind == WitnessCase::Bridged; }

}  // namespace

WitnessFamily::WitnessFamily(const Graph& g, std::vector<PairWitness> witnesses)
    : n_(g.vertex_count()), witnesses_(std::move(witnesses)), by_edge_(g.edge_count()) {
    for (std::uint32_t i = 0; i < witnesses_.size(); ++i) {
        const auto& w = witnesses_[i];
        const std::size_t expected_len = w.kind == WitnessCase::Bridged ? 3 : 2;
        if (w.kind == WitnessCase::Adjacent && !w.paths.empty()) throw Error("adjacent witness with paths");
        std::vector<EdgeId> private_edges, shared_edges;
        for (const auto& path : w.paths) {
            if (path.edges.size() != expected_len || path.vertices.size() != expected_len + 1 ||
                path.vertices.front() != w.pair.u() || path.vertices.back() != w.pair.v()) {
                throw Error("malformed witness path for pair (" + std::to_string(w.pair.u()) + "," +
                            std::to_string(w.pair.v()) + ")");
            }
            for (std::size_t j = 0; j < expected_len; ++j) {
                const auto e = g.edge_id(path.vertices[j], path.vertices[j + 1]);
                if (!e || *e != path.edges[j]) throw Error("witness path edge does not match the graph");
                (j < 2 ? private_edges : shared_edges).push_back(*e);
            }
        }
        std::vector<EdgeId> all = private_edges;
        std::sort(private_edges.begin(), private_edges.end());
        if (std::adjacent_find(private_edges.begin(), private_edges.end()) != private_edges.end()) {
            throw Error("witness paths share a private edge");
        }
        for (EdgeId e : shared_edges) {
            if (std::binary_search(private_edges.begin(), private_edges.end(), e)) {
                throw Error("shared witness edge is also a private edge");
            }
        }
        all.insert(all.end(), shared_edges.begin(), shared_edges.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (EdgeId e : all) by_edge_[e].push_back(i);
        max_paths_ = std::max(max_paths_, w.paths.size());
    }
}

const PairWitness* WitnessFamily::find(VertexPair pair) const {
    // Families from build_witness_family list every pair in lexicographic
    // order; otherwise fall back to a scan.
    if (witnesses_.size() == n_ * (n_ - 1) / 2) {
        const std::size_t u = pair.u(), v = pair.v();
        const std::size_t index = u * (2 * n_ - u - 1) / 2 + (v - u - 1);
        if (index < witnesses_.size() && witnesses_[index].pair == pair) return &witnesses_[index];
    }
    for (const auto& w : witnesses_)
        if (w.pair == pair) return &w;
    return nullptr;
}

WitnessFamily build_witness_family(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t want_common = log2_threshold(n, 2);
    const std::size_t want_bridged = log2_threshold(n, 6);
    std::vector<PairWitness> out;
    out.reserve(n * (n - 1) / 2);
    std::vector<char> in_u(n), in_v(n);
    for (Vertex u = 0; u < n; ++u) {
        std::fill(in_u.begin(), in_u.end(), 0);
        for (Vertex w : g.neighbors(u)) in_u[w] = 1;
        for (Vertex v = u + 1; v < n; ++v) {
            PairWitness pw{VertexPair(u, v), WitnessCase::Adjacent, {}};
            if (in_u[v]) {
                out.push_back(std::move(pw));
                continue;
            }
            std::fill(in_v.begin(), in_v.end(), 0);
            for (Vertex w : g.neighbors(v)) in_v[w] = 1;
            const auto common = common_neighbors(g, u, v);
            if (common.size() >= want_common) {
                pw.kind = WitnessCase::Common;
                for (std::size_t i = 0; i < want_common; ++i) {
                    const Vertex w = common[i];
                    pw.paths.push_back({{u, w, v}, {*g.edge_id(u, w), *g.edge_id(w, v)}});
                }
                out.push_back(std::move(pw));
                continue;
            }
            pw.kind = WitnessCase::Bridged;
            for (Vertex x : g.neighbors(u)) {
                if (pw.paths.size() == want_bridged) break;
                if (in_v[x]) continue;  // x must lie in N(u) \ N(v)
                std::optional<Vertex> bx;
                for (Vertex y : g.neighbors(x)) {
                    if (in_v[y] && !in_u[y]) {
                        bx = y;
                        break;
                    }
                }
                if (!bx) {
                    for (Vertex y : g.neighbors(x)) {
                        if (in_v[y] && in_u[y]) {
                            bx = y;
                            break;
                        }
                    }
                }
                if (!bx) continue;
                pw.paths.push_back({{u, x, *bx, v}, {*g.edge_id(u, x), *g.edge_id(x, *bx), *g.edge_id(*bx, v)}});
            }
            if (pw.paths.size() < want_bridged) {
                throw NoWitnessError(pw.pair, "no witness for pair (" + std::to_string(u) + "," + std::to_string(v) +
                                                  "): " + std::to_string(common.size()) + " common neighbors (< " +
                                                  std::to_string(want_common) + ") and " +
                                                  std::to_string(pw.paths.size()) + " bridged paths (< " +
                                                  std::to_string(want_bridged) + ")");
            }
            out.push_back(std::move(pw));
        }
    }
    return WitnessFamily(g, std::move(out));
}

namespace {

constexpr Color kUncolored = 3;

Color color_of(const PartialEdgeColoring& partial, EdgeId e) {
    const auto c = partial.get(e);
    if (c && *c > 2) throw Error("dense colorer: color " + std::to_string(*c) + " outside {0,1,2}");
    return c ? *c : kUncolored;
}

/// 9 * P(path not rainbow) with the private edges completed uniformly;
/// `shared` is the color of the third edge of a bridged path.
unsigned path_failure_ninths(const WitnessPath& path, const PartialEdgeColoring& partial, Color shared) {
    const Color c0 = color_of(partial, path.edges[0]);
    const Color c1 = color_of(partial, path.edges[1]);
    const bool bridged = path.edges.size() == 3;
    unsigned failures = 0, total = 0;
    for (Color a = 0; a < 3; ++a) {
        if (c0 != kUncolored && a != c0) continue;
        for (Color b = 0; b < 3; ++b) {
            if (c1 != kUncolored && b != c1) continue;
            ++total;
            const bool rainbow = bridged ? (a != b && a != shared && b != shared) : a != b;
            if (!rainbow) ++failures;
        }
    }
    return failures * 9 / total;
}

/// Bound as numerator / 3^exponent.
struct Triadic {
    cpp_int numerator;
    unsigned exponent;
};

Triadic pair_bound(const PairWitness& w, const PartialEdgeColoring& partial) {
    if (w.kind == WitnessCase::Adjacent) return {0, 0};
    if (!is_bridged(w)) {
        cpp_int num = 1;
        for (const auto& path : w.paths) {
            const unsigned k = path_failure_ninths(path, partial, 0);
            if (k == 0) return {0, 0};
            num *= k;
        }
        return {num, static_cast<unsigned>(2 * w.paths.size())};
    }
    // Paths sharing the edge b(x)-v are averaged jointly over its color.
    std::vector<std::size_t> order(w.paths.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return w.paths[a].edges[2] < w.paths[b].edges[2]; });
    cpp_int num = 1;
    unsigned exponent = static_cast<unsigned>(2 * w.paths.size());
    for (std::size_t start = 0; start < order.size();) {
        std::size_t end = start;
        const EdgeId shared = w.paths[order[start]].edges[2];
        while (end < order.size() && w.paths[order[end]].edges[2] == shared) ++end;
        const Color fixed = color_of(partial, shared);
        cpp_int group = 0;
        for (Color c = 0; c < 3; ++c) {
            if (fixed != kUncolored && c != fixed) continue;
            cpp_int product = 1;
            for (std::size_t i = start; i < end && product != 0; ++i)
                product *= path_failure_ninths(w.paths[order[i]], partial, c);
            group += product;
        }
        if (group == 0) return {0, 0};
        num *= group;
        if (fixed == kUncolored) ++exponent;
        start = end;
    }
    return {num, exponent};
}

Rational to_rational(const Triadic& t) {
    return Rational(t.numerator, boost::multiprecision::pow(cpp_int(3), t.exponent));
}

/// Fixed-denominator accounting used by the greedy colorer: every pair
/// contribution is min(1, bound) * 3^scale.
class BoundLedger {
public:
    BoundLedger(const WitnessFamily& family, const PartialEdgeColoring& partial)
        : family_(family), scale_(static_cast<unsigned>(3 * family.max_paths())) {
        powers_.push_back(1);
        for (unsigned i = 0; i < scale_; ++i) powers_.push_back(powers_.back() * 3);
        contribution_.reserve(family.witnesses().size());
        for (const auto& w : family.witnesses()) {
            contribution_.push_back(scaled(w, partial));
            total_ += contribution_.back();
        }
    }

    const cpp_int& total() const noexcept { return total_; }
    const cpp_int& one() const noexcept { return powers_.back(); }
    Rational total_rational() const { return Rational(total_, one()); }

    cpp_int scaled(const PairWitness& w, const PartialEdgeColoring& partial) const {
        const Triadic t = pair_bound(w, partial);
        if (t.numerator == 0) return 0;
        cpp_int value = t.numerator * powers_[scale_ - t.exponent];
        return value > one() ? one() : value;
    }

    /// Total after coloring e with c (partial must already hold c at e).
    cpp_int total_with(EdgeId e, const PartialEdgeColoring& partial, std::vector<cpp_int>& fresh) const {
        cpp_int total = total_;
        fresh.clear();
        for (auto i : family_.pairs_using(e)) {
            fresh.push_back(scaled(family_.witnesses()[i], partial));
            total += fresh.back();
            total -= contribution_[i];
        }
        return total;
    }

    void commit(EdgeId e, std::vector<cpp_int> fresh, cpp_int total) {
        const auto& pairs = family_.pairs_using(e);
        for (std::size_t j = 0; j < pairs.size(); ++j) contribution_[pairs[j]] = std::move(fresh[j]);
        total_ = std::move(total);
    }

private:
    const WitnessFamily& family_;
    unsigned scale_;
    std::vector<cpp_int> powers_;
    std::vector<cpp_int> contribution_;
    cpp_int total_ = 0;
};

}  // namespace

Rational pair_failure_bound(const WitnessFamily& family, VertexPair pair, const PartialEdgeColoring& partial) {
    const PairWitness* w = family.find(pair);
    if (!w) {
        throw Error("pair (" + std::to_string(pair.u()) + "," + std::to_string(pair.v()) +
                    ") is not covered by the witness family");
    }
    Rational r = to_rational(pair_bound(*w, partial));
    return r;
}

Rational expected_failures_bound(const WitnessFamily& family, const PartialEdgeColoring& partial) {
    Rational total = 0;
    for (const auto& w : family.witnesses()) {
        Rational r = to_rational(pair_bound(w, partial));
        total += r > 1 ? Rational(1) : r;
    }
    return total;
}

EdgeColoring random_3_coloring(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Color> colors(g.edge_count());
    for (auto& c : colors) c = static_cast<Color>(uniform_below(rng, 3));
    return EdgeColoring(std::move(colors));
}

EdgeColoring derandomized_3_coloring(const Graph& g, const BoundObserver& observer) {
    std::optional<WitnessFamily> family;
    try {
        family.emplace(build_witness_family(g));
    } catch (const NoWitnessError& e) {
        throw CertificateError(std::string("initial bound >= 1: ") + e.what());
    }
    return derandomized_3_coloring(g, *family, observer);
}

EdgeColoring derandomized_3_coloring(const Graph& g, const WitnessFamily& family, const BoundObserver& observer) {
    PartialEdgeColoring partial(g.edge_count());
    BoundLedger ledger(family, partial);
    if (ledger.total() >= ledger.one()) {
        throw CertificateError("initial bound >= 1 (" + ledger.total_rational().str() + ")");
    }
    std::vector<cpp_int> fresh, best_fresh;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::optional<cpp_int> best_total;
        Color best = 0;
        for (Color c = 0; c < 3; ++c) {
            partial.assign(e, c);
            cpp_int total = ledger.total_with(e, partial, fresh);
            if (!best_total || total < *best_total) {
                best_total = std::move(total);
                best = c;
                best_fresh.swap(fresh);
            }
        }
        partial.assign(e, best);
        ledger.commit(e, std::move(best_fresh), std::move(*best_total));
        best_fresh = {};
        if (observer) observer(e, ledger.total_rational());
    }
    std::vector<Color> colors(g.edge_count());
    for (EdgeId e = 0; e < colors.size(); ++e) colors[e] = *partial.get(e);
    EdgeColoring result(std::move(colors));
    if (!is_rainbow_connected(g, result)) {
        throw std::logic_error("derandomized coloring ended below 1 but is not rainbow connected");
    }
    return result;
}

}  // namespace rainbow
