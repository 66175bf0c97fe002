// Command-line front end. Exit codes: 0 yes/success, 1 no/negative answer,
// 2 usage or input error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rainbow/cnf.hpp"
#include "rainbow/dense.hpp"
#include "rainbow/gadgets.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/rainbow_path.hpp"
#include "rainbow/rc_solver.hpp"

namespace {

using namespace rainbow;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

/// Input or usage problem; reported with exit code 2.
struct UsageError : Error {
    using Error::Error;
};

struct Context {
    std::string graph, coloring, partial, pairs, cnf, st, out;
    std::optional<std::size_t> k;
    std::optional<Vertex> s, t;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    double p = 0.5;
    std::optional<std::size_t> min_degree;
    std::size_t max_tries = 100;
    bool randomized = false;
    std::string reduction, family;
};

Graph load_graph(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const Error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

EdgeColoring load_coloring(const std::string& path, const Graph& g) {
    EdgeColoring chi;
    try {
        chi = parse_coloring(read_file(path));
    } catch (const Error& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (chi.size() != g.edge_count()) {
        throw UsageError(path + ": coloring has " + std::to_string(chi.size()) + " entries but the graph has " +
                         std::to_string(g.edge_count()) + " edges");
    }
    return chi;
}

CnfFormula load_cnf(const std::string& path) {
    try {
        return parse_dimacs_cnf(read_file(path));
    } catch (const Error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::pair<Vertex, Vertex> load_st(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        long long s = -1, t = -1;
        if (!(fields >> s >> t) || s < 0 || t < 0) break;
        return {static_cast<Vertex>(s), static_cast<Vertex>(t)};
    }
    throw UsageError(path + ": expected a line 's t'");
}

void require_connected(const Graph& g) {
    if (g.vertex_count() < 2) throw UsageError("graph needs at least 2 vertices");
    if (!is_connected(g)) throw UsageError("graph is disconnected");
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

std::string hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int cmd_solve(const Context& c) {
    const Graph g = load_graph(c.graph);
    require_connected(g);
    const auto result = rc_exact(g);
    std::cout << "rc = " << result.rc << '\n';
    if (!c.out.empty()) write_file(c.out, format_coloring(result.witness));
    return kYes;
}

int cmd_decide(const Context& c) {
    const Graph g = load_graph(c.graph);
    require_connected(g);
    const std::size_t n = g.vertex_count();
    if (*c.k < 1 || *c.k > n - 1) {
        throw UsageError("--k must lie in 1.." + std::to_string(n - 1) + ", got " + std::to_string(*c.k));
    }
    const auto witness = decide_rc_leq(g, *c.k);
    if (!witness) {
        std::cout << "no\n";
        return kNo;
    }
    std::cout << "yes\n";
    if (!c.out.empty()) write_file(c.out, format_coloring(*witness));
    return kYes;
}

int cmd_check(const Context& c) {
    const Graph g = load_graph(c.graph);
    const EdgeColoring chi = load_coloring(c.coloring, g);
    if (c.s.has_value() != c.t.has_value()) throw UsageError("--s and --t must be given together");
    if (c.s) {
        if (!g.is_vertex(*c.s) || !g.is_vertex(*c.t) || *c.s == *c.t) {
            throw UsageError("--s and --t must be distinct vertices of the graph");
        }
        const auto path = find_rainbow_path(g, chi, *c.s, *c.t);
        if (!path) {
            std::cout << "no rainbow path " << *c.s << ' ' << *c.t << '\n';
            return kNo;
        }
        for (std::size_t i = 0; i < path->vertices.size(); ++i) std::cout << (i ? " " : "") << path->vertices[i];
        std::cout << '\n';
        return kYes;
    }
    const Verdict verdict = is_rainbow_connected(g, chi);
    if (!verdict) {
        std::cout << "fail " << verdict.failing->u() << ' ' << verdict.failing->v() << '\n';
        return kNo;
    }
    std::cout << "ok\n";
    return kYes;
}

void summary(const Graph& g) { std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n'; }

CnfFormula normalized(const CnfFormula& phi) {
    if (phi.has_both_polarities()) return phi;
    std::cerr << "notice: formula normalized so every variable occurs in both polarities\n";
    return ensure_both_polarities(phi);
}

/// Reduction outputs go to <out>.graph, <out>.coloring, <out>.partial,
/// <out>.pairs and <out>.st as applicable.
int cmd_reduce(const Context& c) {
    const std::string& name = c.reduction;
    auto need = [&](const std::string& value, const char* flag) {
        if (value.empty()) throw UsageError("reduce " + name + " requires " + flag);
    };
    need(c.out, "--out");
    std::string input_bytes;
    auto tag = [&](const std::string& bytes) {
        input_bytes += bytes;
        return bytes;
    };
    auto comment = [&] { return "reduce " + name + " input-hash=" + hex(fnv1a(input_bytes)); };

    if (name == "sat2ext" || name == "sat2st") {
        need(c.cnf, "--cnf");
        tag(read_file(c.cnf));
        CnfFormula phi = normalized(load_cnf(c.cnf));
        if (name == "sat2ext") {
            // Tautological clauses break the gadget; they are always satisfied.
            const CnfFormula cleaned = ensure_both_polarities(phi);
            if (cleaned.clauses().size() != phi.clauses().size()) {
                std::cerr << "notice: tautological clauses removed\n";
                phi = cleaned;
            }
            const auto inst = reduce_sat_to_extension(phi);
            write_file(c.out + ".graph", format_graph(inst.graph, comment()));
            write_file(c.out + ".partial", format_partial_coloring(inst.partial));
            summary(inst.graph);
        } else {
            const auto inst = reduce_sat_to_st(phi);
            write_file(c.out + ".graph", format_graph(inst.graph, comment()));
            write_file(c.out + ".coloring", format_coloring(inst.coloring));
            write_file(c.out + ".st", std::to_string(inst.s) + ' ' + std::to_string(inst.t) + '\n');
            summary(inst.graph);
        }
        return kYes;
    }
    need(c.graph, "--graph");
    const Graph g = load_graph(c.graph);
    tag(read_file(c.graph));
    if (name == "ext2subset") {
        need(c.partial, "--partial");
        PartialEdgeColoring partial;
        try {
            partial = parse_partial_coloring(tag(read_file(c.partial)), g.edge_count());
        } catch (const Error& e) {
            throw UsageError(c.partial + ": " + e.what());
        }
        const auto inst = reduce_extension_to_subset(g, partial);
        write_file(c.out + ".graph", format_graph(inst.graph, comment()));
        write_file(c.out + ".pairs", format_pair_set(inst.pairs));
        summary(inst.graph);
    } else if (name == "subset2rc2") {
        need(c.pairs, "--pairs");
        PairSet pairs;
        try {
            pairs = parse_pair_set(tag(read_file(c.pairs)));
        } catch (const Error& e) {
            throw UsageError(c.pairs + ": " + e.what());
        }
        const Graph out = reduce_subset_to_rc2(g, pairs);
        write_file(c.out + ".graph", format_graph(out, comment()));
        summary(out);
    } else if (name == "st2conn") {
        need(c.coloring, "--coloring");
        const EdgeColoring chi = load_coloring(c.coloring, g);
        tag(read_file(c.coloring));
        std::pair<Vertex, Vertex> st;
        if (!c.st.empty()) {
            st = load_st(c.st);
            tag(read_file(c.st));
        } else if (c.s && c.t) {
            st = {*c.s, *c.t};
            tag(std::to_string(*c.s) + ' ' + std::to_string(*c.t));
        } else {
            throw UsageError("reduce st2conn requires --st or both --s and --t");
        }
        const auto out = reduce_st_to_connectivity(StInstance{g, chi, st.first, st.second});
        write_file(c.out + ".graph", format_graph(out.graph, comment()));
        write_file(c.out + ".coloring", format_coloring(out.coloring));
        summary(out.graph);
    } else if (name == "subdivide") {
        if (!c.k) throw UsageError("reduce subdivide requires --k");
        if (*c.k < 2 || *c.k % 2 != 0) throw UsageError("--k must be even and at least 2, got " + std::to_string(*c.k));
        const Graph out = subdivide_even_k(g, *c.k);
        write_file(c.out + ".graph", format_graph(out, comment()));
        summary(out);
    } else {
        throw UsageError("unknown reduction '" + name + "'");
    }
    return kYes;
}

int cmd_color_dense(const Context& c) {
    const Graph g = load_graph(c.graph);
    if (g.vertex_count() < 2) throw UsageError("graph needs at least 2 vertices");
    if (c.randomized) {
        for (std::size_t attempt = 0; attempt < c.max_tries; ++attempt) {
            const EdgeColoring chi = random_3_coloring(g, c.seed + attempt);
            if (is_rainbow_connected(g, chi)) {
                std::cerr << "rainbow connected after " << attempt + 1 << " tries\n";
                emit(c.out, format_coloring(chi));
                return kYes;
            }
        }
        std::cout << "no rainbow coloring in " << c.max_tries << " random tries\n";
        return kNo;
    }
    const auto pre = check_dense_preconditions(g);
    if (!pre) {
        std::cout << pre.message << '\n';
        return kNo;
    }
    try {
        emit(c.out, format_coloring(derandomized_3_coloring(g)));
    } catch (const CertificateError& e) {
        std::cout << "certificate failure: " << e.what() << '\n';
        return kNo;
    }
    return kYes;
}

int cmd_gen(const Context& c) {
    const std::string& f = c.family;
    std::optional<Graph> g;
    std::string comment;
    if (f == "gnp") {
        if (c.n < 1) throw UsageError("--n must be at least 1");
        if (!(c.p >= 0.0 && c.p <= 1.0)) throw UsageError("--p must lie in [0,1]");
        if (c.min_degree) {
            // Scan seeds upward from --seed; the first graph that qualifies wins.
            constexpr std::uint64_t kScanLimit = 10'000'000;
            for (std::uint64_t s = c.seed; s < c.seed + kScanLimit && !g; ++s) {
                g = gen_gnp_if_min_degree(c.n, c.p, s, *c.min_degree);
                if (g) comment = "gen gnp n=" + std::to_string(c.n) + " seed=" + std::to_string(s);
            }
            if (!g) {
                std::cout << "no graph with min degree " << *c.min_degree << " in the scanned seeds\n";
                return kNo;
            }
        } else {
            g = gen_gnp(c.n, c.p, c.seed);
        }
    } else if (f == "tree") {
        if (c.n < 1) throw UsageError("--n must be at least 1");
        g = gen_random_tree(c.n, c.seed);
    } else if (f == "cycle" || f == "clique" || f == "star" || f == "path") {
        try {
            g = f == "cycle" ? gen_cycle(c.n) : f == "clique" ? gen_clique(c.n) : f == "star" ? gen_star(c.n) : gen_path(c.n);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    } else {
        throw UsageError("unknown family '" + f + "'");
    }
    emit(c.out, format_graph(*g, comment));
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rainbow connection toolkit"};
    app.require_subcommand(1);
    Context c;

    auto* solve = app.add_subcommand("solve", "exact rainbow connection number");
    solve->add_option("graph", c.graph, "graph file")->required();
    solve->add_option("--out", c.out, "witness coloring path");

    auto* decide = app.add_subcommand("decide", "decide rc(G) <= k; exit 0 yes, 1 no");
    decide->add_option("graph", c.graph, "graph file")->required();
    decide->add_option("--k", c.k, "color budget")->required();
    decide->add_option("--out", c.out, "witness coloring path");

    auto* check = app.add_subcommand("check", "verify a coloring; exit 0 yes, 1 no");
    check->add_option("graph", c.graph, "graph file")->required();
    check->add_option("coloring", c.coloring, "coloring file")->required();
    check->add_option("--s", c.s, "source vertex");
    check->add_option("--t", c.t, "target vertex");

    auto* reduce = app.add_subcommand("reduce", "build a reduction instance");
    reduce->add_option("name", c.reduction, "sat2ext | ext2subset | subset2rc2 | sat2st | st2conn | subdivide")
        ->required()
        ->check(CLI::IsMember({"sat2ext", "ext2subset", "subset2rc2", "sat2st", "st2conn", "subdivide"}));
    reduce->add_option("--cnf", c.cnf, "DIMACS CNF input");
    reduce->add_option("--graph", c.graph, "graph input");
    reduce->add_option("--coloring", c.coloring, "coloring input");
    reduce->add_option("--partial", c.partial, "partial coloring input");
    reduce->add_option("--pairs", c.pairs, "pair set input");
    reduce->add_option("--st", c.st, "file holding 's t'");
    reduce->add_option("--s", c.s, "source vertex");
    reduce->add_option("--t", c.t, "target vertex");
    reduce->add_option("--k", c.k, "even path length for subdivide");
    reduce->add_option("--out", c.out, "output path prefix");

    auto* color = app.add_subcommand("color-dense", "3-color a dense diameter-2 graph");
    color->add_option("graph", c.graph, "graph file")->required();
    color->add_flag("--randomized", c.randomized, "random colorings, verified, with retries");
    color->add_option("--seed", c.seed, "seed for --randomized");
    color->add_option("--max-tries", c.max_tries, "attempts for --randomized")->check(CLI::PositiveNumber);
    color->add_option("--out", c.out, "coloring path (default stdout)");

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("family", c.family, "gnp | cycle | clique | star | path | tree")
        ->required()
        ->check(CLI::IsMember({"gnp", "cycle", "clique", "star", "path", "tree"}));
    gen->add_option("--n", c.n, "vertex count")->required();
    gen->add_option("--p", c.p, "edge probability (gnp)");
    gen->add_option("--seed", c.seed, "seed (gnp, tree)");
    gen->add_option("--min-degree", c.min_degree, "gnp only: first seed >= --seed meeting this min degree");
    gen->add_option("--out", c.out, "graph path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve) return cmd_solve(c);
        if (*decide) return cmd_decide(c);
        if (*check) return cmd_check(c);
        if (*reduce) return cmd_reduce(c);
        if (*color) return cmd_color_dense(c);
        if (*gen) return cmd_gen(c);
    } catch (const InstanceTooLarge& e) {
        std::cerr << "error: instance too large: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
