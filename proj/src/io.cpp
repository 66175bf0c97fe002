#include "rainbow/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace rainbow {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

/// Numeric records of a text file, one per non-blank line.
class Records {
public:
    explicit Records(std::string_view text) {
        std::size_t line_no = 0;
        bool header_seen = false;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t end = std::min(text.find('\n', pos), text.size());
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.find_first_not_of(" \t") == std::string_view::npos) {
                if (end == text.size()) break;
                continue;
            }
            if (!header_seen && line.front() == '#') continue;
            header_seen = true;
            rows_.push_back({line_no, tokenize(line, line_no)});
            last_line_ = line_no;
            if (end == text.size()) break;
        }
        if (rows_.empty()) last_line_ = std::max<std::size_t>(line_no, 1);
    }

    /// Next record, which must have exactly `arity` fields.
    const std::vector<std::uint64_t>& next(std::size_t arity, const char* what) {
        if (cursor_ == rows_.size()) throw ParseError(last_line_, std::string("unexpected end of input; expected ") + what);
        const auto& row = rows_[cursor_++];
        if (row.fields.size() != arity) {
            throw ParseError(row.line, std::string("expected ") + what + " (" + std::to_string(arity) +
                                           " integers), found " + std::to_string(row.fields.size()));
        }
        return row.fields;
    }

    std::size_t line() const { return cursor_ == 0 ? 1 : rows_[cursor_ - 1].line; }

    void finish() const {
        if (cursor_ != rows_.size()) throw ParseError(rows_[cursor_].line, "trailing data after the last record");
    }

private:
    struct Row {
        std::size_t line;
        std::vector<std::uint64_t> fields;
    };

    static std::vector<std::uint64_t> tokenize(std::string_view line, std::size_t line_no) {
        std::vector<std::uint64_t> out;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            const std::string_view tok = line.substr(i, j - i);
            std::uint64_t value = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || value > 0xffffffffULL) {
                throw ParseError(line_no, "invalid integer '" + std::string(tok) + "'");
            }
            out.push_back(value);
            i = j;
        }
        return out;
    }

    std::vector<Row> rows_;
    std::size_t cursor_ = 0;
    std::size_t last_line_ = 0;
};

}  // namespace

Graph parse_graph(std::string_view text) {
    Records in(text);
    const auto header = in.next(2, "header 'n m'");
    const std::size_t n = header[0], m = header[1];
    std::vector<VertexPair> edges;
    edges.reserve(m);
    std::set<VertexPair> seen;
    for (std::size_t e = 0; e < m; ++e) {
        const auto row = in.next(2, "edge 'u v'");
        if (!(row[0] < row[1])) throw ParseError(in.line(), "edge endpoints must satisfy u < v");
        if (row[1] >= n) throw ParseError(in.line(), "vertex " + std::to_string(row[1]) + " out of range for n=" + std::to_string(n));
        const VertexPair p(static_cast<Vertex>(row[0]), static_cast<Vertex>(row[1]));
        if (!seen.insert(p).second) throw ParseError(in.line(), "duplicate edge");
        edges.push_back(p);
    }
    in.finish();
    return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "# " << comment << '\n';
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u() << ' ' << e.v() << '\n';
    return out.str();
}

EdgeColoring parse_coloring(std::string_view text) {
    Records in(text);
    const auto header = in.next(2, "header 'm k'");
    const std::size_t m = header[0], k = header[1];
    std::vector<Color> colors;
    colors.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        const auto row = in.next(1, "color id");
        if (row[0] >= k) throw ParseError(in.line(), "color " + std::to_string(row[0]) + " outside 0.." + std::to_string(k) + "-1");
        colors.push_back(static_cast<Color>(row[0]));
    }
    in.finish();
    return EdgeColoring(std::move(colors));
}

std::string format_coloring(const EdgeColoring& chi) {
    std::ostringstream out;
    out << chi.size() << ' ' << chi.color_bound() << '\n';
    for (Color c : chi.colors()) out << c << '\n';
    return out.str();
}

PartialEdgeColoring parse_partial_coloring(std::string_view text, std::size_t edge_count) {
    Records in(text);
    const std::size_t count = in.next(1, "header 'count'")[0];
    PartialEdgeColoring partial(edge_count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto row = in.next(2, "assignment 'e c'");
        if (row[0] >= edge_count) throw ParseError(in.line(), "edge id " + std::to_string(row[0]) + " out of range for m=" + std::to_string(edge_count));
        if (row[1] > 1) throw ParseError(in.line(), "color " + std::to_string(row[1]) + " outside {0,1}");
        const auto e = static_cast<EdgeId>(row[0]);
        if (partial.is_assigned(e)) throw ParseError(in.line(), "edge " + std::to_string(e) + " assigned twice");
        partial.assign(e, static_cast<Color>(row[1]));
    }
    in.finish();
    return partial;
}

std::string format_partial_coloring(const PartialEdgeColoring& partial) {
    const auto entries = partial.entries();
    std::ostringstream out;
    out << entries.size() << '\n';
    for (const auto& [e, c] : entries) out << e << ' ' << c << '\n';
    return out.str();
}

PairSet parse_pair_set(std::string_view text) {
    Records in(text);
    const std::size_t count = in.next(1, "header 'p'")[0];
    PairSet pairs;
    for (std::size_t i = 0; i < count; ++i) {
        const auto row = in.next(2, "pair 'u v'");
        if (row[0] == row[1]) throw ParseError(in.line(), "pair endpoints must differ");
        if (!pairs.emplace(static_cast<Vertex>(row[0]), static_cast<Vertex>(row[1])).second) {
            throw ParseError(in.line(), "duplicate pair");
        }
    }
    in.finish();
    return pairs;
}

std::string format_pair_set(const PairSet& pairs) {
    std::ostringstream out;
    out << pairs.size() << '\n';
    for (const auto& p : pairs) out << p.u() << ' ' << p.v() << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << contents;
    if (!out) throw Error("write to '" + path + "' failed");
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace rainbow
