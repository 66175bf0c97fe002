#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rainbow/graph.hpp"
#include "rainbow/rainbow_path.hpp"
#include "rainbow/rc_solver.hpp"

namespace rainbow {

/// Parse errors carry the 1-based line number in their message.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Text formats. Lines starting with '#' are accepted before the header;
// blank lines are ignored.

/// "n m", then m lines "u v" with u < v.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g, std::string_view comment = {});

/// "m k", then m color ids in 0..k-1. Writers use k = largest id + 1.
EdgeColoring parse_coloring(std::string_view text);
std::string format_coloring(const EdgeColoring& chi);

/// "count", then lines "e c". The edge count is not stored in the file.
PartialEdgeColoring parse_partial_coloring(std::string_view text, std::size_t edge_count);
std::string format_partial_coloring(const PartialEdgeColoring& partial);

/// "p", then lines "u v".
PairSet parse_pair_set(std::string_view text);
std::string format_pair_set(const PairSet& pairs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace rainbow
