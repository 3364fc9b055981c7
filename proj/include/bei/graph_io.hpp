#ifndef BEI_GRAPH_IO_HPP
#define BEI_GRAPH_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bei/graph.hpp"

namespace bei {

enum class ParseErrorKind { BadHeader, BadChar, OutOfRangeVertex, SelfLoop, Truncated, Oversize };

/// Stable lower-case name, e.g. "self-loop".
std::string_view to_string(ParseErrorKind kind);

class GraphParseError : public std::runtime_error {
public:
    GraphParseError(ParseErrorKind kind, std::size_t offset, const std::string& message);

    ParseErrorKind kind() const { return kind_; }
    /// Byte offset into the parsed input where the problem was detected.
    std::size_t offset() const { return offset_; }
    const std::string& detail() const { return detail_; }

private:
    ParseErrorKind kind_;
    std::size_t offset_;
    std::string detail_;
};

struct ParseOptions {
    /// Graphs with more vertices are rejected with ParseErrorKind::Oversize.
    int max_vertices = kDefaultVertexCap;
};

/// Throws std::invalid_argument if `cap` is outside [1, kHardVertexLimit].
ParseOptions make_parse_options(int cap);

/// Edge-list text: vertex count, then 1-based pairs "i j". '#' starts a
/// comment running to end of line. Duplicate edges collapse.
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {});

/// One graph6 record, optionally prefixed by ">>graph6<<". A single trailing
/// newline (LF or CRLF) is tolerated.
Graph parse_graph6(std::string_view line, const ParseOptions& options = {});

/// Canonical graph6 encoding without header or newline.
std::string encode_graph6(const Graph& g);

/// Edge-list text in the format parse_edge_list reads.
std::string encode_edge_list(const Graph& g);

}  // namespace bei

#endif  // BEI_GRAPH_IO_HPP
