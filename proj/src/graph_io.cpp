#include "bei/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <vector>

namespace bei {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr unsigned char kGraph6Min = 63;
constexpr unsigned char kGraph6Max = 126;

struct Token {
    std::string_view text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else {
            std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
            tokens.push_back({text.substr(start, i - start), start});
        }
    }
    return tokens;
}

std::optional<long long> to_integer(std::string_view s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

void check_cap(long long n, std::size_t offset, const ParseOptions& options) {
    if (n > options.max_vertices) {
        throw GraphParseError(ParseErrorKind::Oversize, offset,
                              "graph has " + std::to_string(n) + " vertices, cap is " +
                                  std::to_string(options.max_vertices));
    }
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::BadHeader: return "bad-header";
        case ParseErrorKind::BadChar: return "bad-char";
        case ParseErrorKind::OutOfRangeVertex: return "out-of-range-vertex";
        case ParseErrorKind::SelfLoop: return "self-loop";
        case ParseErrorKind::Truncated: return "truncated";
        case ParseErrorKind::Oversize: return "oversize";
    }
    return "unknown";
}

GraphParseError::GraphParseError(ParseErrorKind kind, std::size_t offset, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + " at byte " + std::to_string(offset) + ": " + message),
      kind_(kind),
      offset_(offset),
      detail_(message) {}

ParseOptions make_parse_options(int cap) {
    if (cap < 1 || cap > kHardVertexLimit) {
        throw std::invalid_argument("vertex cap must lie in [1, " + std::to_string(kHardVertexLimit) + "]");
    }
    return ParseOptions{cap};
}

Graph parse_edge_list(std::string_view text, const ParseOptions& options) {
    auto tokens = tokenize(text);
    if (tokens.empty()) throw GraphParseError(ParseErrorKind::BadHeader, 0, "missing vertex count");

    const Token& head = tokens.front();
    auto n = to_integer(head.text);
    if (!n || *n < 1) {
        throw GraphParseError(ParseErrorKind::BadHeader, head.offset,
                              "vertex count must be a positive integer, got '" + std::string(head.text) + "'");
    }
    check_cap(*n, head.offset, options);

    Graph g(static_cast<int>(*n));
    std::size_t i = 1;
    for (; i + 1 < tokens.size(); i += 2) {
        int ends[2];
        for (int k = 0; k < 2; ++k) {
            const Token& t = tokens[i + k];
            auto v = to_integer(t.text);
            if (!v) throw GraphParseError(ParseErrorKind::BadChar, t.offset, "malformed vertex '" + std::string(t.text) + "'");
            if (*v < 1 || *v > *n) {
                throw GraphParseError(ParseErrorKind::OutOfRangeVertex, t.offset,
                                      "vertex " + std::string(t.text) + " outside 1.." + std::to_string(*n));
            }
            ends[k] = static_cast<int>(*v) - 1;
        }
        if (ends[0] == ends[1]) {
            throw GraphParseError(ParseErrorKind::SelfLoop, tokens[i].offset,
                                  "self-loop at vertex " + std::to_string(ends[0] + 1));
        }
        g.add_edge(ends[0], ends[1]);
    }
    if (i < tokens.size()) {
        throw GraphParseError(ParseErrorKind::Truncated, tokens[i].offset, "edge with a single endpoint");
    }
    return g;
}

Graph parse_graph6(std::string_view line, const ParseOptions& options) {
    std::size_t pos = 0;
    if (line.starts_with(kGraph6Header)) pos = kGraph6Header.size();
    if (line.ends_with('\n')) line.remove_suffix(1);
    if (line.ends_with('\r')) line.remove_suffix(1);

    auto byte_at = [&](std::size_t at) -> std::uint64_t {
        if (at >= line.size()) {
            throw GraphParseError(ParseErrorKind::Truncated, line.empty() ? 0 : line.size() - 1,
                                  "input ends inside the graph6 record");
        }
        auto b = static_cast<unsigned char>(line[at]);
        if (b < kGraph6Min || b > kGraph6Max) {
            throw GraphParseError(ParseErrorKind::BadChar, at, "byte " + std::to_string(b) + " outside 63..126");
        }
        return b - kGraph6Min;
    };

    if (pos >= line.size()) throw GraphParseError(ParseErrorKind::BadHeader, pos == 0 ? 0 : pos - 1, "empty graph6 record");

    // Vertex count: 1, 4 or 8 bytes depending on magnitude.
    const std::size_t count_at = pos;
    std::uint64_t n = byte_at(pos);
    if (n == kGraph6Max - kGraph6Min) {
        int width = 3;
        ++pos;
        if (byte_at(pos) == kGraph6Max - kGraph6Min) {
            width = 6;
            ++pos;
        }
        n = 0;
        for (int k = 0; k < width; ++k) n = (n << 6) | byte_at(pos + k);
        pos += width;
    } else {
        ++pos;
    }
    if (n < 1) throw GraphParseError(ParseErrorKind::BadHeader, count_at, "graph6 record encodes zero vertices");
    check_cap(static_cast<long long>(n), count_at, options);

    const int order = static_cast<int>(n);
    const std::size_t bit_count = static_cast<std::size_t>(order) * (order - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (line.size() - pos < byte_count) {
        // Surface bad bytes ahead of the short read.
        for (std::size_t at = pos; at < line.size(); ++at) byte_at(at);
        throw GraphParseError(ParseErrorKind::Truncated, line.size() - 1,
                              "expected " + std::to_string(byte_count) + " adjacency bytes, found " +
                                  std::to_string(line.size() - pos));
    }
    if (line.size() - pos > byte_count) {
        throw GraphParseError(ParseErrorKind::BadChar, pos + byte_count, "trailing bytes after graph6 record");
    }

    Graph g(order);
    std::size_t bit = 0;
    for (int v = 1; v < order; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            std::uint64_t chunk = byte_at(pos + bit / 6);
            if ((chunk >> (5 - bit % 6)) & 1U) g.add_edge(u, v);
        }
    }
    for (std::size_t at = pos + bit / 6; at < pos + byte_count; ++at) byte_at(at);
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + kGraph6Min);
    } else {
        out += static_cast<char>(kGraph6Max);
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kGraph6Min);
    }
    int chunk = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(chunk + kGraph6Min);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + kGraph6Min);
    return out;
}

std::string encode_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

}  // namespace bei
