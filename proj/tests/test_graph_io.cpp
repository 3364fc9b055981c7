#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bei/graph_io.hpp"
#include "bei/verify.hpp"
#include "test_support.hpp"

using namespace bei;

namespace {

ParseErrorKind edge_list_error(std::string_view text, const ParseOptions& options = {}) {
    try {
        parse_edge_list(text, options);
    } catch (const GraphParseError& e) {
        return e.kind();
    }
    FAIL("no error for: " << text);
    return ParseErrorKind::BadHeader;
}

ParseErrorKind graph6_error(std::string_view text, const ParseOptions& options = {}) {
    try {
        parse_graph6(text, options);
    } catch (const GraphParseError& e) {
        return e.kind();
    }
    FAIL("no error for: " << text);
    return ParseErrorKind::BadHeader;
}

}  // namespace

TEST_CASE("edge list examples") {
    CHECK(parse_edge_list("3\n1 2\n2 3") == families::path(3));
    CHECK(parse_edge_list("4\n1 2\n2 3\n3 4\n4 1") == families::cycle(4));
    CHECK(edge_list_error("2\n1 1") == ParseErrorKind::SelfLoop);
}

TEST_CASE("edge list details") {
    CHECK(parse_edge_list("# header comment\n3 # n\n1 2 # first\n2 1\n2 3\n") == families::path(3));
    CHECK(parse_edge_list("1\n").order() == 1);
    CHECK(parse_edge_list("3\r\n1 2\r\n").edge_count() == 1);

    CHECK(edge_list_error("") == ParseErrorKind::BadHeader);
    CHECK(edge_list_error("0\n") == ParseErrorKind::BadHeader);
    CHECK(edge_list_error("x\n1 2") == ParseErrorKind::BadHeader);
    CHECK(edge_list_error("3\n1 4") == ParseErrorKind::OutOfRangeVertex);
    CHECK(edge_list_error("3\n0 1") == ParseErrorKind::OutOfRangeVertex);
    CHECK(edge_list_error("3\n1 b") == ParseErrorKind::BadChar);
    CHECK(edge_list_error("3\n1 2\n3") == ParseErrorKind::Truncated);
    CHECK(edge_list_error("25\n") == ParseErrorKind::Oversize);
    CHECK(edge_list_error("5\n", make_parse_options(4)) == ParseErrorKind::Oversize);
    CHECK(parse_edge_list("25\n", make_parse_options(30)).order() == 25);
    CHECK(edge_list_error("31\n", make_parse_options(30)) == ParseErrorKind::Oversize);
    CHECK_THROWS_AS(make_parse_options(31), std::invalid_argument);
    CHECK_THROWS_AS(make_parse_options(0), std::invalid_argument);

    try {
        parse_edge_list("3\n1 2\n2 2");
        FAIL("expected error");
    } catch (const GraphParseError& e) {
        // Offsets point at the first token of the offending pair.
        CHECK(e.offset() == 6);
        CHECK(to_string(e.kind()) == "self-loop");
    }
}

TEST_CASE("graph6 examples") {
    // "D?{": '?' = 0 -> 000000, '{' = 60 -> 111100; bits 6..9 are the pairs
    // (0,4),(1,4),(2,4),(3,4), i.e. the star with centre at vertex 5.
    Graph star(5);
    for (int v = 0; v < 4; ++v) star.add_edge(v, 4);
    CHECK(parse_graph6("D?{") == star);
    CHECK(parse_graph6("A_") == families::complete(2));
    CHECK(parse_graph6("A?") == Graph(2));
}

TEST_CASE("graph6 encodings agree with an independent encoder") {
    CHECK(encode_graph6(families::cycle(4)) == "Cl");
    CHECK(encode_graph6(families::path(4)) == "Ch");
    CHECK(parse_graph6(">>graph6<<Cl\n") == families::cycle(4));
    CHECK(parse_graph6("Cl\r\n") == families::cycle(4));
}

TEST_CASE("graph6 errors") {
    CHECK(graph6_error("") == ParseErrorKind::BadHeader);
    CHECK(graph6_error("?") == ParseErrorKind::BadHeader);
    CHECK(graph6_error("D?") == ParseErrorKind::Truncated);
    CHECK(graph6_error("D? ") == ParseErrorKind::BadChar);
    CHECK(graph6_error("D?\x7f") == ParseErrorKind::BadChar);
    CHECK(graph6_error("A__") == ParseErrorKind::BadChar);
    CHECK(graph6_error("X") == ParseErrorKind::Oversize);
    // 25 vertices: 300 bits, 50 data bytes.
    const std::string empty25 = "X" + std::string(50, '?');
    CHECK(parse_graph6(empty25, make_parse_options(30)).order() == 25);
    CHECK(graph6_error(empty25 + "?", make_parse_options(30)) == ParseErrorKind::BadChar);
}

TEST_CASE("graph6 long header form") {
    Graph g(30);
    g.add_edge(0, 29);
    g.add_edge(14, 15);
    const std::string code = encode_graph6(g);
    CHECK(parse_graph6(code, make_parse_options(30)) == g);
}

TEST_CASE("round trip, exhaustive up to 7 vertices") {
    for (int n = 1; n <= 7; ++n) {
        for_each_labeled_graph(n, [](const Graph& g) { REQUIRE(parse_graph6(encode_graph6(g)) == g); });
    }
}

TEST_CASE("round trip, random graphs up to the hard limit") {
    std::mt19937_64 rng(7);
    const auto options = make_parse_options(kHardVertexLimit);
    for (int trial = 0; trial < 2000; ++trial) {
        const Graph g = test::random_graph(1 + trial % kHardVertexLimit, 0.3, rng);
        REQUIRE(parse_graph6(encode_graph6(g), options) == g);
        REQUIRE(parse_edge_list(encode_edge_list(g), options) == g);
    }
}
