#include <doctest.h>

#include <sstream>

#include "bei/batch.hpp"
#include "bei/graph_io.hpp"
#include "bei/structure.hpp"
#include "bei/verify.hpp"

using namespace bei;
using nlohmann::json;

namespace {

std::string corpus_of_order(int n, bool connected_only) {
    std::string text;
    for_each_labeled_graph(n, [&](const Graph& g) {
        if (!connected_only || is_connected(g)) text += encode_graph6(g) + "\n";
    });
    return text;
}

std::vector<json> records(const std::string& jsonl) {
    std::vector<json> out;
    std::istringstream in(jsonl);
    for (std::string line; std::getline(in, line);) out.push_back(json::parse(line));
    return out;
}

}  // namespace

TEST_CASE("empty corpus") {
    std::istringstream in("");
    std::ostringstream out;
    CHECK(screen_corpus(in, out, 4, {}) == BatchSummary{});
    CHECK(out.str().empty());
}

TEST_CASE("parallel output is byte-identical to serial") {
    const std::string corpus = corpus_of_order(5, false) + "garbage\n" + corpus_of_order(4, true);
    std::istringstream serial_in(corpus);
    std::istringstream parallel_in(corpus);
    std::ostringstream serial;
    std::ostringstream parallel;
    const BatchSummary a = screen_corpus(serial_in, serial, 1, {});
    const BatchSummary b = screen_corpus(parallel_in, parallel, 4, {});
    CHECK(a == b);
    CHECK(serial.str() == parallel.str());
    CHECK(a.errors == 1);
    CHECK(a.records == a.certified + a.not_certified + a.inconclusive + a.errors);
}

TEST_CASE("connected 5-vertex corpus is internally consistent") {
    std::istringstream in(corpus_of_order(5, true));
    std::ostringstream out;
    const BatchSummary s = screen_corpus(in, out, 2, {});
    CHECK(s.records == 728);
    CHECK(s.errors == 0);
    std::size_t line = 0;
    for (const json& r : records(out.str())) {
        REQUIRE(r["line"] == ++line);
        const json& verdict = r["report"]["verdict"];
        const bool certified = !verdict["certified_by"].empty();
        const bool violated = !verdict["violations"].empty();
        REQUIRE_FALSE((certified && violated));
        REQUIRE((verdict["status"] == "cm-certified") == certified);
    }
}

TEST_CASE("C4 is rejected as two-vertex-connected") {
    const json r = screen_record(1, "Cl", {});
    CHECK(r["report"]["verdict"]["status"] == "not-cm-certified");
    bool found = false;
    for (const json& v : r["report"]["verdict"]["violations"]) found = found || v["rule"] == "two-vertex-connected";
    CHECK(found);
}

TEST_CASE("error records keep the batch going") {
    std::istringstream in("A_\nD?\n\nA?\r\nX\n");
    std::ostringstream out;
    const BatchSummary s = screen_corpus(in, out, 1, {});
    CHECK(s.records == 5);
    CHECK(s.errors == 3);
    CHECK(s.certified == 2);
    const auto rs = records(out.str());
    CHECK(rs[1]["error"]["kind"] == "truncated");
    CHECK(rs[2]["error"]["kind"] == "bad-header");
    CHECK(rs[3]["graph6"] == "A?");
    CHECK(rs[4]["error"]["kind"] == "oversize");
}
