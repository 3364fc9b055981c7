#include "bei/batch.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include "bei/report.hpp"

namespace bei {

using nlohmann::json;

namespace {

struct Outcome {
    std::string line;
    ScreenStatus status = ScreenStatus::Inconclusive;
    bool error = false;
};

// Builds the record and reports the verdict, or nullopt on a parse error.
json make_record(std::size_t line_number, std::string_view graph6, const ParseOptions& options,
                 std::optional<ScreenStatus>& status) {
    if (graph6.ends_with('\r')) graph6.remove_suffix(1);
    json record;
    record["line"] = line_number;
    record["graph6"] = std::string(graph6);
    try {
        const InvariantReport report = build_report(parse_graph6(graph6, options));
        status = report.status;
        record["report"] = to_json(report);
    } catch (const GraphParseError& e) {
        status.reset();
        record["error"] = json{{"kind", std::string(to_string(e.kind()))},
                               {"offset", e.offset()},
                               {"message", e.detail()}};
    }
    return record;
}

Outcome screen_one(std::size_t line_number, std::string_view graph6, const ParseOptions& options) {
    std::optional<ScreenStatus> status;
    Outcome outcome;
    outcome.line = make_record(line_number, graph6, options, status).dump();
    outcome.error = !status.has_value();
    if (status) outcome.status = *status;
    return outcome;
}

}  // namespace

json screen_record(std::size_t line_number, std::string_view graph6, const ParseOptions& options) {
    std::optional<ScreenStatus> status;
    return make_record(line_number, graph6, options, status);
}

BatchSummary screen_corpus(std::istream& in, std::ostream& out, unsigned workers, const ParseOptions& options) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));

    std::vector<Outcome> outcomes(lines.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) outcomes[i] = screen_one(i + 1, lines[i], options);
    };
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(lines.size(), 1)));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    BatchSummary summary;
    for (const auto& o : outcomes) {
        out << o.line << '\n';
        ++summary.records;
        if (o.error) {
            ++summary.errors;
        } else if (o.status == ScreenStatus::CMCertified) {
            ++summary.certified;
        } else if (o.status == ScreenStatus::NotCMCertified) {
            ++summary.not_certified;
        } else {
            ++summary.inconclusive;
        }
    }
    return summary;
}

}  // namespace bei
