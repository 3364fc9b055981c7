#ifndef BEI_BATCH_HPP
#define BEI_BATCH_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bei/graph_io.hpp"

namespace bei {

struct BatchSummary {
    std::size_t records = 0;
    std::size_t certified = 0;
    std::size_t not_certified = 0;
    std::size_t inconclusive = 0;
    std::size_t errors = 0;

    bool operator==(const BatchSummary&) const = default;
};

/// {"line", "graph6", "report"} on success, {"line", "graph6", "error"} on a
/// parse failure. `line_number` is 1-based.
nlohmann::json screen_record(std::size_t line_number, std::string_view graph6, const ParseOptions& options);

/// Screens a newline-separated graph6 corpus, writing one JSONL record per
/// input line in input order. Output bytes do not depend on `workers`.
BatchSummary screen_corpus(std::istream& in, std::ostream& out, unsigned workers, const ParseOptions& options);

}  // namespace bei

#endif  // BEI_BATCH_HPP
