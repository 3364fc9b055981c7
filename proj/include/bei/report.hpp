#ifndef BEI_REPORT_HPP
#define BEI_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bei/connectivity.hpp"
#include "bei/graph.hpp"
#include "bei/ideal.hpp"
#include "bei/rational.hpp"
#include "bei/screen.hpp"

namespace bei {

/// Every invariant the tool reports for one graph.
struct InvariantReport {
    int n = 0;
    int edges = 0;
    bool connected = false;
    bool complete = false;
    std::optional<int> kappa;
    std::optional<ToughnessValue> toughness;
    int alpha = 0;
    int krull_dimension = 0;
    bool equidimensional = false;
    std::vector<MinimalPrime> minimal_primes;
    BigInt hilbert_samuel;
    Rational hilbert_kunz;
    std::optional<int> depth_upper_bound;
    std::optional<int> pd_lower_bound;
    ScreenStatus status = ScreenStatus::Inconclusive;
    std::vector<CmRule> certified_by;
    std::vector<NotCmRule> violations;

    bool operator==(const InvariantReport&) const = default;
};

InvariantReport build_report(const Graph& g);

/// Loss-free JSON: big integers and rational parts are decimal strings,
/// vertices are 1-based.
nlohmann::json to_json(const InvariantReport& report);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
InvariantReport report_from_json(const nlohmann::json& j);

/// Human-readable multi-line rendering.
std::string render_table(const InvariantReport& report);

/// Minimal primes in listing order: descending dimension, then separator
/// size, then lexicographic separator.
std::vector<MinimalPrime> primes_in_listing_order(std::vector<MinimalPrime> primes);

/// One line per prime, e.g. "S={2}  blocks={1} {3}  dim=4".
std::string render_primes(const std::vector<MinimalPrime>& primes);

}  // namespace bei

#endif  // BEI_REPORT_HPP
