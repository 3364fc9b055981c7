#include "bei/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bei/structure.hpp"

namespace bei {

using nlohmann::json;

namespace {

json vertex_list(VertexSet s) {
    json out = json::array();
    s.for_each([&](int v) { out.push_back(v + 1); });
    return out;
}

VertexSet vertex_set_from(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("vertex list must be an array");
    Mask bits = 0;
    for (const auto& v : j) {
        const int one_based = v.get<int>();
        if (one_based < 1 || one_based > kHardVertexLimit) throw std::invalid_argument("vertex out of range in JSON");
        bits |= Mask{1} << (one_based - 1);
    }
    return VertexSet(bits);
}

json rational_json(const Rational& q) {
    return json{{"num", numerator_of(q).str()}, {"den", denominator_of(q).str()}};
}

Rational rational_from(const json& j) {
    return parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

template <typename T>
json optional_int(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

std::optional<int> optional_int_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<int>();
}

template <typename Rule, std::size_t N>
Rule rule_from(const std::string& name, const Rule (&all)[N]) {
    for (Rule r : all) {
        if (to_string(r) == name) return r;
    }
    throw std::invalid_argument("unknown rule '" + name + "'");
}

constexpr CmRule kCmRules[] = {CmRule::Complete, CmRule::DisjointPathsCI, CmRule::ChordalCliqueCondition};
constexpr NotCmRule kNotCmRules[] = {NotCmRule::ToughnessNotHalf, NotCmRule::TwoVertexConnected,
                                     NotCmRule::NotEquidimensional, NotCmRule::OneToughNonComplete};
constexpr ScreenStatus kStatuses[] = {ScreenStatus::CMCertified, ScreenStatus::NotCMCertified,
                                      ScreenStatus::Inconclusive};

std::string toughness_text(const std::optional<ToughnessValue>& t) {
    if (!t) return "undefined (disconnected)";
    if (t->is_infinite()) return "infinite";
    return to_string(t->value()) + "  (witness S=" + t->witness().to_string() + ")";
}

std::string optional_text(const std::optional<int>& v, const char* absent) {
    return v ? std::to_string(*v) : std::string(absent);
}

}  // namespace

InvariantReport build_report(const Graph& g) {
    InvariantReport r;
    r.n = g.order();
    r.edges = g.edge_count();
    r.connected = is_connected(g);
    r.complete = is_complete(g);

    const ScreenVerdict verdict = cm_screen(g);
    r.kappa = verdict.kappa;
    r.toughness = verdict.toughness;
    r.equidimensional = verdict.equidimensional;
    r.status = verdict.status;
    r.certified_by = verdict.certified_by;
    r.violations = verdict.violations;

    const MultiplicityReport mult = multiplicities(g);
    r.alpha = mult.alpha;
    r.krull_dimension = r.n + mult.alpha;
    r.hilbert_samuel = mult.hilbert_samuel;
    r.hilbert_kunz = mult.hilbert_kunz;
    r.minimal_primes = minimal_primes(g);

    if (r.connected && !r.complete) {
        r.depth_upper_bound = r.n - *r.kappa + 2;
        r.pd_lower_bound = r.n + *r.kappa - 2;
    }
    return r;
}

json to_json(const InvariantReport& r) {
    json j;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["connected"] = r.connected;
    j["complete"] = r.complete;
    j["kappa"] = optional_int(r.kappa);
    if (!r.toughness) {
        j["toughness"] = nullptr;
    } else if (r.toughness->is_infinite()) {
        j["toughness"] = json{{"type", "infinite"}};
    } else {
        json t = rational_json(r.toughness->value());
        t["type"] = "finite";
        t["witness"] = vertex_list(r.toughness->witness());
        j["toughness"] = t;
    }
    j["alpha"] = r.alpha;
    j["krull_dimension"] = r.krull_dimension;
    j["equidimensional"] = r.equidimensional;
    json primes = json::array();
    for (const auto& p : r.minimal_primes) {
        json blocks = json::array();
        for (VertexSet b : p.blocks) blocks.push_back(vertex_list(b));
        primes.push_back(json{{"separator", vertex_list(p.separator)}, {"blocks", blocks}, {"dimension", p.dimension}});
    }
    j["minimal_primes"] = primes;
    j["hilbert_samuel"] = r.hilbert_samuel.str();
    json hk = rational_json(r.hilbert_kunz);
    hk["characteristic"] = "positive";
    j["hilbert_kunz"] = hk;
    j["depth_upper_bound"] = optional_int(r.depth_upper_bound);
    j["pd_lower_bound"] = optional_int(r.pd_lower_bound);

    json verdict;
    verdict["status"] = std::string(to_string(r.status));
    verdict["reason"] = r.certified_by.empty() ? json(nullptr) : json(std::string(to_string(r.certified_by.front())));
    json certified = json::array();
    for (CmRule rule : r.certified_by) {
        certified.push_back(json{{"rule", std::string(to_string(rule))}, {"citation", std::string(citation(rule))}});
    }
    json violations = json::array();
    for (NotCmRule rule : r.violations) {
        violations.push_back(json{{"rule", std::string(to_string(rule))}, {"citation", std::string(citation(rule))}});
    }
    verdict["certified_by"] = certified;
    verdict["violations"] = violations;
    j["verdict"] = verdict;
    return j;
}

InvariantReport report_from_json(const json& j) {
    try {
        InvariantReport r;
        r.n = j.at("n").get<int>();
        r.edges = j.at("edges").get<int>();
        r.connected = j.at("connected").get<bool>();
        r.complete = j.at("complete").get<bool>();
        r.kappa = optional_int_from(j.at("kappa"));
        const json& t = j.at("toughness");
        if (!t.is_null()) {
            const auto type = t.at("type").get<std::string>();
            if (type == "infinite") {
                r.toughness = ToughnessValue::infinite();
            } else if (type == "finite") {
                r.toughness = ToughnessValue::finite(rational_from(t), vertex_set_from(t.at("witness")));
            } else {
                throw std::invalid_argument("unknown toughness type '" + type + "'");
            }
        }
        r.alpha = j.at("alpha").get<int>();
        r.krull_dimension = j.at("krull_dimension").get<int>();
        r.equidimensional = j.at("equidimensional").get<bool>();
        for (const auto& p : j.at("minimal_primes")) {
            MinimalPrime prime{vertex_set_from(p.at("separator")), {}, p.at("dimension").get<int>()};
            for (const auto& b : p.at("blocks")) prime.blocks.push_back(vertex_set_from(b));
            r.minimal_primes.push_back(std::move(prime));
        }
        r.hilbert_samuel = BigInt(j.at("hilbert_samuel").get<std::string>());
        r.hilbert_kunz = rational_from(j.at("hilbert_kunz"));
        r.depth_upper_bound = optional_int_from(j.at("depth_upper_bound"));
        r.pd_lower_bound = optional_int_from(j.at("pd_lower_bound"));
        const json& verdict = j.at("verdict");
        r.status = rule_from(verdict.at("status").get<std::string>(), kStatuses);
        for (const auto& c : verdict.at("certified_by")) {
            r.certified_by.push_back(rule_from(c.at("rule").get<std::string>(), kCmRules));
        }
        for (const auto& v : verdict.at("violations")) {
            r.violations.push_back(rule_from(v.at("rule").get<std::string>(), kNotCmRules));
        }
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
}

std::vector<MinimalPrime> primes_in_listing_order(std::vector<MinimalPrime> primes) {
    std::sort(primes.begin(), primes.end(), [](const MinimalPrime& a, const MinimalPrime& b) {
        if (a.dimension != b.dimension) return a.dimension > b.dimension;
        if (a.separator.size() != b.separator.size()) return a.separator.size() < b.separator.size();
        return lexicographic_less(a.separator, b.separator);
    });
    return primes;
}

std::string render_primes(const std::vector<MinimalPrime>& primes) {
    std::ostringstream out;
    for (const auto& p : primes) {
        out << "S=" << p.separator.to_string() << "  blocks=";
        for (std::size_t i = 0; i < p.blocks.size(); ++i) out << (i ? " " : "") << p.blocks[i].to_string();
        if (p.blocks.empty()) out << "(none)";
        out << "  dim=" << p.dimension << '\n';
    }
    return out.str();
}

std::string render_table(const InvariantReport& r) {
    std::ostringstream out;
    out << "vertices                 " << r.n << '\n'
        << "edges                    " << r.edges << '\n'
        << "connected                " << (r.connected ? "yes" : "no") << '\n'
        << "complete                 " << (r.complete ? "yes" : "no") << '\n'
        << "vertex connectivity      " << optional_text(r.kappa, "undefined (disconnected)") << '\n'
        << "toughness                " << toughness_text(r.toughness) << '\n'
        << "alpha                    " << r.alpha << '\n'
        << "dim R/J_G                " << r.krull_dimension << '\n'
        << "equidimensional          " << (r.equidimensional ? "yes" : "no") << '\n'
        << "minimal primes           " << r.minimal_primes.size() << '\n'
        << "e(R/J_G)                 " << r.hilbert_samuel.str() << '\n'
        << "e_HK(R/J_G)              " << to_string(r.hilbert_kunz) << "  (positive-characteristic invariant)\n"
        << "depth upper bound        " << optional_text(r.depth_upper_bound, "n/a") << '\n'
        << "pd lower bound           " << optional_text(r.pd_lower_bound, "n/a") << '\n'
        << "CM screen                " << to_string(r.status) << '\n';
    for (CmRule rule : r.certified_by) out << "  + " << to_string(rule) << ": " << citation(rule) << '\n';
    for (NotCmRule rule : r.violations) out << "  - " << to_string(rule) << ": " << citation(rule) << '\n';
    return out.str();
}

}  // namespace bei
