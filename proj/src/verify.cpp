#include "bei/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bei/connectivity.hpp"
#include "bei/graph_io.hpp"
#include "bei/ideal.hpp"
#include "bei/oracles.hpp"
#include "bei/screen.hpp"
#include "bei/structure.hpp"
#include "bei/subsets.hpp"

namespace bei {

namespace {

constexpr std::size_t kKeptFailures = 5;

class Ledger {
public:
    // Property names in registration order.
    PropertyOutcome& operator[](const std::string& name) {
        auto it = index_.find(name);
        if (it == index_.end()) {
            it = index_.emplace(name, outcomes_.size()).first;
            outcomes_.push_back(PropertyOutcome{name, 0, {}, 0});
        }
        return outcomes_[it->second];
    }

    void check(const std::string& name, bool ok, const Graph& g, const std::string& detail = {}) {
        PropertyOutcome& out = (*this)[name];
        ++out.checked;
        if (ok) return;
        ++out.failure_count;
        if (out.failures.size() < kKeptFailures) {
            out.failures.push_back(encode_graph6(g) + (detail.empty() ? "" : ": " + detail));
        }
    }

    std::vector<PropertyOutcome> take() { return std::move(outcomes_); }

private:
    std::map<std::string, std::size_t> index_;
    std::vector<PropertyOutcome> outcomes_;
};

std::vector<VertexSet> separators_of(const std::vector<MinimalPrime>& primes) {
    std::vector<VertexSet> out;
    for (const auto& p : primes) out.push_back(p.separator);
    return out;
}

void check_components(Ledger& ledger, const Graph& g) {
    const int n = g.order();
    bool partition_ok = true;
    bool nesting_ok = true;
    for_each_subset(n, [&](VertexSet s) {
        const auto parts = components(g, s);
        Mask seen = 0;
        int previous_min = -1;
        for (VertexSet p : parts) {
            if (p.empty() || (p.bits() & seen) != 0 || p.min() <= previous_min) partition_ok = false;
            if (!p.empty()) previous_min = p.min();
            seen |= p.bits();
        }
        if (VertexSet(seen) != g.vertices() - s) partition_ok = false;
        if (static_cast<int>(parts.size()) != oracle::component_count(g, s)) partition_ok = false;

        // Every component after removing one more vertex sits inside one
        // component of the coarser split.
        (g.vertices() - s).for_each([&](int v) {
            for (VertexSet fine : components(g, s.with(v))) {
                int owners = 0;
                for (VertexSet coarse : parts) owners += fine.is_subset_of(coarse);
                if (owners != 1) nesting_ok = false;
            }
        });
    });
    ledger.check("components-partition", partition_ok, g);
    ledger.check("components-nesting", nesting_ok, g);
}

void check_connected(Ledger& ledger, const Graph& g, const std::vector<MinimalPrime>& primes, int dim,
                     bool equidimensional) {
    const int n = g.order();
    const bool complete = is_complete(g);
    const int kappa = vertex_connectivity(g);
    const int kappa_brute = vertex_connectivity_bruteforce(g);
    ledger.check("kappa-flow-vs-bruteforce", kappa == kappa_brute, g,
                 "flow " + std::to_string(kappa) + " vs brute " + std::to_string(kappa_brute));

    const ToughnessValue tau = toughness(g);
    const auto [ref_num, ref_den] = oracle::toughness_ratio(g);
    ledger.check("toughness-vs-full-enumeration",
                 complete ? tau.is_infinite() && ref_den == 0
                          : !tau.is_infinite() && tau.value() == make_rational(ref_num, ref_den),
                 g);

    const bool one_tough = is_t_tough(g, 1);
    ledger.check("one-tough-via-primes", one_tough_via_primes(g) == one_tough, g);
    ledger.check("one-tough-equidimensional-implies-complete", !(one_tough && equidimensional) || complete, g);

    const ToughnessBounds tb = toughness_bounds_from_dimension(g);
    ledger.check("toughness-bounds-from-dimension",
                 tau.at_least(tb.lower) && tb.upper.has_value() == !one_tough &&
                     (!tb.upper || (!tau.is_infinite() && tau.value() <= *tb.upper)),
                 g);

    if (complete) {
        ledger.check("kappa-complete", kappa == n - 1, g);
        return;
    }

    const Rational& t = tau.value();
    const VertexSet w = tau.witness();
    const int cw = oracle::component_count(g, w);
    ledger.check("toughness-witness", cw >= 2 && make_rational(w.size(), cw) == t, g);
    ledger.check("kappa-at-least-ceil-two-tau", BigInt(kappa) >= ceil(2 * t), g);

    const Rational eps = make_rational(1, static_cast<long long>(n) * (n + 1));
    ledger.check("t-tough-boundary", is_t_tough(g, t) && !is_t_tough(g, t + eps), g);
    ledger.check("t-tough-matches-toughness", is_t_tough(g, make_rational(1, 2)) == tau.at_least(make_rational(1, 2)), g);

    if (t < 1) {
        const RationalInterval bounds = dim_bounds_from_toughness(g);
        ledger.check("dimension-sandwich", bounds.lower <= dim && dim <= bounds.upper, g,
                     to_string(bounds.lower) + " <= " + std::to_string(dim) + " <= " + to_string(bounds.upper));
    }
    ledger.check("equidimensional-implies-half-tough",
                 !equidimensional || (t >= make_rational(1, 2) && t < 1), g);

    bool joint_ok = true;
    for (const auto& p : primes) {
        if (p.separator.empty()) continue;
        const int joint = joint_dim_with_empty(g, p.separator);
        if (joint != n - p.separator.size() + 1 || joint > n - kappa + 1) joint_ok = false;
    }
    ledger.check("joint-dimension-bound", joint_ok, g);

    ledger.check("depth-pd-bounds",
                 depth_upper_bound(g) == n - kappa + 2 && pd_lower_bound(g) == n + kappa - 2 &&
                     depth_upper_bound(g) + pd_lower_bound(g) == 2 * n,
                 g);
}

void check_graph(Ledger& ledger, const Graph& g) {
    const int n = g.order();
    ledger.check("graph6-round-trip", parse_graph6(encode_graph6(g)) == g, g);
    if (n <= 5) check_components(ledger, g);
    if (n <= 6) ledger.check("maximal-cliques-vs-bruteforce", maximal_cliques(g) == oracle::maximal_cliques(g), g);

    const ChordalityResult chordal = chordality(g);
    ledger.check("chordality-vs-bruteforce",
                 chordal.chordal == oracle::is_chordal(g) &&
                     (!chordal.chordal || is_perfect_elimination_order(g, chordal.elimination_order)),
                 g);

    const auto primes = minimal_primes(g);
    const auto separators = separators_of(primes);
    if (n <= 6) {
        ledger.check("minimal-primes-vs-containment", separators == oracle::minimal_prime_separators(g), g);
    }

    const MultiplicityReport mult = multiplicities(g);
    const int dim = krull_dimension(g);
    int top = 0;
    for (const auto& p : primes) top = std::max(top, p.dimension);
    ledger.check("krull-dimension-is-top-prime", dim == top && dim == n + mult.alpha, g);

    std::vector<VertexSet> top_separators;
    for (const auto& p : primes) {
        if (p.dimension == top) top_separators.push_back(p.separator);
    }
    const auto additive = oracle::multiplicities_from_primes(g, separators);
    ledger.check("multiplicity-additivity",
                 mult.top_separators == top_separators && additive.hilbert_samuel == mult.hilbert_samuel &&
                     additive.hilbert_kunz == mult.hilbert_kunz,
                 g);

    const bool equidimensional = is_equidimensional(g);
    const auto parts = components(g);
    if (parts.size() == 1) check_connected(ledger, g, primes, dim, equidimensional);

    if (parts.size() == 2) {
        const Graph a = induced_subgraph(g, parts[0]);
        const Graph b = induced_subgraph(g, parts[1]);
        const auto ma = multiplicities(a);
        const auto mb = multiplicities(b);
        ledger.check("multiplicity-product-over-components",
                     mult.hilbert_samuel == ma.hilbert_samuel * mb.hilbert_samuel &&
                         mult.hilbert_kunz == ma.hilbert_kunz * mb.hilbert_kunz,
                     g);
    }

    const ScreenVerdict verdict = cm_screen(g);
    ledger.check("screen-no-dual-firing", !verdict.conflicting(), g);
    if (is_complete(g) || is_disjoint_union_of_paths(g)) {
        ledger.check("screen-certifies-complete-and-paths", verdict.status == ScreenStatus::CMCertified, g);
    }
    if (parts.size() == 1 && !is_complete(g) &&
        (*verdict.kappa >= 2 || verdict.toughness->value() != make_rational(1, 2))) {
        ledger.check("screen-rejects-necessary-failures", verdict.status == ScreenStatus::NotCMCertified, g);
    }
}

void check_fixtures(Ledger& ledger, int max_n) {
    for (int n = 1; n <= 10; ++n) {
        const Graph k = families::complete(n);
        const Rational expected = make_rational(n, 2) + Rational(BigInt(n), factorial(static_cast<unsigned>(n) + 1));
        ledger.check("complete-graph-multiplicities", hilbert_samuel(k) == n && hilbert_kunz(k) == expected, k);
    }
    std::vector<Graph> hamiltonian;
    for (int n = 3; n <= max_n; ++n) {
        hamiltonian.push_back(families::complete(n));
        if (n >= 4) {
            hamiltonian.push_back(families::cycle(n));
            hamiltonian.push_back(families::wheel(n));
            Graph chorded = families::cycle(n);
            chorded.add_edge(0, 2);
            hamiltonian.push_back(chorded);
        }
    }
    for (const Graph& g : hamiltonian) {
        ledger.check("hamiltonian-tough-and-two-connected", toughness(g).at_least(1) && vertex_connectivity(g) >= 2, g);
    }
}

}  // namespace

std::vector<PropertyOutcome> run_property_suite(int max_n, const std::function<void(int)>& progress) {
    if (max_n < kVerifyMinVertices || max_n > kVerifyMaxVertices) {
        throw std::invalid_argument("max-n must lie in [" + std::to_string(kVerifyMinVertices) + ", " +
                                    std::to_string(kVerifyMaxVertices) + "]");
    }
    Ledger ledger;
    check_fixtures(ledger, max_n);
    for (int n = 1; n <= max_n; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) { check_graph(ledger, g); });
        if (progress) progress(n);
    }
    return ledger.take();
}

}  // namespace bei
