#include "bei/screen.hpp"

#include <algorithm>

#include "bei/ideal.hpp"
#include "bei/structure.hpp"

namespace bei {

namespace {

struct RuleSets {
    std::vector<CmRule> certified;
    std::vector<NotCmRule> violated;
};

RuleSets screen_connected(const Graph& g, const ToughnessValue& tau, int kappa, bool equidimensional) {
    RuleSets rules;
    const bool complete = is_complete(g);

    if (complete) rules.certified.push_back(CmRule::Complete);
    if (is_disjoint_union_of_paths(g)) rules.certified.push_back(CmRule::DisjointPathsCI);
    if (chordal_cm_sufficient(g)) rules.certified.push_back(CmRule::ChordalCliqueCondition);

    if (!complete) {
        const Rational half = make_rational(1, 2);
        if (tau.value() != half) rules.violated.push_back(NotCmRule::ToughnessNotHalf);
        if (kappa >= 2) rules.violated.push_back(NotCmRule::TwoVertexConnected);
    }
    if (!equidimensional) rules.violated.push_back(NotCmRule::NotEquidimensional);
    if (!complete && tau.at_least(1)) rules.violated.push_back(NotCmRule::OneToughNonComplete);
    return rules;
}

template <typename Rule>
void merge_sorted(std::vector<Rule>& into, const std::vector<Rule>& from) {
    into.insert(into.end(), from.begin(), from.end());
    std::sort(into.begin(), into.end());
    into.erase(std::unique(into.begin(), into.end()), into.end());
}

}  // namespace

std::string_view to_string(CmRule rule) {
    switch (rule) {
        case CmRule::Complete: return "complete";
        case CmRule::DisjointPathsCI: return "disjoint-paths-CI";
        case CmRule::ChordalCliqueCondition: return "chordal-clique-condition";
    }
    return "unknown";
}

std::string_view to_string(NotCmRule rule) {
    switch (rule) {
        case NotCmRule::ToughnessNotHalf: return "toughness-not-half";
        case NotCmRule::TwoVertexConnected: return "two-vertex-connected";
        case NotCmRule::NotEquidimensional: return "not-equidimensional";
        case NotCmRule::OneToughNonComplete: return "one-tough-non-complete";
    }
    return "unknown";
}

std::string_view to_string(ScreenStatus status) {
    switch (status) {
        case ScreenStatus::CMCertified: return "cm-certified";
        case ScreenStatus::NotCMCertified: return "not-cm-certified";
        case ScreenStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::string_view citation(CmRule rule) {
    switch (rule) {
        case CmRule::Complete:
            return "J_{K_n} is the ideal of maximal minors of a generic 2 x n matrix, a Cohen-Macaulay prime";
        case CmRule::DisjointPathsCI:
            return "J_G is a complete intersection iff every connected component of G is a path";
        case CmRule::ChordalCliqueCondition:
            return "chordal G whose maximal cliques pairwise meet in at most one vertex, each vertex in at most "
                   "two of them, has Cohen-Macaulay R/J_G";
    }
    return "";
}

std::string_view citation(NotCmRule rule) {
    switch (rule) {
        case NotCmRule::ToughnessNotHalf:
            return "R/J_G S_2 (in particular Cohen-Macaulay) with G connected forces G complete or tau(G) = 1/2";
        case NotCmRule::TwoVertexConnected:
            return "for G 2-vertex-connected and not complete, R/J_G is not S_2";
        case NotCmRule::NotEquidimensional:
            return "a Cohen-Macaulay standard graded algebra is equidimensional";
        case NotCmRule::OneToughNonComplete:
            return "for 1-tough G, R/J_G is Cohen-Macaulay iff equidimensional iff a domain iff G is complete";
    }
    return "";
}

ScreenVerdict cm_screen(const Graph& g) {
    ScreenVerdict verdict;
    verdict.dimension = krull_dimension(g);
    verdict.equidimensional = is_equidimensional(g);

    RuleSets rules;
    const auto parts = components(g);
    if (parts.size() == 1) {
        verdict.toughness = toughness(g);
        verdict.kappa = vertex_connectivity(g);
        rules = screen_connected(g, *verdict.toughness, *verdict.kappa, verdict.equidimensional);
    } else {
        bool all_certified = true;
        for (VertexSet part : parts) {
            const Graph h = induced_subgraph(g, part);
            RuleSets local = screen_connected(h, toughness(h), vertex_connectivity(h), is_equidimensional(h));
            if (local.certified.empty()) all_certified = false;
            if (all_certified) merge_sorted(rules.certified, local.certified);
            merge_sorted(rules.violated, local.violated);
        }
        if (!all_certified) rules.certified.clear();
        if (!verdict.equidimensional) merge_sorted(rules.violated, {NotCmRule::NotEquidimensional});
    }

    verdict.certified_by = std::move(rules.certified);
    verdict.violations = std::move(rules.violated);
    if (!verdict.certified_by.empty()) {
        verdict.status = ScreenStatus::CMCertified;
    } else if (!verdict.violations.empty()) {
        verdict.status = ScreenStatus::NotCMCertified;
    }
    return verdict;
}

}  // namespace bei
