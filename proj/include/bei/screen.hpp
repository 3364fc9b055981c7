#ifndef BEI_SCREEN_HPP
#define BEI_SCREEN_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "bei/connectivity.hpp"
#include "bei/graph.hpp"

namespace bei {

/// Rules whose firing proves R/J_G Cohen-Macaulay.
enum class CmRule { Complete, DisjointPathsCI, ChordalCliqueCondition };

/// Necessary conditions for Cohen-Macaulayness; a firing rule means the
/// condition fails.
enum class NotCmRule { ToughnessNotHalf, TwoVertexConnected, NotEquidimensional, OneToughNonComplete };

enum class ScreenStatus { CMCertified, NotCMCertified, Inconclusive };

std::string_view to_string(CmRule rule);
std::string_view to_string(NotCmRule rule);
std::string_view to_string(ScreenStatus status);
/// The mathematical statement behind a rule.
std::string_view citation(CmRule rule);
std::string_view citation(NotCmRule rule);

struct ScreenVerdict {
    ScreenStatus status = ScreenStatus::Inconclusive;
    /// Every sufficient rule that fired, in enum order.
    std::vector<CmRule> certified_by;
    /// Every necessary condition that failed, in enum order.
    std::vector<NotCmRule> violations;

    // Evidence. Toughness and κ are absent for disconnected graphs.
    std::optional<ToughnessValue> toughness;
    std::optional<int> kappa;
    int dimension = 0;
    bool equidimensional = false;

    /// Both rule families fired, which the theorems rule out.
    bool conflicting() const { return !certified_by.empty() && !violations.empty(); }
    /// First sufficient rule; requires status == CMCertified.
    CmRule reason() const { return certified_by.front(); }
};

/// Evaluates every sufficient and every necessary rule. Sufficient rules
/// take precedence in `status`. Disconnected graphs are screened per
/// component: CM iff every component is CM.
ScreenVerdict cm_screen(const Graph& g);

}  // namespace bei

#endif  // BEI_SCREEN_HPP
