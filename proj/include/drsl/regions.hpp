#pragma once

/**
 * @file regions.hpp
 * @brief The seven-region partition of the half-plane x > 0 and the per-step
 *        contracts the iteration obeys in each region (alpha = 1/sqrt(2)).
 *
 *   P0: y <= 0 < x
 *   P1: x^2 + y^2 <= 1 and 0 < y <= x
 *   P2: x^2 + y^2 >  1 and 0 < y <= alpha
 *   P3: alpha < y <= x
 *   P4: x^2 + y^2 >  1 and 0 < x < y
 *   P5: x^2 + y^2 <= 1, x > 0 and y > alpha
 *   P6: 0 < x < y <= alpha
 */

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string_view>

#include "drsl/core.hpp"

namespace drsl {

enum class RegionLabel : std::uint8_t { P0, P1, P2, P3, P4, P5, P6, LeftHalf, SingularAxis };

inline constexpr std::size_t kRegionCount = 9;

std::string_view to_string(RegionLabel label);
std::optional<RegionLabel> region_from_string(std::string_view name);

/// Constants that drive the convergence argument. Values are computed, not typed in.
struct RegionConstants {
    double alpha;
    double epsilon;   ///< (1 - 2^(-1/3))^(3/2), the x-threshold keeping orbits out of P0
    double gamma;     ///< 5/2 - sqrt2 + sqrt(29 - 20 sqrt2)/2, expansion bound in P5 u P6
    double eta;       ///< 1 / gamma
    double delta_cap; ///< alpha - sqrt(gamma)/2
    double upsilon;   ///< delta_cap / sqrt(alpha^2 + delta_cap^2)
    double upsilon_next; ///< upsilon / sqrt(alpha^2 + upsilon^2)
};

const RegionConstants& region_constants();

class RegionSet {
public:
    RegionSet() = default;
    RegionSet(std::initializer_list<RegionLabel> labels);
    static RegionSet all();

    bool contains(RegionLabel l) const { return bits_.test(static_cast<std::size_t>(l)); }
    void insert(RegionLabel l) { bits_.set(static_cast<std::size_t>(l)); }
    std::size_t size() const { return bits_.count(); }

    friend bool operator==(const RegionSet&, const RegionSet&) = default;

private:
    std::bitset<kRegionCount> bits_;
};

/// Bitmask of every P0..P6 predicate that holds at (x, y), bit k for Pk.
unsigned region_predicates(double x, double y);

RegionLabel classify(double x, double y);
inline RegionLabel classify(const State2D& s) { return classify(s.x, s.y); }

/// Upper bound on the one-step squared-distance ratio, when one is known.
std::optional<double> contraction_factor(RegionLabel label);

/// One-step successor table. Throws UncertifiedRegime for alpha != 1/sqrt(2).
/// The P6 entry only applies for x >= epsilon; see successor_contract().
RegionSet allowed_transitions(RegionLabel label, double alpha = kAlpha);

/// Successor set that applies to a concrete point: the table entry, or every
/// label where no contract is claimed (P0, and P6 with x < epsilon).
RegionSet successor_contract(const State2D& s);

inline constexpr double kRatioTolerance = 1e-12;

struct LabelledState {
    State2D state;
    RegionLabel label;
};

struct StepReport {
    LabelledState from;
    LabelledState to;
    std::optional<double> ratio; ///< empty when the starting distance is 0
    bool allowed = true;
    bool bound_satisfied = true;
};

StepReport check_step(const State2D& s, double alpha = kAlpha);

struct ReturnAudit {
    long m = 0;
    double ratio = 0.0;
};

inline constexpr long kDefaultReturnCap = 10'000;

/// Iterates from a P1 start until the orbit re-enters P1 and reports the
/// largest squared-distance ratio seen along the way.
ReturnAudit return_map_audit(const State2D& s0, long cap = kDefaultReturnCap, double alpha = kAlpha);

/// g(theta) = alpha + epsilon tan(theta) - sin(theta); nonnegative on (pi/4, pi/2).
double g_function(double theta);

} // namespace drsl
