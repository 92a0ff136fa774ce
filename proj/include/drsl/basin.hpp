#pragma once

/**
 * @file basin.hpp
 * @brief Trajectory runner, the theorem grid check and basin-of-attraction
 *        sampling for the planar iteration.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drsl/core.hpp"
#include "drsl/regions.hpp"

namespace drsl {

enum class Outcome { ConvergedRight, ConvergedLeft, Singular, Diverged, Undecided };

std::string_view to_string(Outcome o);
std::optional<Outcome> outcome_from_string(std::string_view name);

inline constexpr double kDivergenceRadius = 1e8;

struct TrajectoryConfig {
    State2D start;
    double alpha = kAlpha;
    double tol = 1e-12;
    long max_iter = 10'000;
    bool record_orbit = false;

    /// Throws std::invalid_argument unless tol > 0, max_iter >= 1 and every value is finite.
    void validate() const;
};

struct RegionRun {
    RegionLabel label;
    long count;

    friend bool operator==(const RegionRun&, const RegionRun&) = default;
};

/// Worst step whose distance ratio exceeded the region's contraction factor.
struct RatioViolation {
    long step;
    RegionLabel from;
    double ratio;
    double bound;

    friend bool operator==(const RatioViolation&, const RatioViolation&) = default;
};

struct TrajectoryResult {
    Outcome outcome = Outcome::Undecided;
    long iterations = 0;
    long p0_visits = 0; ///< iterates with y <= 0 and x != 0, either half-plane
    std::optional<long> last_p0_visit;
    std::optional<long> first_p1_hit;
    /// Labels of (|x|, y) per iterate, start included; only for alpha = 1/sqrt(2).
    std::vector<RegionRun> region_log;
    State2D final;
    std::optional<RatioViolation> max_ratio_violation;
    long monotone_violations = 0; ///< steps inside P1..P4 where the distance grew
    std::vector<State2D> orbit;   ///< start included, when recorded

    friend bool operator==(const TrajectoryResult&, const TrajectoryResult&) = default;
};

TrajectoryResult run_trajectory(const TrajectoryConfig& cfg);

// --- theorem grid ----------------------------------------------------------

struct GridFailure {
    State2D start;
    Outcome outcome;
    double final_distance;
};

struct GridReport {
    long total = 0;
    long converged = 0;
    long max_iterations = 0;
    double worst_final_distance = 0.0;
    std::vector<GridFailure> failures; ///< at most the first 20
    double wall_ms = 0.0;

    bool passed() const { return total > 0 && converged == total; }
};

/// Grid over [epsilon, 1] x [0, 1]: x = epsilon + i step plus the edge x = 1,
/// y = j step up to 1. Every point must converge to (alpha, alpha).
GridReport verify_theorem_main(double step = 0.01, double tol = 1e-9, long max_iter = 1000,
                               unsigned workers = 0);

// --- basin sampling --------------------------------------------------------

struct GridSpec {
    double x_lo = -2.0;
    double x_hi = 2.0;
    double y_lo = -2.0;
    double y_hi = 2.0;
    long nx = 100;
    long ny = 100;
    double alpha = kAlpha;
    double tol = 1e-12;
    long max_iter = 10'000;

    void validate() const;
    /// Node i of n equally spaced nodes from lo to hi, both ends included.
    static double node(double lo, double hi, long n, long i);

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct BasinCell {
    double x0 = 0.0;
    double y0 = 0.0;
    Outcome outcome = Outcome::Undecided;
    long iterations = 0;
    long p0_visits = 0;
    std::optional<long> first_p1_hit;
    State2D final;

    friend bool operator==(const BasinCell&, const BasinCell&) = default;
};

struct OutcomeCounts {
    long right = 0;
    long left = 0;
    long singular = 0;
    long diverged = 0;
    long undecided = 0;
    long undecided_with_p0 = 0;
};

struct BasinGrid {
    GridSpec spec;
    std::vector<BasinCell> cells; ///< row-major: cells[j * nx + i], j along y

    const BasinCell& at(long i, long j) const { return cells[static_cast<std::size_t>(j * spec.nx + i)]; }
    OutcomeCounts counts() const;

    friend bool operator==(const BasinGrid&, const BasinGrid&) = default;
};

/// workers = 0 picks the hardware concurrency. The result does not depend on it.
BasinGrid sample_basin(const GridSpec& spec, unsigned workers = 0);

/// Index-ordered parallel for, shared by the grid runners.
void parallel_for(long n, unsigned workers, const std::function<void(long)>& body);

} // namespace drsl
