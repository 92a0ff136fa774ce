#pragma once

/**
 * @file verify.hpp
 * @brief Seeded property runs of the per-region contracts.
 *
 * Points are drawn uniformly from a box by rejection and kept only when they
 * sit at least kBoundaryMargin away from every region boundary, so a
 * classification cannot flip under rounding.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "drsl/core.hpp"
#include "drsl/regions.hpp"

namespace drsl {

inline constexpr double kBoundaryMargin = 1e-9;

struct LemmaCheck {
    std::string name;
    long samples = 0;
    long failures = 0;
    double worst = 0.0;           ///< the check's headline statistic (e.g. max ratio)
    std::optional<State2D> witness; ///< first failing point
    std::string detail;
    double wall_ms = 0.0;

    bool passed() const { return samples > 0 && failures == 0; }
};

struct LemmaSuiteConfig {
    long samples = 100'000;
    std::uint64_t seed = 42;
    long p4_iterate = 1000;       ///< P4 samples iterated until they reach P5
    long p4_cap = 10'000;
    long return_samples = 1000;   ///< P1 starts for the return-map audit
    long symmetry_samples = 1000; ///< mirrored orbit pairs
    long symmetry_steps = 200;
    long operator_samples = 0;    ///< 0 means use samples
};

/// Smallest distance from (x, y) to any region boundary curve.
double boundary_distance(double x, double y);

/// Uniform draw from [x_lo, x_hi] x [y_lo, y_hi] restricted to the labels in
/// `want` and away from the boundaries.
State2D sample_region(std::mt19937_64& rng, const RegionSet& want, double x_lo, double x_hi, double y_lo,
                      double y_hi);

LemmaCheck check_lemma1(long samples, std::uint64_t seed);
LemmaCheck check_lemma_p4(long samples, long iterate, long cap, std::uint64_t seed);
LemmaCheck check_lemma_p5p6(long samples, std::uint64_t seed);
LemmaCheck check_return_map(long samples, std::uint64_t seed);
LemmaCheck check_remark_trajectory();
LemmaCheck check_symmetry(long samples, long steps, std::uint64_t seed);
LemmaCheck check_operator_consistency(long samples, std::uint64_t seed);

std::vector<LemmaCheck> verify_lemmas(const LemmaSuiteConfig& cfg = {});

nlohmann::json to_json(const LemmaCheck& c, bool include_timing = true);

} // namespace drsl
