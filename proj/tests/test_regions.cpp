#include "doctest.h"

#include <bit>
#include <cmath>
#include <random>

#include "drsl/regions.hpp"
#include "drsl/verify.hpp"

using namespace drsl;
using R = RegionLabel;

TEST_CASE("representative points")
{
    CHECK(classify(0.5, 0.0) == R::P0);
    CHECK(classify(0.5, -1.0) == R::P0);
    CHECK(classify(0.6, 0.3) == R::P1);
    CHECK(classify(1.0, kAlpha) == R::P2);
    CHECK(classify(2.0, 0.1) == R::P2);
    CHECK(classify(1.0, 0.8) == R::P3);
    CHECK(classify(0.8, 1.0) == R::P4);
    CHECK(classify(0.5, 0.8) == R::P5);
    CHECK(classify(0.3, 0.5) == R::P6);
    CHECK(classify(-1.0, 0.5) == R::LeftHalf);
    CHECK(classify(0.0, 0.5) == R::SingularAxis);
}

TEST_CASE("the seven predicates partition the right half-plane")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ux(1e-6, 3.0);
    std::uniform_real_distribution<double> uy(-3.0, 3.0);
    for (int i = 0; i < 200000; ++i) {
        const double x = ux(rng);
        const double y = uy(rng);
        REQUIRE(std::popcount(region_predicates(x, y)) == 1);
    }
    // Boundary points as well.
    for (const auto& [x, y] : {std::pair{kAlpha, kAlpha}, {1.0, 0.0}, {0.5, 0.5}, {1.0, 1.0}, {0.2, kAlpha}}) {
        CHECK(std::popcount(region_predicates(x, y)) == 1);
    }
}

TEST_CASE("label names round-trip")
{
    for (std::size_t k = 0; k < kRegionCount; ++k) {
        const auto l = static_cast<RegionLabel>(k);
        CHECK(region_from_string(to_string(l)) == l);
    }
    CHECK_FALSE(region_from_string("P7"));
}

TEST_CASE("contraction factor table")
{
    CHECK(contraction_factor(R::P1) == 0.5);
    CHECK(contraction_factor(R::P2) == 0.5);
    CHECK(contraction_factor(R::P3) == 0.5);
    CHECK(contraction_factor(R::P4) == 1.0);
    CHECK(*contraction_factor(R::P5) == doctest::Approx(1.508790206));
    CHECK(contraction_factor(R::P6) == contraction_factor(R::P5));
    CHECK_FALSE(contraction_factor(R::P0));
    CHECK_FALSE(contraction_factor(R::LeftHalf));
}

TEST_CASE("transition table")
{
    CHECK(allowed_transitions(R::P1) == RegionSet{R::P1, R::P2});
    CHECK(allowed_transitions(R::P2) == RegionSet{R::P3, R::P4});
    CHECK(allowed_transitions(R::P3) == RegionSet{R::P4});
    CHECK(allowed_transitions(R::P4) == RegionSet{R::P4, R::P5});
    CHECK(allowed_transitions(R::P5) == RegionSet{R::P6});
    CHECK(allowed_transitions(R::P6) == RegionSet{R::P6, R::P1, R::P2});
    CHECK(allowed_transitions(R::P0) == RegionSet::all());
    CHECK_THROWS_AS(allowed_transitions(R::P1, 0.5), UncertifiedRegime);
    CHECK_THROWS_AS(check_step({0.6, 0.3}, 0.6), UncertifiedRegime);
    // Below epsilon no P6 contract is claimed.
    CHECK(successor_contract({0.05, 0.5}) == RegionSet::all());
    CHECK(successor_contract({0.3, 0.5}) == allowed_transitions(R::P6));
}

TEST_CASE("constants against independent closed forms")
{
    const RegionConstants& k = region_constants();
    const long double s2 = std::sqrt(2.0L);
    const long double gamma = 2.5L - s2 + 0.5L * std::sqrt(29.0L - 20.0L * s2);
    CHECK(k.alpha == kAlpha);
    CHECK(k.epsilon == doctest::Approx(static_cast<double>(std::pow(1.0L - std::pow(2.0L, -1.0L / 3.0L), 1.5L))));
    CHECK(std::abs(k.epsilon - 0.0937) < 5e-5);
    CHECK(k.gamma == doctest::Approx(static_cast<double>(gamma)).epsilon(1e-15));
    CHECK(k.gamma * k.eta == doctest::Approx(1.0).epsilon(1e-15));
    // eta is the smaller root of t^2 - (5 - 2 sqrt2) t + 1.
    CHECK(k.eta * k.eta - (5.0 - 2.0 * std::sqrt(2.0)) * k.eta + 1.0 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(k.gamma * k.gamma * k.gamma / 4.0 <= 0.86);
    CHECK(std::abs(k.upsilon_next - 0.18124764381) < 1e-9);
}

TEST_CASE("per-region contracts on seeded samples")
{
    std::mt19937_64 rng(99);
    for (R want : {R::P1, R::P2, R::P3, R::P4, R::P5, R::P6}) {
        for (int i = 0; i < 3000; ++i) {
            const State2D s = sample_region(rng, RegionSet{want}, 0.0, 3.0, 0.0, 3.0);
            const StepReport step = check_step(s);
            REQUIRE(step.from.label == want);
            CHECK(step.bound_satisfied);
            if (want != R::P6 || s.x >= region_constants().epsilon) {
                CHECK(step.allowed);
            }
        }
    }
}

TEST_CASE("sampler stays clear of boundaries")
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        const State2D s = sample_region(rng, RegionSet{R::P1, R::P3}, 0.0, 2.0, 0.0, 2.0);
        CHECK(boundary_distance(s.x, s.y) > kBoundaryMargin);
    }
}

TEST_CASE("check_step reports distance ratios")
{
    const StepReport r = check_step({0.9, 0.1});
    CHECK(r.from.label == R::P1);
    REQUIRE(r.ratio);
    CHECK(*r.ratio <= 0.5);
    CHECK_THROWS_AS(check_step({-0.5, 0.1}), std::invalid_argument);
    const StepReport fixed = check_step({kAlpha, kAlpha});
    CHECK_FALSE(fixed.ratio);
}

TEST_CASE("return map audit")
{
    // In floating point the fixed point itself rounds to rho^2 > 1, which is P2.
    CHECK(classify(kAlpha, kAlpha) == R::P2);
    CHECK_THROWS_AS(return_map_audit({kAlpha, kAlpha}), std::invalid_argument);
    for (const State2D s : {State2D{0.9, 0.1}, State2D{0.5, 0.4}, State2D{0.99, 0.01}}) {
        const ReturnAudit a = return_map_audit(s);
        CHECK(a.m >= 1);
        CHECK(a.ratio <= 0.86);
    }
    CHECK_THROWS_AS(return_map_audit({0.5, 0.8}), std::invalid_argument);
    CHECK_THROWS_AS(return_map_audit({0.99, 0.01}, 1), BudgetExceeded);
}

TEST_CASE("g is nonnegative on (pi/4, pi/2) and vanishes at arcsin(2^(-1/6))")
{
    for (int i = 1; i < 1000; ++i) {
        const double t = M_PI / 4 + (M_PI / 4) * i / 1000.0;
        CHECK(g_function(t) >= -1e-15);
    }
    CHECK(std::abs(g_function(std::asin(std::pow(2.0, -1.0 / 6.0)))) < 1e-12);
}
