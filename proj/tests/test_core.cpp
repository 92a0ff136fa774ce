#include "doctest.h"

#include <cmath>
#include <random>

#include "drsl/core.hpp"

using namespace drsl;

namespace {

double max_gap(const PointN& a, const PointN& b)
{
    double g = 0.0;
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        g = std::max(g, std::abs(a[k] - b[k]));
    }
    return g;
}

} // namespace

TEST_CASE("PointN rejects short or non-finite input")
{
    CHECK_THROWS_AS(PointN({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(PointN({1.0, NAN}), std::invalid_argument);
    CHECK_THROWS_AS(PointN({1.0, INFINITY, 0.0}), std::invalid_argument);
    CHECK(PointN({3.0, 4.0}).norm() == 5.0);
    CHECK(PointN({1.0, 2.0, 2.0, 4.0}).norm() == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("Params validates alpha and dimension")
{
    CHECK_THROWS_AS(Params(-0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Params(NAN, 2), std::invalid_argument);
    CHECK_THROWS_AS(Params(0.5, 1), std::invalid_argument);
    CHECK(Params().certified());
    CHECK_FALSE(Params(0.5, 2).certified());
    CHECK_FALSE(Params(kAlpha, 3).certified());
}

TEST_CASE("projections")
{
    const Params p;
    const PointN q{3.0, -4.0};
    CHECK(project_line(q, p) == PointN{3.0, kAlpha});
    const PointN s = project_sphere(q);
    CHECK(s[0] == doctest::Approx(0.6));
    CHECK(s[1] == doctest::Approx(-0.8));
    CHECK_THROWS_AS(project_sphere(PointN{0.0, 0.0}), SingularPoint);
    CHECK_THROWS_AS(project_line(PointN{1.0, 2.0, 3.0}, p), DimensionMismatch);

    const PointN q3{1.0, 2.0, 3.0};
    const PointN l3 = project_line(q3, Params(0.25, 3));
    CHECK(l3 == PointN{1.0, 0.25, 0.0});
}

TEST_CASE("reflections are involutions")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
        std::vector<double> c(n);
        for (double& v : c) {
            v = u(rng);
        }
        const PointN p(c);
        const Params params(kAlpha, n);
        CHECK(max_gap(reflect(reflect(p, SetKind::Line, params), SetKind::Line, params), p) <= 1e-14);
        const PointN rs = reflect(p, SetKind::Sphere, params);
        // The sphere reflection sends r u to (2 - r) u; it is an involution only inside radius 2.
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(rs[k] == doctest::Approx((2.0 / p.norm() - 1.0) * p[k]).epsilon(1e-13).scale(1.0));
        }
        if (p.norm() < 2.0) {
            // Rounding in 2 - r is amplified near radius 2.
            CHECK(max_gap(reflect(rs, SetKind::Sphere, params), p) <= 1e-14 * (1.0 + 8.0 / (2.0 - p.norm())));
        }
    }
}

TEST_CASE("closed-form step agrees with the composed reflections")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 20000; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
        std::vector<double> c(n);
        for (double& v : c) {
            v = u(rng);
        }
        const PointN p(c);
        const Params params(0.3 + 0.1 * static_cast<double>(i % 5), n);
        CHECK(max_gap(dr_step(p, params), dr_step_composed(p, params)) <= 1e-12 * std::max(1.0, p.norm()));
    }
}

TEST_CASE("planar step matches the N-dimensional step bit for bit")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 5000; ++i) {
        const State2D s{u(rng), u(rng)};
        const State2D a = dr_step_2d(s);
        const PointN b = dr_step(PointN{s.x, s.y}, Params());
        CHECK(a.x == b[0]);
        CHECK(a.y == b[1]);
        const State2D c = dr_step_2d_polar(s);
        CHECK(std::abs(a.x - c.x) <= 1e-14);
        CHECK(std::abs(a.y - c.y) <= 1e-13 * std::max(1.0, s.rho()));
    }
}

TEST_CASE("first step from the positive x-axis lands on (1, alpha)")
{
    for (double x0 : {0.1, 0.5, 1.0, 2.0, 17.0}) {
        const State2D s = dr_step_2d({x0, 0.0});
        CHECK(s.x == 1.0);
        CHECK(s.y == kAlpha);
    }
}

TEST_CASE("fixed points and the singular axis")
{
    const State2D fix{kAlpha, kAlpha};
    const State2D next = dr_step_2d(fix);
    CHECK(std::abs(next.x - kAlpha) <= 1e-16);
    CHECK(std::abs(next.y - kAlpha) <= 1e-16);

    State2D axis{0.0, 0.3};
    for (int n = 0; n < 1000; ++n) {
        axis = dr_step_2d(axis);
        REQUIRE(axis.x == 0.0);
    }
    CHECK_THROWS_AS(dr_step_2d({0.0, 0.0}), SingularPoint);
}

TEST_CASE("mirror symmetry holds exactly per step")
{
    State2D a{0.5, 0.4};
    State2D b{-0.5, 0.4};
    for (int n = 0; n < 300; ++n) {
        a = dr_step_2d(a);
        b = dr_step_2d(b);
        REQUIRE(a.x == -b.x);
        REQUIRE(a.y == b.y);
    }
}

TEST_CASE("theta is in (-pi, pi]")
{
    CHECK(State2D{-1.0, -0.0}.theta() == doctest::Approx(M_PI));
    CHECK(State2D{-1.0, 0.0}.theta() == doctest::Approx(M_PI));
    CHECK(State2D{0.0, -1.0}.theta() == doctest::Approx(-M_PI / 2));
}

TEST_CASE("intersection points")
{
    const auto right = intersection_point(kAlpha, Branch::Right);
    REQUIRE(right);
    CHECK(right->x == kAlpha);
    CHECK(right->y == kAlpha);
    CHECK(intersection_point(kAlpha, Branch::Left)->x == -kAlpha);
    CHECK(intersection_point(0.0, Branch::Right)->x == 1.0);
    CHECK(intersection_point(1.0, Branch::Right)->x == 0.0);
    CHECK(intersection_point(0.6, Branch::Right)->x == doctest::Approx(0.8));
    CHECK_FALSE(intersection_point(1.5, Branch::Right));
    CHECK_THROWS_AS(dist_sq_to_solution({1.0, 1.0}, Branch::Right, 1.5), std::domain_error);
    CHECK(dist_sq_to_solution({kAlpha, 0.0}, Branch::Right) == doctest::Approx(0.5));
}

TEST_CASE("general alpha: the orbit converges to the shifted intersection point")
{
    State2D s{0.6, 0.1};
    for (int n = 0; n < 5000; ++n) {
        s = dr_step_2d(s, 0.5);
    }
    CHECK(s.x == doctest::Approx(std::sqrt(0.75)).epsilon(1e-9));
    CHECK(s.y == doctest::Approx(0.5).epsilon(1e-9));
}
