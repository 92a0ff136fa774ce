#include "doctest.h"

#include <cmath>
#include <random>

#include "drsl/interval.hpp"

using namespace drsl;

namespace {

bool encloses(const Interval& iv, const Rational& exact)
{
    return Rational(iv.lo()) <= exact && exact <= Rational(iv.hi());
}

} // namespace

TEST_CASE("double intervals enclose the exact result")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int i = 0; i < 20000; ++i) {
        const double a = u(rng);
        const double b = u(rng);
        const Interval x(a);
        const Interval y(b);
        const Rational ra(a);
        const Rational rb(b);
        CHECK(encloses(x + y, ra + rb));
        CHECK(encloses(x - y, ra - rb));
        CHECK(encloses(x * y, ra * rb));
        CHECK(encloses(x / y, ra / rb));
        CHECK(encloses(sqr(x), ra * ra));
        const Interval s = sqrt(Interval(std::abs(a)));
        CHECK(Rational(s.lo()) * Rational(s.lo()) <= Rational(std::abs(a)));
        CHECK(Rational(s.hi()) * Rational(s.hi()) >= Rational(std::abs(a)));
    }
}

TEST_CASE("interval operations on wide intervals")
{
    const Interval a(-1.0, 2.0);
    const Interval b(3.0, 4.0);
    CHECK((a * b).lo() <= -4.0);
    CHECK((a * b).hi() >= 8.0);
    CHECK(sqr(a).lo() == 0.0);
    CHECK(sqr(a).hi() >= 4.0);
    CHECK_THROWS_AS(b / a, std::domain_error);
    CHECK_THROWS_AS(sqrt(Interval(-2.0, -1.0)), std::domain_error);
    CHECK(sqrt(Interval(-1e-300, 4.0)).lo() == 0.0);
    CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
    CHECK(hull(a, b).lo() == -1.0);
    CHECK(hull(a, b).hi() == 4.0);
    CHECK(a.mag() == 2.0);
}

TEST_CASE("enclosing rationals and sqrt2")
{
    const Rational third(1, 3);
    const Interval t = Interval::enclose(third);
    CHECK(encloses(t, third));
    CHECK(t.hi() == std::nextafter(t.lo(), 1.0));
    const Interval exact = Interval::enclose(Rational(1, 4));
    CHECK(exact.is_point());
    const Interval s = Interval::sqrt2();
    CHECK(Rational(s.lo()) * Rational(s.lo()) < 2);
    CHECK(Rational(s.hi()) * Rational(s.hi()) > 2);
}

TEST_CASE("rational intervals")
{
    const RationalInterval s = RationalInterval::sqrt2();
    CHECK(s.lo() * s.lo() <= 2);
    CHECK(s.hi() * s.hi() >= 2);
    CHECK(s.width() <= Rational(1, mpz_class(1) << 127));

    const RationalInterval c = root(RationalInterval(Rational(1, 2)), 3);
    CHECK(c.lo() * c.lo() * c.lo() <= Rational(1, 2));
    CHECK(c.hi() * c.hi() * c.hi() >= Rational(1, 2));

    const RationalInterval a(Rational(-1), Rational(2));
    CHECK(pow(a, 2) == RationalInterval(Rational(0), Rational(4)));
    CHECK(pow(a, 3) == RationalInterval(Rational(-1), Rational(8)));
    CHECK(pow(RationalInterval(Rational(-3), Rational(-2)), 2) == RationalInterval(Rational(4), Rational(9)));
    CHECK_THROWS_AS(RationalInterval(1) / a, std::domain_error);
    CHECK_THROWS_AS(sqrt(RationalInterval(Rational(-2), Rational(-1))), std::domain_error);

    const RationalInterval third(Rational(1, 3));
    const RationalInterval r = third.rounded(20);
    CHECK(r.lo() <= third.lo());
    CHECK(r.hi() >= third.hi());
    CHECK(r.width() <= Rational(1, 1 << 20));
    CHECK(r.contains(Rational(1, 3)));

    const Interval d = s.to_interval();
    CHECK(d.lo() <= std::sqrt(2.0));
    CHECK(d.hi() >= std::sqrt(2.0));
}

TEST_CASE("rational interval predicates")
{
    const RationalInterval p(Rational(1, 10), Rational(2));
    CHECK(p.positive());
    CHECK_FALSE(p.negative());
    CHECK_FALSE(p.contains_zero());
    CHECK(p.overlaps(RationalInterval(Rational(2), Rational(3))));
    CHECK_FALSE(p.overlaps(RationalInterval(Rational(3), Rational(4))));
    CHECK(p.mag() == 2);
    CHECK(p.mid() == Rational(21, 20));
    CHECK(to_string(RationalInterval(Rational(1, 4)), 5) == "[0.25, 0.25]");
}
