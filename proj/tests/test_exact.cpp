#include "doctest.h"

#include <cmath>
#include <random>
#include <set>

#include "drsl/certify.hpp"
#include "drsl/sturm.hpp"

using namespace drsl;

namespace {

QSqrt2 q(long a, long b = 0)
{
    return {Rational(a), Rational(b)};
}

Rational frac(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

RationalPoly from_roots(const std::vector<long>& roots)
{
    RationalPoly p = RationalPoly::constant(Rational(1));
    for (long r : roots) {
        p = p * RationalPoly::linear_root(Rational(r));
    }
    return p;
}

} // namespace

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7/4") == Rational(-7, 4));
    CHECK(parse_rational("0.001") == Rational(1, 1000));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E+2") == Rational(250));
    CHECK(parse_rational("0.0937") == Rational(937, 10000)); // leading zeros are decimal, not octal
    CHECK(parse_rational("007") == Rational(7));
    CHECK(parse_rational("-.5") == Rational(-1, 2));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    for (const char* bad : {"", "abc", "1/0", "1.2.3", "1e", "1e5x", "--1", "."}) {
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    }
}

TEST_CASE("Q(sqrt2) arithmetic is exact")
{
    const QSqrt2 a = q(1, 2);
    const QSqrt2 b = q(3, -1);
    CHECK(a * b == q(-1, 5)); // (1 + 2r)(3 - r) = 3 - 4 + (6 - 1) r
    CHECK(a * a.inverse() == q(1));
    CHECK((a / b) * b == a);
    CHECK(QSqrt2::sqrt2() * QSqrt2::sqrt2() == q(2));
    CHECK(a.norm() == Rational(-7));
    CHECK_THROWS(q(0).inverse());
}

TEST_CASE("Q(sqrt2) sign agrees with a long double oracle")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> u(-1000, 1000);
    for (int i = 0; i < 20000; ++i) {
        const long a = u(rng);
        const long b = u(rng);
        const long double v = static_cast<long double>(a) + static_cast<long double>(b) * std::sqrt(2.0L);
        const int expect = v > 0 ? 1 : (v < 0 ? -1 : 0);
        CHECK(q(a, b).sign() == expect);
    }
    // Near-cancellation that doubles get wrong is still exact.
    const QSqrt2 close(Rational(665857), Rational(-470832)); // 665857^2 - 2 * 470832^2 = 1
    CHECK(close.sign() == 1);
    CHECK(close.conjugate().sign() == 1);
    CHECK((-close).sign() == -1);
    CHECK(q(1, -1) < q(0));
    CHECK(q(3, -2) > q(0));
}

TEST_CASE("polynomial evaluation is a ring homomorphism")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> u(-5, 5);
    for (int i = 0; i < 300; ++i) {
        std::vector<QSqrt2> pc(4);
        std::vector<QSqrt2> qc(3);
        for (auto& c : pc) {
            c = q(u(rng), u(rng));
        }
        for (auto& c : qc) {
            c = q(u(rng), u(rng));
        }
        const FieldPoly p(pc);
        const FieldPoly r(qc);
        const QSqrt2 t(frac(u(rng), 3), frac(u(rng), 7));
        CHECK((p * r)(t) == p(t) * r(t));
        CHECK((p + r)(t) == p(t) + r(t));
        CHECK((p - r)(t) == p(t) - r(t));
    }
}

TEST_CASE("division with remainder")
{
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> u(-9, 9);
    for (int i = 0; i < 300; ++i) {
        std::vector<Rational> ac(7);
        std::vector<Rational> bc(3);
        for (auto& c : ac) {
            c = u(rng);
        }
        for (auto& c : bc) {
            c = u(rng);
        }
        bc.back() = 1 + std::abs(u(rng));
        const RationalPoly a(ac);
        const RationalPoly b(bc);
        const auto [quot, rem] = a.divmod(b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
    CHECK_THROWS(RationalPoly{1, 2}.divmod(RationalPoly()));
}

TEST_CASE("degree cap")
{
    std::vector<Rational> c(18, Rational(1));
    CHECK_THROWS_AS(static_cast<void>(RationalPoly(c)), std::length_error);
    c.pop_back();
    CHECK(RationalPoly(c).degree() == 16);
}

TEST_CASE("gcd and square-free part")
{
    const RationalPoly p = from_roots({1, 1, 2, 3, 3, 3});
    const RationalPoly sf = square_free_part(p);
    CHECK(sf.monic() == from_roots({1, 2, 3}));
    CHECK(gcd(from_roots({1, 2}), from_roots({2, 5})) == from_roots({2}));
}

TEST_CASE("sturm_count examples")
{
    const RationalPoly z2m2{-2, 0, 1};
    CHECK(sturm_count(z2m2, Rational(0), Rational(2)) == 1);
    CHECK(sturm_count(z2m2, Rational(-2), Rational(2)) == 2);
    CHECK(sturm_count(certify::quintic(), Rational(0), Rational(1)) == 1);

    // Roots at 1 and 2, endpoint handling.
    const RationalPoly p = from_roots({1, 2});
    CHECK(sturm_count(p, Rational(1), Rational(2)) == 0);
    CHECK(sturm_count(p, Rational(1), Rational(2), Bound::Closed, Bound::Open) == 1);
    CHECK(sturm_count(p, Rational(1), Rational(2), Bound::Open, Bound::Closed) == 1);
    CHECK(sturm_count(p, Rational(1), Rational(2), Bound::Closed, Bound::Closed) == 2);
    CHECK(sturm_count(p, Rational(1), Rational(1), Bound::Closed, Bound::Closed) == 1);

    // Over Q(sqrt2): the quartic has a double root at sqrt2 and simple roots at sqrt2 +- sqrt6.
    const FieldPoly quartic = certify::quartic();
    CHECK(sturm_count(quartic, q(1), QSqrt2::sqrt2()) == 0);
    CHECK(sturm_count(quartic, q(1), QSqrt2::sqrt2(), Bound::Open, Bound::Closed) == 1);
    CHECK(sturm_count(quartic, q(-10), q(10)) == 3);

    CHECK_THROWS_AS(sturm_count(RationalPoly(), Rational(0), Rational(1)), ZeroPolynomial);
    CHECK_THROWS_AS(sturm_count(p, Rational(2), Rational(1)), std::invalid_argument);
}

TEST_CASE("sturm_count matches constructed root sets")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> root(-5, 5);
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<long> shift(1, 9);
    for (int i = 0; i < 300; ++i) {
        std::vector<long> roots(static_cast<std::size_t>(count(rng)));
        for (long& r : roots) {
            r = root(rng);
        }
        // Times an irreducible quadratic x^2 + k, which adds no real roots.
        const RationalPoly p = from_roots(roots) * RationalPoly{shift(rng), 0, 1};
        const long lo = root(rng);
        const long hi = lo + shift(rng);
        long expect = 0;
        for (long r : std::set<long>(roots.begin(), roots.end())) {
            expect += (lo < r && r < hi) ? 1 : 0;
        }
        CHECK(sturm_count(p, Rational(lo), Rational(hi)) == expect);
    }
}

TEST_CASE("sturm_count is consistent with sign changes on a fine grid")
{
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> u(-6, 6);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
        for (auto& v : c) {
            v = u(rng);
        }
        if (sgn(c.back()) == 0) {
            c.back() = 1;
        }
        const RationalPoly p(c);
        const RationalPoly sf = square_free_part(p);
        // Grid oracle in exact arithmetic: sign changes give a lower bound with matching parity.
        const Rational lo(-7, 3);
        const Rational hi(11, 5);
        if (sgn(sf(lo)) == 0 || sgn(sf(hi)) == 0) {
            continue;
        }
        long changes = 0;
        int last = sign(sf(lo));
        for (int k = 1; k <= 400; ++k) {
            const Rational x = lo + (hi - lo) * frac(k, 400);
            const int s = sign(sf(x));
            if (s != 0 && s != last) {
                ++changes;
                last = s;
            }
        }
        const long n = sturm_count(p, lo, hi);
        CHECK(n >= changes);
        CHECK((n - changes) % 2 == 0);
    }
}

TEST_CASE("isolate_root")
{
    const RationalPoly z2m2{-2, 0, 1};
    const auto r = isolate_root(z2m2, Rational(1), Rational(2), parse_rational("1e-12"));
    CHECK(r.hi - r.lo <= parse_rational("1e-12"));
    CHECK(r.lo * r.lo <= 2);
    CHECK(r.hi * r.hi >= 2);
    CHECK(r.lo <= parse_rational("1.414213562373"));
    CHECK(r.hi >= parse_rational("1.414213562373"));

    const auto z = isolate_root(certify::quintic(), Rational(0), Rational(1), parse_rational("1e-12"));
    CHECK(std::abs(z.lo.get_d() - 0.186012649543) < 1e-10);
    CHECK(std::abs(z.hi.get_d() / std::sqrt(2.0) - 0.131530805878) < 1e-10);

    // A midpoint hit returns the exact root.
    const auto exact = isolate_root(from_roots({1}), Rational(0), Rational(2), Rational(1, 100));
    CHECK(exact.lo == 1);
    CHECK(exact.hi == 1);

    CHECK_THROWS_AS(isolate_root(z2m2, Rational(-2), Rational(2), Rational(1, 10)), NotExactlyOneRoot);
    CHECK_THROWS_AS(isolate_root(z2m2, Rational(2), Rational(3), Rational(1, 10)), NotExactlyOneRoot);
}

TEST_CASE("quintic root against a long double bisection oracle")
{
    auto f = [](long double z) { return ((((8 * z + 4) * z - 39) * z - 7) * z + 51) * z - 9; };
    long double lo = 0;
    long double hi = 1;
    for (int i = 0; i < 80; ++i) {
        const long double mid = (lo + hi) / 2;
        (f(lo) * f(mid) <= 0 ? hi : lo) = mid;
    }
    CHECK(std::abs(static_cast<double>(lo) - 0.186012649543) < 1e-10);
}

TEST_CASE("verify_factorization")
{
    CHECK(verify_factorization(certify::sextic(), {RationalPoly::linear_root(Rational(1)), certify::quintic()}));
    const RationalPoly z2m2{-2, 0, 1};
    CHECK_FALSE(verify_factorization(z2m2, {from_roots({1}), RationalPoly{2, 1}}));

    const auto r2 = FieldPoly::linear_root(QSqrt2::sqrt2());
    CHECK(verify_factorization(certify::quartic(), {r2, r2, certify::quartic_quadratic_factor()}));
    // (w - sqrt2 - sqrt6)(w - sqrt2 + sqrt6) = (w - sqrt2)^2 - 6.
    CHECK(r2 * r2 - FieldPoly::constant(q(6)) == certify::quartic_quadratic_factor());
}

TEST_CASE("quartic identity against double evaluation")
{
    const double s2 = std::sqrt(2.0);
    for (double w = -3.0; w <= 3.0; w += 0.125) {
        const double lhs = std::pow(w, 4) - 4 * s2 * std::pow(w, 3) + 6 * w * w + 4 * s2 * w - 8;
        const double rhs = (w - s2) * (w - s2) * (w * w - 2 * s2 * w - 4);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(10));
    }
}
