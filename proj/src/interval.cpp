#include "drsl/interval.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>

namespace drsl {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi)
{
    if (!(lo <= hi)) {
        throw std::invalid_argument("interval with lo > hi or NaN endpoint");
    }
}

double rational_floor_double(const Rational& q)
{
    double d = q.get_d(); // truncates toward zero
    if (Rational(d) > q) {
        d = round_down(d);
    }
    return d;
}

double rational_ceil_double(const Rational& q)
{
    double d = q.get_d();
    if (Rational(d) < q) {
        d = round_up(d);
    }
    return d;
}

Interval Interval::enclose(const Rational& q)
{
    return {rational_floor_double(q), rational_ceil_double(q)};
}

Interval Interval::enclose(const Rational& lo, const Rational& hi)
{
    return {rational_floor_double(lo), rational_ceil_double(hi)};
}

Interval Interval::sqrt2()
{
    // std::sqrt is correctly rounded, so one ulp either way brackets sqrt(2).
    static const Interval s{round_down(std::sqrt(2.0)), round_up(std::sqrt(2.0))};
    return s;
}

Interval operator+(const Interval& a, const Interval& b)
{
    return {round_down(a.lo_ + b.lo_), round_up(a.hi_ + b.hi_)};
}

Interval operator-(const Interval& a, const Interval& b)
{
    return {round_down(a.lo_ - b.hi_), round_up(a.hi_ - b.lo_)};
}

Interval operator*(const Interval& a, const Interval& b)
{
    const std::array<double, 4> p = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {round_down(*mn), round_up(*mx)};
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) {
        throw std::domain_error("interval division by an interval containing zero");
    }
    const std::array<double, 4> p = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {round_down(*mn), round_up(*mx)};
}

Interval sqr(const Interval& a)
{
    const double l2 = a.lo() * a.lo();
    const double h2 = a.hi() * a.hi();
    if (a.lo() >= 0.0) {
        return {round_down(l2), round_up(h2)};
    }
    if (a.hi() <= 0.0) {
        return {round_down(h2), round_up(l2)};
    }
    return {0.0, round_up(std::max(l2, h2))};
}

Interval sqrt(const Interval& a)
{
    if (a.hi() < 0.0) {
        throw std::domain_error("sqrt of a negative interval");
    }
    const double lo = a.lo() <= 0.0 ? 0.0 : std::max(0.0, round_down(std::sqrt(a.lo())));
    return {lo, round_up(std::sqrt(a.hi()))};
}

Interval hull(const Interval& a, const Interval& b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

// ---------------------------------------------------------------------------

namespace {

mpz_class pow2(unsigned long bits)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
    return r;
}

mpz_class floor_scaled(const Rational& q, const mpz_class& scale)
{
    mpz_class r;
    const mpz_class num = q.get_num() * scale;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

mpz_class ceil_scaled(const Rational& q, const mpz_class& scale)
{
    mpz_class r;
    const mpz_class num = q.get_num() * scale;
    mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Rational floor_root(const Rational& q, unsigned long n, unsigned long bits)
{
    const mpz_class m = floor_scaled(q, pow2(n * bits));
    mpz_class r;
    mpz_root(r.get_mpz_t(), m.get_mpz_t(), n);
    Rational out(r, pow2(bits));
    out.canonicalize();
    return out;
}

Rational ceil_root(const Rational& q, unsigned long n, unsigned long bits)
{
    const mpz_class m = ceil_scaled(q, pow2(n * bits));
    mpz_class r;
    mpz_root(r.get_mpz_t(), m.get_mpz_t(), n);
    mpz_class rn;
    mpz_pow_ui(rn.get_mpz_t(), r.get_mpz_t(), n);
    if (rn < m) {
        r += 1;
    }
    Rational out(r, pow2(bits));
    out.canonicalize();
    return out;
}

Rational rpow(const Rational& q, unsigned n)
{
    Rational r(1);
    for (unsigned i = 0; i < n; ++i) {
        r *= q;
    }
    return r;
}

} // namespace

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_) {
        throw std::invalid_argument("rational interval with lo > hi");
    }
}

RationalInterval RationalInterval::sqrt2(unsigned long bits)
{
    return drsl::sqrt(RationalInterval(2), bits);
}

Rational RationalInterval::mag() const
{
    return std::max(Rational(abs(lo_)), Rational(abs(hi_)));
}

RationalInterval RationalInterval::rounded(unsigned long bits) const
{
    const mpz_class scale = pow2(bits);
    Rational lo(floor_scaled(lo_, scale), scale);
    Rational hi(ceil_scaled(hi_, scale), scale);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b)
{
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b)
{
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b)
{
    const std::array<Rational, 4> p = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {*mn, *mx};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b)
{
    if (b.contains_zero()) {
        throw std::domain_error("interval division by an interval containing zero");
    }
    const std::array<Rational, 4> p = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return {*mn, *mx};
}

RationalInterval sqr(const RationalInterval& a)
{
    return pow(a, 2);
}

RationalInterval pow(const RationalInterval& a, unsigned n)
{
    if (n == 0) {
        return RationalInterval(1);
    }
    const Rational l = rpow(a.lo(), n);
    const Rational h = rpow(a.hi(), n);
    if (sgn(a.lo()) >= 0 || n % 2 == 1) {
        return {std::min(l, h), std::max(l, h)};
    }
    if (sgn(a.hi()) <= 0) {
        return {h, l};
    }
    return {Rational(0), std::max(l, h)};
}

RationalInterval sqrt(const RationalInterval& a, unsigned long bits)
{
    return root(a, 2, bits);
}

RationalInterval root(const RationalInterval& a, unsigned long n, unsigned long bits)
{
    if (sgn(a.hi()) < 0) {
        throw std::domain_error("root of a negative interval");
    }
    Rational lo = sgn(a.lo()) <= 0 ? Rational(0) : floor_root(a.lo(), n, bits);
    return {lo, ceil_root(a.hi(), n, bits)};
}

std::string to_string(const Interval& a)
{
    std::array<char, 96> buf{};
    std::snprintf(buf.data(), buf.size(), "[%.17g, %.17g]", a.lo(), a.hi());
    return buf.data();
}

std::string to_string(const RationalInterval& a, int digits)
{
    return "[" + to_decimal(a.lo(), digits) + ", " + to_decimal(a.hi(), digits) + "]";
}

} // namespace drsl
