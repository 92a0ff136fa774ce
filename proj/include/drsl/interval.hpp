#pragma once

/**
 * @file interval.hpp
 * @brief Validated interval arithmetic.
 *
 * Interval: double endpoints. Every operation rounds to nearest and then
 * widens by one ulp on each side, which encloses the exact result because
 * round-to-nearest is off by at most half an ulp.
 *
 * RationalInterval: exact rational endpoints; only roots are approximated,
 * by outward dyadic enclosures of a chosen precision.
 */

#include <cmath>
#include <limits>
#include <string>

#include "drsl/field.hpp"

namespace drsl {

class Interval {
public:
    Interval() = default;
    Interval(double v) : lo_(v), hi_(v) {} // NOLINT(google-explicit-constructor)
    Interval(double lo, double hi);

    /// Smallest double interval containing q.
    static Interval enclose(const Rational& q);
    static Interval enclose(const Rational& lo, const Rational& hi);
    static Interval sqrt2();

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double width() const { return hi_ - lo_; }
    double mid() const { return 0.5 * (lo_ + hi_); }
    /// Largest absolute value in the interval.
    double mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }
    bool contains(double v) const { return lo_ <= v && v <= hi_; }
    bool is_point() const { return lo_ == hi_; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

Interval sqr(const Interval& a);
/// Square root; a negative lower end is clamped to 0, so callers must only
/// pass enclosures of quantities known to be nonnegative.
Interval sqrt(const Interval& a);
Interval hull(const Interval& a, const Interval& b);

inline double round_down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
inline double round_up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

/// Largest double <= q and smallest double >= q.
double rational_floor_double(const Rational& q);
double rational_ceil_double(const Rational& q);

class RationalInterval {
public:
    static constexpr unsigned long kDefaultBits = 128;

    RationalInterval() = default;
    RationalInterval(Rational v) : lo_(v), hi_(std::move(v)) {} // NOLINT(google-explicit-constructor)
    RationalInterval(long v) : lo_(v), hi_(v) {} // NOLINT(google-explicit-constructor)
    RationalInterval(Rational lo, Rational hi);

    static RationalInterval sqrt2(unsigned long bits = kDefaultBits);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    Rational mag() const;
    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains_zero() const { return sgn(lo_) <= 0 && sgn(hi_) >= 0; }
    bool positive() const { return sgn(lo_) > 0; }
    bool negative() const { return sgn(hi_) < 0; }
    /// True when the two enclosures share a point.
    bool overlaps(const RationalInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    /// Outward rounding of both endpoints to multiples of 2^-bits.
    RationalInterval rounded(unsigned long bits = kDefaultBits) const;
    Interval to_interval() const { return Interval::enclose(lo_, hi_); }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator-(const RationalInterval& a) { return {-a.hi_, -a.lo_}; }

    RationalInterval& operator+=(const RationalInterval& o) { return *this = *this + o; }
    RationalInterval& operator-=(const RationalInterval& o) { return *this = *this - o; }
    RationalInterval& operator*=(const RationalInterval& o) { return *this = *this * o; }

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

private:
    Rational lo_{0};
    Rational hi_{0};
};

RationalInterval sqr(const RationalInterval& a);
RationalInterval pow(const RationalInterval& a, unsigned n);
RationalInterval sqrt(const RationalInterval& a, unsigned long bits = RationalInterval::kDefaultBits);
/// n-th root of a nonnegative interval.
RationalInterval root(const RationalInterval& a, unsigned long n,
                      unsigned long bits = RationalInterval::kDefaultBits);

std::string to_string(const Interval& a);
std::string to_string(const RationalInterval& a, int digits = 20);

} // namespace drsl
