#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic in Q and Q(sqrt 2).
 */

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace drsl {

using Rational = mpq_class;

/// Parses "3", "-7/4", "0.001", "1e-3" or "2.5E+2" into an exact rational.
Rational parse_rational(std::string_view text);

/// Decimal rendering with the given number of significant digits (display only).
std::string to_decimal(const Rational& q, int digits = 17);

inline int sign(const Rational& q) { return sgn(q); }

/// a + b sqrt(2) with rational a, b. Every operation is exact.
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long a) : a_(a) {} // NOLINT(google-explicit-constructor)
    QSqrt2(Rational a) : a_(std::move(a)) {} // NOLINT(google-explicit-constructor)
    QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QSqrt2 sqrt2() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    /// Exact sign by case analysis on sign(a), sign(b) and a^2 versus 2 b^2.
    int sign() const;

    QSqrt2 conjugate() const { return {a_, -b_}; }
    /// Field norm a^2 - 2 b^2; zero only for zero.
    Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
    QSqrt2 inverse() const;

    double to_double() const;
    std::string to_string() const;

    QSqrt2& operator+=(const QSqrt2& o);
    QSqrt2& operator-=(const QSqrt2& o);
    QSqrt2& operator*=(const QSqrt2& o);
    QSqrt2& operator/=(const QSqrt2& o);

    friend QSqrt2 operator+(QSqrt2 l, const QSqrt2& r) { return l += r; }
    friend QSqrt2 operator-(QSqrt2 l, const QSqrt2& r) { return l -= r; }
    friend QSqrt2 operator*(QSqrt2 l, const QSqrt2& r) { return l *= r; }
    friend QSqrt2 operator/(QSqrt2 l, const QSqrt2& r) { return l /= r; }
    friend QSqrt2 operator-(const QSqrt2& v) { return {-v.a_, -v.b_}; }

    friend bool operator==(const QSqrt2& l, const QSqrt2& r) { return l.a_ == r.a_ && l.b_ == r.b_; }
    friend std::strong_ordering operator<=>(const QSqrt2& l, const QSqrt2& r)
    {
        const int s = (l - r).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    Rational a_{0};
    Rational b_{0};
};

using FieldElement = QSqrt2;

inline int sign(const QSqrt2& v) { return v.sign(); }

} // namespace drsl
