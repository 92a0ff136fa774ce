#include "drsl/field.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace drsl {

namespace {

mpz_class pow10(long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        Rational q;
        if (q.set_str(s, 10) != 0) {
            throw std::invalid_argument("bad rational literal: " + s);
        }
        if (sgn(q.get_den()) == 0) {
            throw std::invalid_argument("zero denominator: " + s);
        }
        q.canonicalize();
        return q;
    }

    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
        negative = s[i] == '-';
        ++i;
    }
    std::string digits;
    long scale = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
        const char c = s[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) {
                ++scale;
            }
        } else {
            throw std::invalid_argument("bad rational literal: " + s);
        }
    }
    if (!seen_digit) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
    long exponent = 0;
    if (i < s.size()) {
        const std::string e = s.substr(i + 1);
        std::size_t used = 0;
        try {
            exponent = std::stol(e, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent in: " + s);
        }
        if (used != e.size() || std::abs(exponent) > 10000) {
            throw std::invalid_argument("bad exponent in: " + s);
        }
    }
    Rational q{mpz_class(digits, 10)};
    const long shift = exponent - scale;
    if (shift >= 0) {
        q *= pow10(shift);
    } else {
        q /= pow10(-shift);
    }
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_decimal(const Rational& q, int digits)
{
    // Display only; decisions never go through mpf.
    const mpf_class f(q, 256);
    std::array<char, 128> buf{};
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
    return buf.data();
}

int QSqrt2::sign() const
{
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: compare a^2 with 2 b^2.
    const int c = cmp(a_ * a_, 2 * b_ * b_);
    return c > 0 ? sa : sb; // c == 0 impossible: sqrt(2) is irrational
}

QSqrt2 QSqrt2::inverse() const
{
    const Rational n = norm();
    if (sgn(n) == 0) {
        throw std::domain_error("division by zero in Q(sqrt 2)");
    }
    return {a_ / n, -b_ / n};
}

double QSqrt2::to_double() const
{
    return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

std::string QSqrt2::to_string() const
{
    if (sgn(b_) == 0) {
        return a_.get_str();
    }
    std::string out;
    if (sgn(a_) != 0) {
        out = a_.get_str() + (sgn(b_) > 0 ? " + " : " - ");
        out += Rational(abs(b_)).get_str();
    } else {
        out = b_.get_str();
    }
    return out + "*sqrt(2)";
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o)
{
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o)
{
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o)
{
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o)
{
    return *this *= o.inverse();
}

} // namespace drsl
