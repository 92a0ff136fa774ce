#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over Q or Q(sqrt 2), exact throughout.
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "drsl/field.hpp"

namespace drsl {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const QSqrt2& v) { return v.is_zero(); }
inline std::string coeff_string(const Rational& q) { return q.get_str(); }
inline std::string coeff_string(const QSqrt2& v) { return v.to_string(); }

template <class K>
class Polynomial {
public:
    static constexpr int kMaxDegree = 16;

    Polynomial() = default;

    /// Coefficients ordered from the constant term upwards.
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<K> coeffs) : c_(coeffs) { normalize(); }

    static Polynomial constant(K c) { return Polynomial(std::vector<K>{std::move(c)}); }
    static Polynomial x() { return Polynomial(std::vector<K>{K(0), K(1)}); }
    /// x - r
    static Polynomial linear_root(const K& r) { return Polynomial(std::vector<K>{-r, K(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<std::size_t>(i)] : K(0); }
    const K& leading() const { return c_.back(); }

    K operator()(const K& x) const
    {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    /// Horner evaluation in another arithmetic (intervals, doubles).
    template <class T, class Conv>
    T evaluate_as(const T& x, Conv&& convert) const
    {
        T acc = convert(K(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + convert(*it);
        }
        return acc;
    }

    Polynomial derivative() const
    {
        if (c_.size() <= 1) {
            return {};
        }
        std::vector<K> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            d[i - 1] = c_[i] * K(static_cast<long>(i));
        }
        return Polynomial(std::move(d));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), K(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size()) {
            c_.resize(o.c_.size(), K(0));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial l, const Polynomial& r) { return l += r; }
    friend Polynomial operator-(Polynomial l, const Polynomial& r) { return l -= r; }
    friend Polynomial operator-(const Polynomial& p) { return Polynomial() - p; }

    friend Polynomial operator*(const Polynomial& l, const Polynomial& r)
    {
        if (l.is_zero() || r.is_zero()) {
            return {};
        }
        std::vector<K> out(l.c_.size() + r.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < l.c_.size(); ++i) {
            for (std::size_t j = 0; j < r.c_.size(); ++j) {
                out[i + j] += l.c_[i] * r.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const K& s, Polynomial p)
    {
        for (auto& c : p.c_) {
            c *= s;
        }
        p.normalize();
        return p;
    }

    friend bool operator==(const Polynomial& l, const Polynomial& r) { return l.c_ == r.c_; }

    /// Euclidean division over the coefficient field: *this = q * d + r, deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const
    {
        if (d.is_zero()) {
            throw std::domain_error("polynomial division by zero");
        }
        std::vector<K> rem = c_;
        const int dd = d.degree();
        const int qd = degree() - dd;
        if (qd < 0) {
            return {Polynomial(), *this};
        }
        std::vector<K> quot(static_cast<std::size_t>(qd + 1), K(0));
        const K inv_lead = K(1) / d.leading();
        for (int k = qd; k >= 0; --k) {
            const K& top = rem[static_cast<std::size_t>(k + dd)];
            if (drsl::is_zero(top)) {
                continue;
            }
            const K factor = top * inv_lead;
            quot[static_cast<std::size_t>(k)] = factor;
            for (int j = 0; j <= dd; ++j) {
                rem[static_cast<std::size_t>(k + j)] -= factor * d.c_[static_cast<std::size_t>(j)];
            }
        }
        rem.resize(static_cast<std::size_t>(dd));
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    /// Divides by |leading coefficient|; preserves the sign of every value.
    Polynomial positive_normalized() const
    {
        if (is_zero()) {
            return {};
        }
        K scale = leading();
        if (sign(scale) < 0) {
            scale = -scale;
        }
        return (K(1) / scale) * *this;
    }

    Polynomial monic() const
    {
        if (is_zero()) {
            return {};
        }
        return (K(1) / leading()) * *this;
    }

    std::string to_string(const std::string& var = "x") const
    {
        if (is_zero()) {
            return "0";
        }
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const K& c = c_[static_cast<std::size_t>(i)];
            if (drsl::is_zero(c)) {
                continue;
            }
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + coeff_string(c) + ")";
            if (i >= 1) {
                out += "*" + var;
            }
            if (i >= 2) {
                out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void normalize()
    {
        while (!c_.empty() && drsl::is_zero(c_.back())) {
            c_.pop_back();
        }
        if (degree() > kMaxDegree) {
            throw std::length_error("polynomial degree exceeds " + std::to_string(kMaxDegree));
        }
    }

    std::vector<K> c_;
};

using RationalPoly = Polynomial<Rational>;
using FieldPoly = Polynomial<QSqrt2>;

template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
template <class K>
Polynomial<K> square_free_part(const Polynomial<K>& p)
{
    if (p.degree() <= 0) {
        return p;
    }
    const auto g = gcd(p, p.derivative());
    return p.divmod(g).first;
}

/// Lifts a rational polynomial into Q(sqrt 2)[x].
inline FieldPoly to_field(const RationalPoly& p)
{
    std::vector<QSqrt2> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) {
        c.emplace_back(q);
    }
    return FieldPoly(std::move(c));
}

} // namespace drsl
