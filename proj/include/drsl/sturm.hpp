#pragma once

/**
 * @file sturm.hpp
 * @brief Sturm sequences, exact real-root counting and bisection isolation.
 *
 * The sequence is built from the square-free part q of the input, so counts
 * are of distinct roots. For square-free q, V(a) - V(b) counts the roots in
 * (a, b]; endpoint roots are then added or removed by exact evaluation.
 */

#include <utility>
#include <vector>

#include "drsl/errors.hpp"
#include "drsl/polynomial.hpp"

namespace drsl {

enum class Bound { Open, Closed };

template <class K>
struct RootInterval {
    K lo;
    K hi;
};

template <class K>
std::vector<Polynomial<K>> sturm_sequence(const Polynomial<K>& p)
{
    if (p.is_zero()) {
        throw ZeroPolynomial();
    }
    std::vector<Polynomial<K>> seq;
    seq.push_back(square_free_part(p).positive_normalized());
    if (seq.back().degree() == 0) {
        return seq;
    }
    seq.push_back(seq.back().derivative().positive_normalized());
    while (true) {
        const auto& a = seq[seq.size() - 2];
        const auto& b = seq.back();
        auto r = a.divmod(b).second;
        if (r.is_zero()) {
            break;
        }
        // Field remainder, then a positive rescale in place of content stripping.
        seq.push_back((-r).positive_normalized());
    }
    return seq;
}

template <class K>
int sign_variations(const std::vector<Polynomial<K>>& seq, const K& x)
{
    int variations = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = sign(p(x));
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++variations;
        }
        last = s;
    }
    return variations;
}

/// Number of distinct real roots of p between lo and hi, honoring endpoint kinds.
template <class K>
long sturm_count(const Polynomial<K>& p, const K& lo, const K& hi, Bound lo_kind = Bound::Open,
                 Bound hi_kind = Bound::Open)
{
    if (p.is_zero()) {
        throw ZeroPolynomial();
    }
    if (hi < lo) {
        throw std::invalid_argument("sturm_count: empty interval");
    }
    if (lo == hi) {
        return lo_kind == Bound::Closed && hi_kind == Bound::Closed && is_zero(p(lo)) ? 1 : 0;
    }
    const auto seq = sturm_sequence(p);
    long count = sign_variations(seq, lo) - sign_variations(seq, hi); // roots in (lo, hi]
    if (hi_kind == Bound::Open && is_zero(seq.front()(hi))) {
        --count;
    }
    if (lo_kind == Bound::Closed && is_zero(seq.front()(lo))) {
        ++count;
    }
    return count;
}

/// Bisects an interval holding exactly one root (open endpoints) down to the
/// requested width. A midpoint hit returns the degenerate interval [r, r].
template <class K>
RootInterval<K> isolate_root(const Polynomial<K>& p, K lo, K hi, const Rational& width)
{
    const long n = sturm_count(p, lo, hi);
    if (n != 1) {
        throw NotExactlyOneRoot(n);
    }
    const auto seq = sturm_sequence(p);
    const auto& q = seq.front();
    const K w(width);
    const K two(2);
    while (w < hi - lo) {
        K mid = (lo + hi) / two;
        if (is_zero(q(mid))) {
            return {mid, mid};
        }
        // Counts roots in (lo, mid]; mid is not a root here.
        const long left = sign_variations(seq, lo) - sign_variations(seq, mid);
        if (left >= 1) {
            hi = std::move(mid);
        } else {
            lo = std::move(mid);
        }
    }
    return {lo, hi};
}

/// Exact check that lhs equals the product of factors.
template <class K>
bool verify_factorization(const Polynomial<K>& lhs, const std::vector<Polynomial<K>>& factors)
{
    Polynomial<K> prod = Polynomial<K>::constant(K(1));
    for (const auto& f : factors) {
        prod = prod * f;
    }
    return prod == lhs;
}

} // namespace drsl
