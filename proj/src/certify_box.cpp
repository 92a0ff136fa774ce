// Interval branch-and-bound sign certification of EQ3 and F_ETA.
#include <algorithm>
#include <cmath>
#include <vector>

#include "drsl/certify.hpp"
#include "drsl/errors.hpp"

namespace drsl::certify {

namespace {

/// Value with its two partial derivatives, for mean-value enclosures.
template <class T>
struct Grad2 {
    T v;
    T d0;
    T d1;

    Grad2(const T& c) : v(c), d0(0.0), d1(0.0) {} // NOLINT(google-explicit-constructor)
    Grad2(double c) : v(c), d0(0.0), d1(0.0) {}    // NOLINT(google-explicit-constructor)
    Grad2(T value, T g0, T g1) : v(std::move(value)), d0(std::move(g0)), d1(std::move(g1)) {}

    friend Grad2 operator+(const Grad2& a, const Grad2& b) { return {a.v + b.v, a.d0 + b.d0, a.d1 + b.d1}; }
    friend Grad2 operator-(const Grad2& a, const Grad2& b) { return {a.v - b.v, a.d0 - b.d0, a.d1 - b.d1}; }
    friend Grad2 operator*(const Grad2& a, const Grad2& b)
    {
        return {a.v * b.v, a.d0 * b.v + a.v * b.d0, a.d1 * b.v + a.v * b.d1};
    }
    friend Grad2 sqrt(const Grad2& a)
    {
        using std::sqrt;
        const T s = sqrt(a.v);
        const T two_s = T(2.0) * s;
        return {s, a.d0 / two_s, a.d1 / two_s};
    }
};

template <class T>
T eq3_expr(const T& rho, const T& w, const T& s2)
{
    using std::sqrt;
    const T c = sqrt(T(1.0) - w * w);
    const T w2 = w * w;
    return (T(2.0) * w2 - T(1.0)) * rho * rho - (T(4.0) * w2 - s2 * (w + c)) * rho -
           T(2.0) * s2 * c + T(2.0);
}

template <class T>
T f_eta_expr(const T& rho, const T& w, const T& s2, const T& eta)
{
    using std::sqrt;
    const T c = sqrt(T(1.0) - w * w);
    const T ew2 = eta * w * w;
    return (ew2 - T(1.0)) * rho * rho - (T(2.0) * ew2 - s2 * (w + c)) * rho -
           (s2 * c - T(1.5)) * eta - T(1.0);
}

const Interval& eta_interval()
{
    static const Interval e = eta_enclosure().to_interval();
    return e;
}

double eta_double()
{
    static const double e = eta_enclosure().mid().get_d();
    return e;
}

Interval eval_interval(FunctionId id, const Interval& rho, const Interval& w)
{
    return id == FunctionId::Eq3 ? eq3_expr<Interval>(rho, w, Interval::sqrt2())
                                 : f_eta_expr<Interval>(rho, w, Interval::sqrt2(), eta_interval());
}

Grad2<Interval> eval_grad(FunctionId id, const Interval& rho, const Interval& w)
{
    using G = Grad2<Interval>;
    const G r{rho, Interval(1.0), Interval(0.0)};
    const G x{w, Interval(0.0), Interval(1.0)};
    return id == FunctionId::Eq3 ? eq3_expr<G>(r, x, G(Interval::sqrt2()))
                                 : f_eta_expr<G>(r, x, G(Interval::sqrt2()), G(eta_interval()));
}

struct Bounds {
    double upper;
    double lower;
    std::array<bool, 2> reduced;
    std::array<double, 2> grad_mag;
};

/// Upper bound of f over the box: natural extension, then monotonicity
/// reduction to a face, then a mean-value form on what is left.
Bounds bound_box(FunctionId id, const Interval& rho, const Interval& w)
{
    const Interval natural = eval_interval(id, rho, w);
    Bounds b{natural.hi(), natural.lo(), {false, false}, {0.0, 0.0}};
    if (b.upper < 0.0 || b.lower >= 0.0) {
        return b;
    }

    const auto g = eval_grad(id, rho, w);
    b.grad_mag = {g.d0.mag(), g.d1.mag()};
    Interval r = rho;
    Interval x = w;
    if (g.d0.lo() >= 0.0) {
        r = Interval(rho.hi());
        b.reduced[0] = true;
    } else if (g.d0.hi() <= 0.0) {
        r = Interval(rho.lo());
        b.reduced[0] = true;
    }
    if (g.d1.lo() >= 0.0) {
        x = Interval(w.hi());
        b.reduced[1] = true;
    } else if (g.d1.hi() <= 0.0) {
        x = Interval(w.lo());
        b.reduced[1] = true;
    }

    double upper = b.upper;
    const auto gr = (b.reduced[0] || b.reduced[1]) ? eval_grad(id, r, x) : g;
    upper = std::min(upper, gr.v.hi());
    const double c0 = r.mid();
    const double c1 = x.mid();
    const Interval centre = eval_interval(id, Interval(c0), Interval(c1));
    const Interval mv = centre + gr.d0 * (r - Interval(c0)) + gr.d1 * (x - Interval(c1));
    upper = std::min(upper, mv.hi());
    b.upper = upper;
    return b;
}

struct Node {
    Interval rho;
    Interval w;
    int depth;
    std::string id;
};

} // namespace

std::string_view to_string(FunctionId id)
{
    return id == FunctionId::Eq3 ? "EQ3" : "F_ETA";
}

double eq3(double rho, double w)
{
    return eq3_expr<double>(rho, w, std::sqrt(2.0));
}

double f_eta(double rho, double w)
{
    return f_eta_expr<double>(rho, w, std::sqrt(2.0), eta_double());
}

Interval eq3(const Interval& rho, const Interval& w)
{
    return eval_interval(FunctionId::Eq3, rho, w);
}

Interval f_eta(const Interval& rho, const Interval& w)
{
    return eval_interval(FunctionId::FEta, rho, w);
}

double evaluate(FunctionId id, double rho, double w)
{
    return id == FunctionId::Eq3 ? eq3(rho, w) : f_eta(rho, w);
}

IntervalBox default_box(FunctionId id, const Rational& delta)
{
    if (sgn(delta) <= 0) {
        throw std::invalid_argument("delta must be positive");
    }
    const RationalInterval half_sqrt2 = RationalInterval::sqrt2() * RationalInterval(Rational(1, 2));
    IntervalBox box;
    box.function = id;
    if (id == FunctionId::Eq3) {
        box.lo = {Rational(0), Rational(0)};
        box.hi = {Rational(1), Rational(half_sqrt2.hi() - delta)};
    } else {
        box.lo = {delta, Rational(half_sqrt2.lo() + delta)};
        box.hi = {Rational(1), Rational(1 - delta)};
    }
    if (box.lo[1] > box.hi[1]) {
        throw std::invalid_argument("delta too large for the domain");
    }
    return box;
}

BoxCertificate certify_sign_on_box(const IntervalBox& box, const SignPolicy& policy)
{
    BoxCertificate cert;
    std::vector<Node> stack;
    stack.push_back({Interval::enclose(box.lo[0], box.hi[0]), Interval::enclose(box.lo[1], box.hi[1]), 0, ""});

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (++cert.boxes > policy.max_boxes) {
            throw BudgetExceeded("sign certification of " + std::string(to_string(box.function)) +
                                 " exceeded " + std::to_string(policy.max_boxes) + " boxes");
        }
        cert.max_depth = std::max(cert.max_depth, node.depth);

        const Bounds b = bound_box(box.function, node.rho, node.w);
        if (b.upper < 0.0) {
            if (policy.keep_leaves) {
                cert.leaves.push_back({node.rho, node.w, node.id});
            }
            continue;
        }
        const std::array<double, 2> width = {node.rho.width(), node.w.width()};
        if (b.lower >= 0.0 || std::max(width[0], width[1]) < policy.min_width) {
            cert.status = Status::Inconclusive;
            cert.offending = DoubleBox{node.rho, node.w, node.id};
            return cert;
        }

        // Split the direction that contributes most to the remaining slack.
        std::array<double, 2> score{};
        for (int k = 0; k < 2; ++k) {
            score[k] = b.reduced[k] ? 0.0 : width[k] * std::max(b.grad_mag[k], 1e-3);
        }
        int dim = score[0] >= score[1] ? 0 : 1;
        if (score[dim] == 0.0 || width[dim] < policy.min_width) {
            dim = width[0] >= width[1] ? 0 : 1;
        }

        const Interval& iv = dim == 0 ? node.rho : node.w;
        const double m = iv.mid();
        Node left = node;
        Node right = node;
        (dim == 0 ? left.rho : left.w) = Interval(iv.lo(), m);
        (dim == 0 ? right.rho : right.w) = Interval(m, iv.hi());
        left.depth = right.depth = node.depth + 1;
        left.id += '0';
        right.id += '1';
        // Right child is pushed first so the left one is processed first.
        stack.push_back(std::move(right));
        stack.push_back(std::move(left));
    }
    cert.status = Status::ProvedNegative;
    return cert;
}

} // namespace drsl::certify
