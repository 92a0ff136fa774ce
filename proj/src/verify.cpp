#include "drsl/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "drsl/basin.hpp"

namespace drsl {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

private:
    Clock::time_point start_ = Clock::now();
};

void fail(LemmaCheck& c, const State2D& s, const std::string& why)
{
    if (c.failures++ == 0) {
        c.witness = s;
        c.detail = why;
    }
}

std::string point(const State2D& s)
{
    std::array<char, 80> buf{};
    std::snprintf(buf.data(), buf.size(), "(%.17g, %.17g)", s.x, s.y);
    return buf.data();
}

std::string fmt(double v)
{
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.12g", v);
    return buf.data();
}

LemmaCheck named(std::string name)
{
    LemmaCheck c;
    c.name = std::move(name);
    return c;
}

} // namespace

double boundary_distance(double x, double y)
{
    const double r = std::hypot(x, y);
    return std::min({std::abs(r - 1.0), std::abs(y - x) / std::numbers::sqrt2, std::abs(y - kAlpha), std::abs(y),
                     std::abs(x)});
}

State2D sample_region(std::mt19937_64& rng, const RegionSet& want, double x_lo, double x_hi, double y_lo,
                      double y_hi)
{
    std::uniform_real_distribution<double> ux(x_lo, x_hi);
    std::uniform_real_distribution<double> uy(y_lo, y_hi);
    for (int attempt = 0; attempt < 1'000'000; ++attempt) {
        const State2D s{ux(rng), uy(rng)};
        if (boundary_distance(s.x, s.y) > kBoundaryMargin && want.contains(classify(s))) {
            return s;
        }
    }
    throw std::runtime_error("region sampler found no admissible point");
}

LemmaCheck check_lemma1(long samples, std::uint64_t seed)
{
    const Timer timer;
    LemmaCheck c = named("lemma1-contraction");
    std::mt19937_64 rng(seed);
    const RegionSet want{RegionLabel::P1, RegionLabel::P2, RegionLabel::P3};
    for (long k = 0; k < samples; ++k) {
        const State2D s = sample_region(rng, want, 0.0, 3.0, 0.0, 3.0);
        const StepReport step = check_step(s);
        ++c.samples;
        c.worst = std::max(c.worst, step.ratio.value_or(0.0));
        if (!(step.ratio.value_or(0.0) <= 0.5 + kRatioTolerance)) {
            fail(c, s, "ratio " + fmt(*step.ratio) + " > 1/2 from " + std::string(to_string(step.from.label)));
        } else if (!step.allowed) {
            fail(c, s, "transition " + std::string(to_string(step.from.label)) + " -> " +
                           std::string(to_string(step.to.label)) + " not in table");
        }
    }
    if (!c.failures) {
        c.detail = "max ratio " + fmt(c.worst) + " <= 1/2";
    }
    c.wall_ms = timer.ms();
    return c;
}

LemmaCheck check_lemma_p4(long samples, long iterate, long cap, std::uint64_t seed)
{
    const Timer timer;
    LemmaCheck c = named("lemma-p4");
    std::mt19937_64 rng(seed);
    const RegionSet want{RegionLabel::P4};
    long longest = 0;
    for (long k = 0; k < samples; ++k) {
        const State2D s = sample_region(rng, want, 0.0, 3.0, 0.0, 3.0);
        const StepReport step = check_step(s);
        ++c.samples;
        c.worst = std::max(c.worst, step.ratio.value_or(0.0));
        if (!(step.ratio.value_or(0.0) <= 1.0 + kRatioTolerance)) {
            fail(c, s, "ratio " + fmt(*step.ratio) + " > 1");
            continue;
        }
        if (step.to.label != RegionLabel::P4 && step.to.label != RegionLabel::P5) {
            fail(c, s, "successor " + std::string(to_string(step.to.label)) + " not in {P4, P5}");
            continue;
        }
        if (k < iterate) {
            State2D p = s;
            long n = 0;
            while (classify(p) != RegionLabel::P5 && n < cap) {
                p = dr_step_2d(p);
                ++n;
            }
            longest = std::max(longest, n);
            if (classify(p) != RegionLabel::P5) {
                fail(c, s, "no P5 visit within " + std::to_string(cap) + " steps");
            }
        }
    }
    c.detail = c.failures ? c.detail : "max ratio " + fmt(c.worst) + "; longest P4 stay " + std::to_string(longest);
    c.wall_ms = timer.ms();
    return c;
}

LemmaCheck check_lemma_p5p6(long samples, std::uint64_t seed)
{
    const Timer timer;
    LemmaCheck c = named("lemma-p5p6");
    const RegionConstants& k = region_constants();
    std::mt19937_64 rng(seed);
    const RegionSet want{RegionLabel::P5, RegionLabel::P6};
    for (long i = 0; i < samples; ++i) {
        const State2D s = sample_region(rng, want, 0.0, 1.0, 0.0, 1.0);
        const StepReport step = check_step(s);
        ++c.samples;
        const double ratio = step.ratio.value_or(0.0);
        c.worst = std::max(c.worst, ratio);
        if (!(ratio < k.gamma)) {
            fail(c, s, "ratio " + fmt(ratio) + " >= gamma");
        } else if (step.from.label == RegionLabel::P5 && step.to.label != RegionLabel::P6) {
            fail(c, s, "P5 successor is " + std::string(to_string(step.to.label)));
        } else if (step.from.label == RegionLabel::P6 && s.x >= k.epsilon) {
            if (!(step.to.state.x > s.x)) {
                fail(c, s, "x did not increase in P6");
            } else if (!step.allowed) {
                fail(c, s, "P6 successor " + std::string(to_string(step.to.label)) + " not in table");
            }
        }
    }
    const double g3 = k.gamma * k.gamma * k.gamma / 4.0;
    if (!(g3 <= 0.86)) {
        fail(c, {}, "gamma^3/4 = " + fmt(g3) + " > 0.86");
    }
    if (!c.failures) {
        c.detail = "max ratio " + fmt(c.worst) + " < gamma = " + fmt(k.gamma) + "; gamma^3/4 = " + fmt(g3);
    }
    c.wall_ms = timer.ms();
    return c;
}

LemmaCheck check_return_map(long samples, std::uint64_t seed)
{
    const Timer timer;
    LemmaCheck c = named("return-map");
    const RegionConstants& k = region_constants();
    const double bound = std::min(k.gamma * k.gamma * k.gamma / 4.0 + 1e-9, 0.86);
    std::mt19937_64 rng(seed);
    const RegionSet want{RegionLabel::P1};
    long longest = 0;
    for (long i = 0; i < samples; ++i) {
        const State2D s = sample_region(rng, want, 0.0, 1.0, 0.0, 1.0);
        ++c.samples;
        try {
            const ReturnAudit audit = return_map_audit(s);
            c.worst = std::max(c.worst, audit.ratio);
            longest = std::max(longest, audit.m);
            if (!(audit.ratio <= bound)) {
                fail(c, s, "return ratio " + fmt(audit.ratio) + " > " + fmt(bound));
            }
        } catch (const BudgetExceeded& e) {
            fail(c, s, e.what());
        }
    }
    if (!c.failures) {
        c.detail = "max ratio " + fmt(c.worst) + " <= " + fmt(bound) + "; longest return " + std::to_string(longest);
    }
    c.wall_ms = timer.ms();
    return c;
}

LemmaCheck check_remark_trajectory()
{
    const Timer timer;
    LemmaCheck c = named("remark-trajectory");
    long first_p1 = 0;
    for (double x0 : {0.1, 0.5, 1.0, 2.0}) {
        const State2D s{x0, 0.0};
        ++c.samples;
        State2D p = dr_step_2d(s);
        if (!(std::abs(p.x - 1.0) <= 1e-15 && std::abs(p.y - kAlpha) <= 1e-15)) {
            fail(c, s, "step 1 is " + point(p) + ", not (1, alpha)");
            continue;
        }
        State2D sixth{};
        long hit = 0;
        for (long n = 2; n <= 50 && hit == 0; ++n) {
            p = dr_step_2d(p);
            if (n == 6) {
                sixth = p;
            }
            if (classify(p) == RegionLabel::P1) {
                hit = n;
            }
        }
        first_p1 = std::max(first_p1, hit);
        if (classify(sixth) != RegionLabel::P1) {
            fail(c, s, "step 6 is " + point(sixth) + " in " + std::string(to_string(classify(sixth))) +
                           "; first P1 iterate is step " + std::to_string(hit));
        }
    }
    c.worst = static_cast<double>(first_p1);
    if (!c.failures) {
        c.detail = "step 1 = (1, alpha) and step 6 in P1 for x0 in {0.1, 0.5, 1, 2}";
    }
    c.wall_ms = timer.ms();
    return c;
}

LemmaCheck check_symmetry(long samples, long steps, std::uint64_t seed)
{
    const Timer timer;
    LemmaCheck c = named("mirror-symmetry");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (long i = 0; i < samples; ++i) {
        State2D a{std::abs(u(rng)), u(rng)};
        if (a.x == 0.0) {
            continue;
        }
        State2D b{-a.x, a.y};
        const State2D start = a;
        ++c.samples;
        for (long n = 0; n < steps; ++n) {
            a = dr_step_2d(a);
            b = dr_step_2d(b);
            const double err = std::max(std::abs(a.x + b.x), std::abs(a.y - b.y));
            c.worst = std::max(c.worst, err);
            if (err > 1e-12) {
                fail(c, start, "mirror error " + fmt(err) + " at step " + std::to_string(n + 1));
                break;
            }
        }
    }
    // The y-axis is invariant: x stays exactly 0.
    for (double y0 : {-1.5, -0.3, 0.3, 0.7071, 1.0, 2.0}) {
        State2D p{0.0, y0};
        ++c.samples;
        for (long n = 0; n < steps; ++n) {
            p = dr_step_2d(p);
            if (p.x != 0.0) {
                fail(c, {0.0, y0}, "x left the axis at step " + std::to_string(n + 1));
                break;
            }
        }
    }
    if (!c.failures) {
        c.detail = "max mirror error " + fmt(c.worst) + "; x = 0 preserved exactly";
    }
    c.wall_ms = timer.ms();
    return c;
}

LemmaCheck check_operator_consistency(long samples, std::uint64_t seed)
{
    const Timer timer;
    LemmaCheck c = named("operator-consistency");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (long i = 0; i < samples; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
        std::vector<double> coords(n);
        for (double& v : coords) {
            v = u(rng);
        }
        const PointN p(coords);
        if (p.norm() == 0.0) {
            continue;
        }
        const Params params(kAlpha, n);
        const PointN closed = dr_step(p, params);
        const PointN composed = dr_step_composed(p, params);
        double diff = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            diff = std::max(diff, std::abs(closed[k] - composed[k]));
        }
        // Relative to the largest magnitude involved, floored at 1.
        const double scale = std::max({1.0, p.norm(), closed.norm()});
        const double rel = diff / scale;
        ++c.samples;
        c.worst = std::max(c.worst, rel);
        if (rel > 1e-12) {
            fail(c, {p[0], p[1]}, "relative gap " + fmt(rel) + " in dimension " + std::to_string(n));
        }
    }
    if (!c.failures) {
        c.detail = "max relative gap " + fmt(c.worst) + " over dimensions 2..5";
    }
    c.wall_ms = timer.ms();
    return c;
}

std::vector<LemmaCheck> verify_lemmas(const LemmaSuiteConfig& cfg)
{
    if (cfg.samples < 1) {
        throw std::invalid_argument("samples must be at least 1");
    }
    // Independent streams per check, so one count does not shift another's points.
    return {
        check_lemma1(cfg.samples, cfg.seed),
        check_lemma_p4(cfg.samples, std::min(cfg.p4_iterate, cfg.samples), cfg.p4_cap, cfg.seed + 1),
        check_lemma_p5p6(cfg.samples, cfg.seed + 2),
        check_return_map(std::min(cfg.return_samples, cfg.samples), cfg.seed + 3),
        check_symmetry(std::min(cfg.symmetry_samples, cfg.samples), cfg.symmetry_steps, cfg.seed + 4),
        check_operator_consistency(cfg.operator_samples > 0 ? cfg.operator_samples : cfg.samples, cfg.seed + 5),
    };
}

nlohmann::json to_json(const LemmaCheck& c, bool include_timing)
{
    nlohmann::json j{{"check", c.name},
                     {"passed", c.passed()},
                     {"samples", c.samples},
                     {"failures", c.failures},
                     {"worst", c.worst},
                     {"detail", c.detail}};
    j["witness"] = c.witness ? nlohmann::json{{"x", c.witness->x}, {"y", c.witness->y}} : nlohmann::json(nullptr);
    if (include_timing) {
        j["wall_time_ms"] = c.wall_ms;
    }
    return j;
}

} // namespace drsl
