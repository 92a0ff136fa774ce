#include "drsl/regions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace drsl {

namespace {

constexpr std::array<std::string_view, kRegionCount> kNames = {
    "P0", "P1", "P2", "P3", "P4", "P5", "P6", "LeftHalf", "SingularAxis"};

RegionConstants compute_constants()
{
    RegionConstants c{};
    const double s2 = std::sqrt(2.0);
    c.alpha = kAlpha;
    c.epsilon = std::pow(1.0 - std::cbrt(0.5), 1.5);
    c.gamma = 2.5 - s2 + 0.5 * std::sqrt(29.0 - 20.0 * s2);
    c.eta = 1.0 / c.gamma;
    c.delta_cap = c.alpha - std::sqrt(c.gamma) / 2.0;
    c.upsilon = c.delta_cap / std::hypot(c.alpha, c.delta_cap);
    c.upsilon_next = c.upsilon / std::hypot(c.alpha, c.upsilon);
    return c;
}

void require_certified(double alpha)
{
    if (alpha != kAlpha) {
        throw UncertifiedRegime();
    }
}

} // namespace

std::string_view to_string(RegionLabel label)
{
    return kNames[static_cast<std::size_t>(label)];
}

std::optional<RegionLabel> region_from_string(std::string_view name)
{
    for (std::size_t k = 0; k < kNames.size(); ++k) {
        if (kNames[k] == name) {
            return static_cast<RegionLabel>(k);
        }
    }
    return std::nullopt;
}

const RegionConstants& region_constants()
{
    static const RegionConstants constants = compute_constants();
    return constants;
}

RegionSet::RegionSet(std::initializer_list<RegionLabel> labels)
{
    for (RegionLabel l : labels) {
        insert(l);
    }
}

RegionSet RegionSet::all()
{
    RegionSet s;
    s.bits_.set();
    return s;
}

unsigned region_predicates(double x, double y)
{
    const double a = kAlpha;
    const double r2 = x * x + y * y;
    unsigned bits = 0;
    auto mark = [&](int k, bool holds) {
        if (holds) {
            bits |= 1u << k;
        }
    };
    mark(0, y <= 0.0 && 0.0 < x);
    mark(1, r2 <= 1.0 && 0.0 < y && y <= x);
    mark(2, r2 > 1.0 && 0.0 < y && y <= a);
    mark(3, a < y && y <= x);
    mark(4, r2 > 1.0 && 0.0 < x && x < y);
    mark(5, r2 <= 1.0 && x > 0.0 && y > a);
    mark(6, 0.0 < x && x < y && y <= a);
    return bits;
}

RegionLabel classify(double x, double y)
{
    if (x < 0.0) {
        return RegionLabel::LeftHalf;
    }
    if (x == 0.0) {
        return RegionLabel::SingularAxis;
    }
    const unsigned bits = region_predicates(x, y);
    for (int k = 0; k < 7; ++k) {
        if (bits & (1u << k)) {
            return static_cast<RegionLabel>(k);
        }
    }
    // Unreachable for finite input with x > 0.
    throw std::logic_error("no region predicate holds at (" + std::to_string(x) + ", " +
                           std::to_string(y) + ")");
}

std::optional<double> contraction_factor(RegionLabel label)
{
    switch (label) {
    case RegionLabel::P1:
    case RegionLabel::P2:
    case RegionLabel::P3:
        return 0.5;
    case RegionLabel::P4:
        return 1.0;
    case RegionLabel::P5:
    case RegionLabel::P6:
        return region_constants().gamma;
    default:
        return std::nullopt;
    }
}

RegionSet allowed_transitions(RegionLabel label, double alpha)
{
    require_certified(alpha);
    using R = RegionLabel;
    switch (label) {
    case R::P1: return {R::P1, R::P2};
    case R::P2: return {R::P3, R::P4};
    case R::P3: return {R::P4};
    case R::P4: return {R::P4, R::P5};
    case R::P5: return {R::P6};
    case R::P6: return {R::P6, R::P1, R::P2};
    default: return RegionSet::all();
    }
}

RegionSet successor_contract(const State2D& s)
{
    const RegionLabel label = classify(s);
    if (label == RegionLabel::P6 && s.x < region_constants().epsilon) {
        return RegionSet::all();
    }
    return allowed_transitions(label);
}

StepReport check_step(const State2D& s, double alpha)
{
    require_certified(alpha);
    if (!(s.x > 0.0)) {
        throw std::invalid_argument("check_step requires x > 0");
    }
    StepReport report;
    report.from = {s, classify(s)};
    const State2D next = dr_step_2d(s, alpha);
    report.to = {next, classify(next)};

    const double d0 = dist_sq_to_solution(s, Branch::Right);
    const double d1 = dist_sq_to_solution(next, Branch::Right);
    if (d0 > 0.0) {
        report.ratio = d1 / d0;
    }
    report.allowed = successor_contract(s).contains(report.to.label);
    if (const auto factor = contraction_factor(report.from.label); factor && report.ratio) {
        report.bound_satisfied = *report.ratio <= *factor + kRatioTolerance;
    }
    return report;
}

ReturnAudit return_map_audit(const State2D& s0, long cap, double alpha)
{
    require_certified(alpha);
    if (classify(s0) != RegionLabel::P1) {
        throw std::invalid_argument("return_map_audit requires a start in P1");
    }
    const double d0 = dist_sq_to_solution(s0, Branch::Right);
    ReturnAudit audit;
    State2D s = s0;
    for (long k = 1; k <= cap; ++k) {
        s = dr_step_2d(s, alpha);
        if (d0 > 0.0) {
            audit.ratio = std::max(audit.ratio, dist_sq_to_solution(s, Branch::Right) / d0);
        }
        if (classify(s) == RegionLabel::P1) {
            audit.m = k;
            return audit;
        }
    }
    throw BudgetExceeded("orbit did not return to P1 within " + std::to_string(cap) + " steps");
}

double g_function(double theta)
{
    return kAlpha + region_constants().epsilon * std::tan(theta) - std::sin(theta);
}

} // namespace drsl
