#include "drsl/core.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace drsl {

PointN::PointN(std::vector<double> coords) : coords_(std::move(coords))
{
    if (coords_.size() < 2) {
        throw std::invalid_argument("PointN needs at least 2 coordinates");
    }
    for (double c : coords_) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("PointN coordinates must be finite");
        }
    }
}

double PointN::norm() const
{
    // hypot in the planar case keeps dr_step and dr_step_2d bit-identical.
    if (coords_.size() == 2) {
        return std::hypot(coords_[0], coords_[1]);
    }
    if (coords_.size() == 3) {
        return std::hypot(coords_[0], coords_[1], coords_[2]);
    }
    double scale = 0.0;
    for (double c : coords_) {
        scale = std::max(scale, std::abs(c));
    }
    if (scale == 0.0) {
        return 0.0;
    }
    double sum = 0.0;
    for (double c : coords_) {
        const double r = c / scale;
        sum += r * r;
    }
    return scale * std::sqrt(sum);
}

Params::Params(double a, std::size_t n) : alpha(a), dimension(n)
{
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw std::invalid_argument("alpha must be finite and >= 0");
    }
    if (dimension < 2) {
        throw std::invalid_argument("dimension must be >= 2");
    }
}

double State2D::theta() const
{
    const double t = std::atan2(y, x);
    // atan2(-0.0, negative) yields -pi; fold it onto the closed end.
    return t == -std::numbers::pi ? std::numbers::pi : t;
}

namespace {

void require_dimension(const PointN& p, const Params& params)
{
    if (p.dimension() != params.dimension) {
        throw DimensionMismatch(p.dimension(), params.dimension);
    }
}

} // namespace

PointN project_line(const PointN& p, const Params& params)
{
    require_dimension(p, params);
    std::vector<double> out(p.dimension(), 0.0);
    out[0] = p[0];
    out[1] = params.alpha;
    return PointN(std::move(out));
}

PointN project_sphere(const PointN& p)
{
    const double rho = p.norm();
    if (rho == 0.0) {
        throw SingularPoint();
    }
    std::vector<double> out(p.coords().begin(), p.coords().end());
    for (double& c : out) {
        c /= rho;
    }
    return PointN(std::move(out));
}

PointN reflect(const PointN& p, SetKind set, const Params& params)
{
    require_dimension(p, params);
    const PointN proj = set == SetKind::Sphere ? project_sphere(p) : project_line(p, params);
    std::vector<double> out(p.dimension());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = 2.0 * proj[k] - p[k];
    }
    return PointN(std::move(out));
}

PointN dr_step(const PointN& p, const Params& params)
{
    require_dimension(p, params);
    const double rho = p.norm();
    if (rho == 0.0) {
        throw SingularPoint();
    }
    const double shrink = 1.0 - 1.0 / rho;
    std::vector<double> out(p.dimension());
    out[0] = p[0] / rho;
    out[1] = params.alpha + shrink * p[1];
    for (std::size_t k = 2; k < out.size(); ++k) {
        out[k] = shrink * p[k];
    }
    return PointN(std::move(out));
}

PointN dr_step_composed(const PointN& p, const Params& params)
{
    const PointN r = reflect(reflect(p, SetKind::Sphere, params), SetKind::Line, params);
    std::vector<double> out(p.dimension());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = 0.5 * (r[k] + p[k]);
    }
    return PointN(std::move(out));
}

State2D dr_step_2d(const State2D& s, double alpha)
{
    const double rho = s.rho();
    if (rho == 0.0) {
        throw SingularPoint();
    }
    return {s.x / rho, alpha + (1.0 - 1.0 / rho) * s.y};
}

State2D dr_step_2d_polar(const State2D& s, double alpha)
{
    const double rho = s.rho();
    if (rho == 0.0) {
        throw SingularPoint();
    }
    const double th = s.theta();
    return {std::cos(th), alpha + (rho - 1.0) * std::sin(th)};
}

std::optional<State2D> intersection_point(double alpha, Branch branch)
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        return std::nullopt;
    }
    const double x = alpha == kAlpha ? kAlpha : std::sqrt((1.0 - alpha) * (1.0 + alpha));
    return State2D{branch == Branch::Right ? x : -x, alpha};
}

double dist_sq_to_solution(const State2D& s, Branch branch, double alpha)
{
    const auto target = intersection_point(alpha, branch);
    if (!target) {
        throw std::domain_error("sphere and line do not intersect for alpha > 1");
    }
    const double dx = s.x - target->x;
    const double dy = s.y - target->y;
    return dx * dx + dy * dy;
}

} // namespace drsl
