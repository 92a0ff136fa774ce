#pragma once

/**
 * @file core.hpp
 * @brief Projections, reflections and the Douglas-Rachford operator for a
 *        sphere S = {|x| = 1} and a line L = {lambda a + alpha b}.
 *
 * Coordinates are taken relative to an orthonormal basis whose first two
 * vectors are a and b. Everything here is plain double arithmetic; exact
 * reasoning lives in the certification engine.
 */

#include <cmath>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "drsl/errors.hpp"

namespace drsl {

inline constexpr double kAlpha = 0.70710678118654752440; // 1/sqrt(2)

/// A point with N >= 2 finite coordinates.
class PointN {
public:
    explicit PointN(std::vector<double> coords);
    PointN(std::initializer_list<double> coords) : PointN(std::vector<double>(coords)) {}

    std::size_t dimension() const { return coords_.size(); }
    double operator[](std::size_t k) const { return coords_[k]; }
    std::span<const double> coords() const { return coords_; }
    double norm() const;

    friend bool operator==(const PointN&, const PointN&) = default;

private:
    std::vector<double> coords_;
};

struct Params {
    double alpha = kAlpha;
    std::size_t dimension = 2;

    Params() = default;
    Params(double a, std::size_t n);

    /// True only for the regime the region contracts are proved for.
    bool certified() const { return alpha == kAlpha && dimension == 2; }
};

/// Iterate of the planar scheme. rho and theta are always derived from (x, y).
struct State2D {
    double x = 0.0;
    double y = 0.0;

    double rho() const { return std::hypot(x, y); }
    /// Argument of (x, y) in (-pi, pi].
    double theta() const;

    friend bool operator==(const State2D&, const State2D&) = default;
};

enum class SetKind { Sphere, Line };
enum class Branch { Right, Left };

PointN project_line(const PointN& p, const Params& params);
PointN project_sphere(const PointN& p);
PointN reflect(const PointN& p, SetKind set, const Params& params);

/// Closed form of T = (R_L R_S + I) / 2.
PointN dr_step(const PointN& p, const Params& params);

/// T evaluated literally as the average of p and the composed reflections.
PointN dr_step_composed(const PointN& p, const Params& params);

State2D dr_step_2d(const State2D& s, double alpha = kAlpha);

/// The same step written in polar form: x' = cos(theta), y' = alpha + (rho - 1) sin(theta).
State2D dr_step_2d_polar(const State2D& s, double alpha = kAlpha);

/// Point of S intersect L on the requested side, when the two sets meet.
std::optional<State2D> intersection_point(double alpha, Branch branch);

/// Squared distance to (+-sqrt(1 - alpha^2), alpha); for the certified alpha this is (+-alpha, alpha).
double dist_sq_to_solution(const State2D& s, Branch branch, double alpha = kAlpha);

} // namespace drsl
