#pragma once

/**
 * @file certify.hpp
 * @brief Mechanical checks of the algebraic facts behind the convergence
 *        argument: exact polynomial identities over Q and Q(sqrt 2), Sturm
 *        root counts, and interval branch-and-bound sign certificates for the
 *        two quadratic-in-rho inequality functions.
 *
 * Both inequality functions are written in w = sin(theta) with
 * cos(theta) = sqrt(1 - w^2), valid on the first quadrant.
 *
 *   EQ3(rho, w)   = (2w^2 - 1) rho^2 - (4w^2 - sqrt2 (w + c)) rho - 2 sqrt2 c + 2
 *   F_ETA(rho, w) = (eta w^2 - 1) rho^2 - (2 eta w^2 - sqrt2 (w + c)) rho
 *                   - (sqrt2 c - 3/2) eta - 1
 */

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "drsl/field.hpp"
#include "drsl/interval.hpp"
#include "drsl/polynomial.hpp"

namespace drsl::certify {

enum class Status { Proved, ProvedNegative, ProvedNonpositive, Inconclusive, Failed };

std::string_view to_string(Status s);
inline bool is_proved(Status s)
{
    return s == Status::Proved || s == Status::ProvedNegative || s == Status::ProvedNonpositive;
}

// --- constants -------------------------------------------------------------

/// gamma = 5/2 - sqrt2 + sqrt(29 - 20 sqrt2)/2, enclosed to ~1e-37.
const RationalInterval& gamma_enclosure();
/// eta = 1 / gamma, enclosed to better than 1e-30.
const RationalInterval& eta_enclosure();
/// epsilon = (1 - 2^(-1/3))^(3/2).
const RationalInterval& epsilon_enclosure();

// --- the inequality functions ----------------------------------------------

enum class FunctionId { Eq3, FEta };

std::string_view to_string(FunctionId id);

double eq3(double rho, double w);
double f_eta(double rho, double w);
Interval eq3(const Interval& rho, const Interval& w);
Interval f_eta(const Interval& rho, const Interval& w);
double evaluate(FunctionId id, double rho, double w);

/// Domain box with exact rational endpoints; index 0 is rho, index 1 is w.
struct IntervalBox {
    FunctionId function = FunctionId::Eq3;
    std::array<Rational, 2> lo;
    std::array<Rational, 2> hi;
};

/// EQ3: rho in [0, 1], w in [0, 1/sqrt2 - delta].
/// F_ETA: rho in [delta, 1], w in [1/sqrt2 + delta, 1 - delta].
/// Irrational corners are rounded outward, so the box covers the stated domain.
IntervalBox default_box(FunctionId id, const Rational& delta);

struct DoubleBox {
    Interval rho;
    Interval w;
    std::string id; ///< bisection path from the root, "" for the root
};

struct SignPolicy {
    long max_boxes = 1'000'000;
    double min_width = 1e-15;
    bool keep_leaves = false;
};

struct BoxCertificate {
    Status status = Status::Inconclusive;
    long boxes = 0;
    int max_depth = 0;
    std::optional<DoubleBox> offending;
    std::vector<DoubleBox> leaves; ///< proved sub-boxes, when requested
};

/// Adaptive bisection proving f < 0 on the whole box. Throws BudgetExceeded
/// past policy.max_boxes.
BoxCertificate certify_sign_on_box(const IntervalBox& box, const SignPolicy& policy = {});

// --- polynomial kernels ----------------------------------------------------

RationalPoly quintic();    ///< 8z^5 + 4z^4 - 39z^3 - 7z^2 + 51z - 9
RationalPoly sextic();     ///< 8z^6 - 4z^5 - 43z^4 + 32z^3 + 58z^2 - 60z + 9
FieldPoly quartic();       ///< w^4 - 4 sqrt2 w^3 + 6 w^2 + 4 sqrt2 w - 8
FieldPoly quartic_quadratic_factor(); ///< (w - sqrt2)^2 - 6 = w^2 - 2 sqrt2 w - 4

/// Coefficients (constant term first) of the degree-8 polynomial in u = sqrt2 w
/// whose roots locate the zeros of the F_ETA discriminant.
std::vector<RationalInterval> eta_octic_coefficients();

// --- reports ---------------------------------------------------------------

struct Witness {
    std::string name;
    std::string value;
};

struct Certificate {
    std::string claim_id;
    std::string statement;
    Status status = Status::Inconclusive;
    std::vector<Witness> witnesses;
    long boxes = 0;
    int max_depth = 0;
    std::vector<std::string> notes;
    double wall_ms = 0.0;
};

struct ClaimOptions {
    Rational delta{1, 1000};
    SignPolicy policy;
};

const std::vector<std::string>& claim_ids();
bool is_claim(std::string_view id);

/// Runs one claim; throws std::out_of_range for unknown ids.
Certificate run_claim(std::string_view id, const ClaimOptions& options = {});
std::vector<Certificate> run_all(const ClaimOptions& options = {});

Certificate certify_corollary_p2_geometry();

nlohmann::json to_json(const Certificate& c, bool include_timing = true);

} // namespace drsl::certify
