#include "drsl/basin.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace drsl {

namespace {

constexpr std::array<std::pair<Outcome, std::string_view>, 5> kOutcomeNames = {{
    {Outcome::ConvergedRight, "ConvergedRight"},
    {Outcome::ConvergedLeft, "ConvergedLeft"},
    {Outcome::Singular, "Singular"},
    {Outcome::Diverged, "Diverged"},
    {Outcome::Undecided, "Undecided"},
}};

/// Rounding allowance on a squared distance d computed from doubles near 1.
double distance_slack(double d)
{
    return kRatioTolerance * d + 2e-15 * std::sqrt(d);
}

void log_label(std::vector<RegionRun>& log, RegionLabel label)
{
    if (!log.empty() && log.back().label == label) {
        ++log.back().count;
    } else {
        log.push_back({label, 1});
    }
}

} // namespace

std::string_view to_string(Outcome o)
{
    for (const auto& [value, name] : kOutcomeNames) {
        if (value == o) {
            return name;
        }
    }
    return "Undecided";
}

std::optional<Outcome> outcome_from_string(std::string_view name)
{
    for (const auto& [value, text] : kOutcomeNames) {
        if (text == name) {
            return value;
        }
    }
    return std::nullopt;
}

void TrajectoryConfig::validate() const
{
    if (!std::isfinite(start.x) || !std::isfinite(start.y) || !std::isfinite(alpha)) {
        throw std::invalid_argument("trajectory start and alpha must be finite");
    }
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument("tol must be positive");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("max_iter must be at least 1");
    }
}

TrajectoryResult run_trajectory(const TrajectoryConfig& cfg)
{
    cfg.validate();
    TrajectoryResult r;
    State2D s = cfg.start;
    r.final = s;
    if (cfg.record_orbit) {
        r.orbit.push_back(s);
    }
    if (s.x == 0.0) {
        r.outcome = Outcome::Singular;
        if (cfg.alpha == kAlpha) {
            log_label(r.region_log, RegionLabel::SingularAxis);
        }
        return r;
    }

    const bool certified = cfg.alpha == kAlpha;
    const auto target = intersection_point(cfg.alpha, Branch::Right);
    const double tol_sq = cfg.tol * cfg.tol;

    auto note_position = [&](const State2D& p, long n) {
        if (p.y <= 0.0 && p.x != 0.0) {
            ++r.p0_visits;
            r.last_p0_visit = n;
        }
        if (!certified) {
            return;
        }
        const RegionLabel label = classify(std::abs(p.x), p.y);
        if (label == RegionLabel::P1 && !r.first_p1_hit) {
            r.first_p1_hit = n;
        }
        log_label(r.region_log, label);
    };
    auto converged = [&](const State2D& p) -> std::optional<Outcome> {
        if (!target) {
            return std::nullopt;
        }
        const double dx_r = p.x - target->x;
        const double dx_l = p.x + target->x;
        const double dy = p.y - target->y;
        if (dx_r * dx_r + dy * dy <= tol_sq) {
            return Outcome::ConvergedRight;
        }
        if (dx_l * dx_l + dy * dy <= tol_sq) {
            return Outcome::ConvergedLeft;
        }
        return std::nullopt;
    };

    note_position(s, 0);
    if (const auto done = converged(s)) {
        r.outcome = *done;
        return r;
    }

    for (long n = 1; n <= cfg.max_iter; ++n) {
        State2D next;
        try {
            next = dr_step_2d(s, cfg.alpha);
        } catch (const SingularPoint&) {
            r.outcome = Outcome::Singular;
            return r;
        }
        r.iterations = n;

        if (certified) {
            // Audit the step against the contract of the region it left.
            const Branch branch = s.x > 0.0 ? Branch::Right : Branch::Left;
            const RegionLabel from = classify(std::abs(s.x), s.y);
            const double d0 = dist_sq_to_solution(s, branch);
            const double d1 = dist_sq_to_solution(next, branch);
            if (const auto factor = contraction_factor(from); factor && d0 > 0.0) {
                if (d1 > *factor * d0 + distance_slack(d0)) {
                    const double ratio = d1 / d0;
                    if (!r.max_ratio_violation || ratio - *factor > r.max_ratio_violation->ratio - r.max_ratio_violation->bound) {
                        r.max_ratio_violation = RatioViolation{n, from, ratio, *factor};
                    }
                }
                const bool monotone_region = from == RegionLabel::P1 || from == RegionLabel::P2 ||
                                             from == RegionLabel::P3 || from == RegionLabel::P4;
                if (monotone_region && d1 > d0 + distance_slack(d0)) {
                    ++r.monotone_violations;
                }
            }
        }

        s = next;
        r.final = s;
        if (cfg.record_orbit) {
            r.orbit.push_back(s);
        }
        if (!std::isfinite(s.x) || !std::isfinite(s.y) || s.rho() > kDivergenceRadius) {
            r.outcome = Outcome::Diverged;
            return r;
        }
        note_position(s, n);
        if (const auto done = converged(s)) {
            r.outcome = *done;
            return r;
        }
    }
    r.outcome = Outcome::Undecided;
    return r;
}

void parallel_for(long n, unsigned workers, const std::function<void(long)>& body)
{
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<long>(workers, std::max<long>(n, 1)));
    if (workers <= 1) {
        for (long k = 0; k < n; ++k) {
            body(k);
        }
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (long k = next++; k < n; k = next++) {
                try {
                    body(k);
                } catch (...) {
                    const std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

GridReport verify_theorem_main(double step, double tol, long max_iter, unsigned workers)
{
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw std::invalid_argument("step must be positive");
    }
    const auto start = std::chrono::steady_clock::now();
    const double eps = region_constants().epsilon;
    std::vector<double> xs;
    for (long i = 0;; ++i) {
        const double x = eps + static_cast<double>(i) * step;
        if (x > 1.0) {
            break;
        }
        xs.push_back(x);
    }
    if (xs.back() < 1.0) {
        xs.push_back(1.0);
    }
    std::vector<double> ys;
    for (long j = 0;; ++j) {
        const double y = static_cast<double>(j) * step;
        if (y > 1.0 + 1e-12) {
            break;
        }
        ys.push_back(std::min(y, 1.0));
    }

    const long total = static_cast<long>(xs.size() * ys.size());
    std::vector<TrajectoryResult> results(static_cast<std::size_t>(total));
    parallel_for(total, workers, [&](long k) {
        TrajectoryConfig cfg;
        cfg.start = {xs[static_cast<std::size_t>(k) % xs.size()], ys[static_cast<std::size_t>(k) / xs.size()]};
        cfg.tol = tol;
        cfg.max_iter = max_iter;
        results[static_cast<std::size_t>(k)] = run_trajectory(cfg);
    });

    GridReport report;
    report.total = total;
    for (long k = 0; k < total; ++k) {
        const auto& r = results[static_cast<std::size_t>(k)];
        const double dist = std::sqrt(dist_sq_to_solution(r.final, Branch::Right));
        report.max_iterations = std::max(report.max_iterations, r.iterations);
        if (r.outcome == Outcome::ConvergedRight) {
            ++report.converged;
            report.worst_final_distance = std::max(report.worst_final_distance, dist);
        } else if (report.failures.size() < 20) {
            report.failures.push_back({{xs[static_cast<std::size_t>(k) % xs.size()],
                                        ys[static_cast<std::size_t>(k) / xs.size()]},
                                       r.outcome,
                                       dist});
        }
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void GridSpec::validate() const
{
    for (double v : {x_lo, x_hi, y_lo, y_hi, alpha, tol}) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("grid ranges, alpha and tol must be finite");
        }
    }
    if (!(x_lo <= x_hi) || !(y_lo <= y_hi)) {
        throw std::invalid_argument("grid range with lo > hi");
    }
    if (nx < 1 || ny < 1) {
        throw std::invalid_argument("grid resolution must be at least 1x1");
    }
    if (!(tol > 0.0) || max_iter < 1) {
        throw std::invalid_argument("tol must be positive and max_iter at least 1");
    }
}

double GridSpec::node(double lo, double hi, long n, long i)
{
    if (n == 1) {
        return lo;
    }
    const auto m = static_cast<double>(n - 1);
    return (lo * (m - static_cast<double>(i)) + hi * static_cast<double>(i)) / m;
}

OutcomeCounts BasinGrid::counts() const
{
    OutcomeCounts c;
    for (const auto& cell : cells) {
        switch (cell.outcome) {
        case Outcome::ConvergedRight: ++c.right; break;
        case Outcome::ConvergedLeft: ++c.left; break;
        case Outcome::Singular: ++c.singular; break;
        case Outcome::Diverged: ++c.diverged; break;
        case Outcome::Undecided:
            ++c.undecided;
            if (cell.p0_visits > 0) {
                ++c.undecided_with_p0;
            }
            break;
        }
    }
    return c;
}

BasinGrid sample_basin(const GridSpec& spec, unsigned workers)
{
    spec.validate();
    BasinGrid grid;
    grid.spec = spec;
    grid.cells.resize(static_cast<std::size_t>(spec.nx * spec.ny));
    parallel_for(spec.nx * spec.ny, workers, [&](long k) {
        const long i = k % spec.nx;
        const long j = k / spec.nx;
        TrajectoryConfig cfg;
        cfg.start = {GridSpec::node(spec.x_lo, spec.x_hi, spec.nx, i), GridSpec::node(spec.y_lo, spec.y_hi, spec.ny, j)};
        cfg.alpha = spec.alpha;
        cfg.tol = spec.tol;
        cfg.max_iter = spec.max_iter;
        const TrajectoryResult r = run_trajectory(cfg);
        grid.cells[static_cast<std::size_t>(k)] =
            BasinCell{cfg.start.x, cfg.start.y, r.outcome, r.iterations, r.p0_visits, r.first_p1_hit, r.final};
    });
    return grid;
}

} // namespace drsl
