// drsl: command-line front end for the sphere/line Douglas-Rachford toolkit.
//
// Exit codes: 0 success, 1 certificate or contract failure, 2 undecided or
// diverged trajectory, 3 singular start, 64 usage error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "drsl/basin.hpp"
#include "drsl/certify.hpp"
#include "drsl/errors.hpp"
#include "drsl/export.hpp"
#include "drsl/regions.hpp"
#include "drsl/verify.hpp"

namespace {

using namespace drsl;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitSingular = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const std::string& what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("cannot parse " + what + ": '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v)) {
        throw UsageError("cannot parse " + what + ": '" + text + "'");
    }
    return v;
}

std::pair<double, double> parse_pair(const std::string& text, const std::string& what)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError(what + " must be written as a,b");
    }
    return {parse_double(text.substr(0, comma), what), parse_double(text.substr(comma + 1), what)};
}

double parse_alpha(const std::string& text)
{
    if (text == "1/sqrt2" || text == "1/sqrt(2)" || text == "sqrt2/2") {
        return kAlpha;
    }
    const double a = parse_double(text, "alpha");
    if (a < 0.0) {
        throw UsageError("alpha must be >= 0");
    }
    return std::abs(a - kAlpha) <= 1e-15 ? kAlpha : a;
}

void require_certified_alpha(double alpha, const std::string& command)
{
    if (alpha != kAlpha) {
        throw UsageError(command + " is only defined for alpha = 1/sqrt2 (the certified regime)");
    }
}

Format resolve_format(const std::string& name, const std::string& output, Format fallback)
{
    if (!name.empty()) {
        if (const auto f = format_from_string(name)) {
            return *f;
        }
        throw UsageError("unknown format '" + name + "' (csv, json or svg)");
    }
    for (const auto& [ext, f] : {std::pair{".csv", Format::Csv}, {".json", Format::Json}, {".svg", Format::Svg}}) {
        const std::string e(ext);
        if (output.size() > e.size() && output.compare(output.size() - e.size(), e.size(), e) == 0) {
            return f;
        }
    }
    return fallback;
}

void emit(const std::string& output, const std::string& content)
{
    if (output.empty() || output == "-") {
        std::cout << content;
    } else {
        write_file(output, content);
    }
}

std::string fixed(const char* spec, double v)
{
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), spec, v);
    return buf.data();
}

// --- trace -----------------------------------------------------------------

struct TraceArgs {
    std::string start;
    std::string alpha = "1/sqrt2";
    double tol = 1e-12;
    long max_iter = 10'000;
    std::string format;
    std::string output;
    bool no_guides = false;
};

int run_trace(const TraceArgs& a)
{
    TrajectoryConfig cfg;
    const auto [x, y] = parse_pair(a.start, "--start");
    cfg.start = {x, y};
    cfg.alpha = parse_alpha(a.alpha);
    cfg.tol = a.tol;
    cfg.max_iter = a.max_iter;
    cfg.record_orbit = true;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const bool table = a.format.empty() && a.output.empty();
    const Format format = resolve_format(a.format == "table" ? "" : a.format, a.output, Format::Csv);
    if (a.format == "table" && !a.output.empty()) {
        throw UsageError("table output goes to stdout; pick csv, json or svg with -o");
    }

    const TrajectoryResult r = run_trajectory(cfg);
    if (table || a.format == "table") {
        const auto target = intersection_point(cfg.alpha, Branch::Right);
        std::cout << "     n                      x                      y          rho  region               dist_sq\n";
        for (std::size_t n = 0; n < r.orbit.size(); ++n) {
            const State2D& s = r.orbit[n];
            const std::string dist =
                target ? fixed("%.6e", dist_sq_to_solution(s, s.x < 0.0 ? Branch::Left : Branch::Right, cfg.alpha))
                       : "-";
            std::printf("%6zu %22.17f %22.17f %12.9f  %-12s %14s\n", n, s.x, s.y, s.rho(),
                        std::string(to_string(classify(s))).c_str(), dist.c_str());
        }
        std::cout << "outcome " << to_string(r.outcome) << " after " << r.iterations << " iterations";
        if (r.first_p1_hit) {
            std::cout << ", first P1 at step " << *r.first_p1_hit;
        }
        std::cout << ", p0_visits " << r.p0_visits << '\n';
    } else {
        emit(a.output, render(r, format, cfg.alpha, SvgOptions{.guides = !a.no_guides}));
    }

    switch (r.outcome) {
    case Outcome::ConvergedRight:
    case Outcome::ConvergedLeft: return kExitOk;
    case Outcome::Singular: return kExitSingular;
    default: return kExitUndecided;
    }
}

// --- classify --------------------------------------------------------------

int run_classify(const std::vector<std::string>& points, const std::string& alpha)
{
    require_certified_alpha(parse_alpha(alpha), "classify");
    if (points.empty()) {
        throw UsageError("classify needs at least one point x,y");
    }
    std::vector<State2D> parsed;
    for (const auto& p : points) {
        const auto [x, y] = parse_pair(p, "point");
        parsed.push_back({x, y});
    }
    for (const auto& s : parsed) {
        std::string holds;
        const unsigned bits = region_predicates(s.x, s.y);
        for (int k = 0; k < 7; ++k) {
            if (bits & (1u << k)) {
                holds += (holds.empty() ? "P" : ",P") + std::to_string(k);
            }
        }
        std::printf("%.17g,%.17g  %-12s predicates: %s\n", s.x, s.y, std::string(to_string(classify(s))).c_str(),
                    holds.empty() ? "-" : holds.c_str());
    }
    return kExitOk;
}

// --- basin -----------------------------------------------------------------

struct BasinArgs {
    std::string x_range = "-2,2";
    std::string y_range = "-2,2";
    long nx = 100;
    long ny = 100;
    std::string alpha = "1/sqrt2";
    double tol = 1e-12;
    long max_iter = 10'000;
    unsigned workers = 0;
    std::string format;
    std::string output;
    bool no_guides = false;
};

int run_basin(const BasinArgs& a)
{
    GridSpec spec;
    std::tie(spec.x_lo, spec.x_hi) = parse_pair(a.x_range, "--x-range");
    std::tie(spec.y_lo, spec.y_hi) = parse_pair(a.y_range, "--y-range");
    spec.nx = a.nx;
    spec.ny = a.ny;
    spec.alpha = parse_alpha(a.alpha);
    spec.tol = a.tol;
    spec.max_iter = a.max_iter;
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const Format format = resolve_format(a.format, a.output, Format::Csv);

    const BasinGrid grid = sample_basin(spec, a.workers);
    emit(a.output, render(grid, format, SvgOptions{.guides = !a.no_guides}));

    const OutcomeCounts c = grid.counts();
    std::cerr << "cells " << grid.cells.size() << ": ConvergedRight " << c.right << ", ConvergedLeft " << c.left
              << ", Singular " << c.singular << ", Diverged " << c.diverged << ", Undecided " << c.undecided
              << " (with P0 visits " << c.undecided_with_p0 << ")\n";
    return kExitOk;
}

// --- certify ---------------------------------------------------------------

struct CertifyArgs {
    std::vector<std::string> claims;
    std::string delta = "1/1000";
    long max_boxes = 1'000'000;
    std::string alpha = "1/sqrt2";
    bool no_timing = false;
    bool list = false;
    std::string output;
};

int run_certify(const CertifyArgs& a)
{
    require_certified_alpha(parse_alpha(a.alpha), "certify");
    if (a.list) {
        for (const auto& id : certify::claim_ids()) {
            std::cout << id << '\n';
        }
        return kExitOk;
    }
    if (a.claims.empty()) {
        throw UsageError("name a claim or 'all' (see --list)");
    }
    std::vector<std::string> ids;
    for (const auto& c : a.claims) {
        if (c == "all") {
            ids.insert(ids.end(), certify::claim_ids().begin(), certify::claim_ids().end());
        } else if (certify::is_claim(c)) {
            ids.push_back(c);
        } else {
            throw UsageError("unknown claim '" + c + "' (see --list)");
        }
    }
    certify::ClaimOptions options;
    try {
        options.delta = parse_rational(a.delta);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--delta: ") + e.what());
    }
    if (sgn(options.delta) <= 0 || options.delta >= Rational(1, 4)) {
        throw UsageError("--delta must lie in (0, 1/4)");
    }
    if (a.max_boxes < 1) {
        throw UsageError("--max-boxes must be positive");
    }
    options.policy.max_boxes = a.max_boxes;

    nlohmann::json report = nlohmann::json::array();
    bool all_proved = true;
    for (const auto& id : ids) {
        const certify::Certificate c = certify::run_claim(id, options);
        all_proved = all_proved && certify::is_proved(c.status);
        report.push_back(certify::to_json(c, !a.no_timing));
    }
    const nlohmann::json out = ids.size() == 1 ? report.front() : report;
    emit(a.output, out.dump(2) + "\n");
    return all_proved ? kExitOk : kExitFailed;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    long samples = 100'000;
    std::uint64_t seed = 42;
    double step = 0.01;
    double tol = 1e-9;
    long max_iter = 1000;
    unsigned workers = 0;
    std::string alpha = "1/sqrt2";
    bool no_timing = false;
    std::string output;
};

int run_verify(const VerifyArgs& a)
{
    require_certified_alpha(parse_alpha(a.alpha), "verify");
    nlohmann::json out;
    bool passed = true;
    if (a.suite == "lemmas") {
        if (a.samples < 1) {
            throw UsageError("--samples must be positive");
        }
        LemmaSuiteConfig cfg;
        cfg.samples = a.samples;
        cfg.seed = a.seed;
        out["suite"] = "lemmas";
        out["seed"] = a.seed;
        out["samples"] = a.samples;
        out["checks"] = nlohmann::json::array();
        for (const auto& c : verify_lemmas(cfg)) {
            passed = passed && c.passed();
            out["checks"].push_back(to_json(c, !a.no_timing));
            if (!c.passed() && c.witness) {
                std::fprintf(stderr, "%s failed at (%.17g, %.17g): %s\n", c.name.c_str(), c.witness->x,
                             c.witness->y, c.detail.c_str());
            }
        }
    } else if (a.suite == "theorem-main") {
        if (!(a.step > 0.0) || !(a.tol > 0.0) || a.max_iter < 1) {
            throw UsageError("--step and --tol must be positive, --max-iter at least 1");
        }
        const GridReport g = verify_theorem_main(a.step, a.tol, a.max_iter, a.workers);
        passed = g.passed();
        out = {{"suite", "theorem-main"},
               {"step", a.step},
               {"tol", a.tol},
               {"max_iter", a.max_iter},
               {"total", g.total},
               {"converged", g.converged},
               {"max_iterations", g.max_iterations},
               {"worst_final_distance", g.worst_final_distance}};
        out["failures"] = nlohmann::json::array();
        for (const auto& f : g.failures) {
            out["failures"].push_back({{"x0", f.start.x},
                                       {"y0", f.start.y},
                                       {"outcome", std::string(to_string(f.outcome))},
                                       {"final_distance", f.final_distance}});
            std::fprintf(stderr, "not converged from (%.17g, %.17g): %s\n", f.start.x, f.start.y,
                         std::string(to_string(f.outcome)).c_str());
        }
        if (!a.no_timing) {
            out["wall_time_ms"] = g.wall_ms;
        }
    } else {
        throw UsageError("unknown suite '" + a.suite + "' (lemmas or theorem-main)");
    }
    out["passed"] = passed;
    emit(a.output, out.dump(2) + "\n");
    return passed ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Douglas-Rachford iteration for a sphere and a line: trajectories, regions, basins and "
                 "certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "drsl 1.0.0");

    TraceArgs trace;
    auto* trace_cmd = app.add_subcommand("trace", "Iterate from a start point and print the orbit");
    trace_cmd->add_option("--start", trace.start, "Start point x,y")->required();
    trace_cmd->add_option("--alpha", trace.alpha, "Line height (number or 1/sqrt2)")->capture_default_str();
    trace_cmd->add_option("--tol", trace.tol, "Convergence tolerance")->capture_default_str();
    trace_cmd->add_option("--max-iter", trace.max_iter, "Iteration cap")->capture_default_str();
    trace_cmd->add_option("--format", trace.format, "table, csv, json or svg (default: table, or from -o)");
    trace_cmd->add_option("-o,--output", trace.output, "Output file");
    trace_cmd->add_flag("--no-guides", trace.no_guides, "Omit region guide curves from SVG output");

    std::vector<std::string> points;
    std::string classify_alpha = "1/sqrt2";
    auto* classify_cmd = app.add_subcommand("classify", "Region label of one or more points");
    classify_cmd->add_option("points", points, "Points x,y")->required();
    classify_cmd->add_option("--alpha", classify_alpha, "Must be 1/sqrt2")->capture_default_str();

    BasinArgs basin;
    auto* basin_cmd = app.add_subcommand("basin", "Sample the basin of attraction on a grid");
    basin_cmd->add_option("--x-range", basin.x_range, "lo,hi")->capture_default_str();
    basin_cmd->add_option("--y-range", basin.y_range, "lo,hi")->capture_default_str();
    basin_cmd->add_option("--nx", basin.nx, "Nodes along x")->capture_default_str();
    basin_cmd->add_option("--ny", basin.ny, "Nodes along y")->capture_default_str();
    basin_cmd->add_option("--alpha", basin.alpha, "Line height (number or 1/sqrt2)")->capture_default_str();
    basin_cmd->add_option("--tol", basin.tol, "Convergence tolerance")->capture_default_str();
    basin_cmd->add_option("--max-iter", basin.max_iter, "Iteration cap per cell")->capture_default_str();
    basin_cmd->add_option("--workers", basin.workers, "Worker threads, 0 = all cores")->capture_default_str();
    basin_cmd->add_option("--format", basin.format, "csv, json or svg (default: csv, or from -o)");
    basin_cmd->add_option("-o,--output", basin.output, "Output file (default stdout)");
    basin_cmd->add_flag("--no-guides", basin.no_guides, "Omit region guide curves from SVG output");

    CertifyArgs cert;
    auto* certify_cmd = app.add_subcommand("certify", "Run certificates and print JSON reports");
    certify_cmd->add_option("claims", cert.claims, "Claim ids, or 'all'");
    certify_cmd->add_flag("--list", cert.list, "List claim ids");
    certify_cmd->add_option("--delta", cert.delta, "Boundary shrink for the sign boxes (rational)")
        ->capture_default_str();
    certify_cmd->add_option("--max-boxes", cert.max_boxes, "Branch-and-bound budget")->capture_default_str();
    certify_cmd->add_option("--alpha", cert.alpha, "Must be 1/sqrt2")->capture_default_str();
    certify_cmd->add_flag("--no-timing", cert.no_timing, "Omit wall times so reruns are byte-identical");
    certify_cmd->add_option("-o,--output", cert.output, "Output file (default stdout)");

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Run the sampled lemma contracts or the theorem grid");
    verify_cmd->add_option("suite", ver.suite, "lemmas or theorem-main")->required();
    verify_cmd->add_option("--samples", ver.samples, "Samples per lemma check")->capture_default_str();
    verify_cmd->add_option("--seed", ver.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--step", ver.step, "Theorem grid spacing")->capture_default_str();
    verify_cmd->add_option("--tol", ver.tol, "Theorem convergence tolerance")->capture_default_str();
    verify_cmd->add_option("--max-iter", ver.max_iter, "Theorem iteration cap")->capture_default_str();
    verify_cmd->add_option("--workers", ver.workers, "Worker threads, 0 = all cores")->capture_default_str();
    verify_cmd->add_option("--alpha", ver.alpha, "Must be 1/sqrt2")->capture_default_str();
    verify_cmd->add_flag("--no-timing", ver.no_timing, "Omit wall times so reruns are byte-identical");
    verify_cmd->add_option("-o,--output", ver.output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*trace_cmd) {
            return run_trace(trace);
        }
        if (*classify_cmd) {
            return run_classify(points, classify_alpha);
        }
        if (*basin_cmd) {
            return run_basin(basin);
        }
        if (*certify_cmd) {
            return run_certify(cert);
        }
        if (*verify_cmd) {
            return run_verify(ver);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
