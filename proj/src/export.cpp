#include "drsl/export.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>

#include "drsl/errors.hpp"

namespace drsl {

namespace {

std::string num(double v, int digits = 17)
{
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*g", digits, v);
    return buf.data();
}

std::string svg_num(double v)
{
    return num(v, 7);
}

std::string_view outcome_colour(Outcome o)
{
    switch (o) {
    case Outcome::ConvergedRight: return "#2b6cb0";
    case Outcome::ConvergedLeft: return "#dd6b20";
    case Outcome::Singular: return "#1a202c";
    case Outcome::Diverged: return "#805ad5";
    case Outcome::Undecided: return "#e53e3e";
    }
    return "#000000";
}

nlohmann::json state_json(const State2D& s)
{
    return {{"x", s.x}, {"y", s.y}};
}

State2D state_from(const nlohmann::json& j)
{
    return {j.at("x").get<double>(), j.at("y").get<double>()};
}

template <class T>
nlohmann::json optional_json(const std::optional<T>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_from(const nlohmann::json& j)
{
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<T>();
}

Outcome outcome_from(const nlohmann::json& j)
{
    const auto name = j.get<std::string>();
    const auto o = outcome_from_string(name);
    if (!o) {
        throw Error("unknown outcome: " + name);
    }
    return *o;
}

RegionLabel label_from(const nlohmann::json& j)
{
    const auto name = j.get<std::string>();
    const auto l = region_from_string(name);
    if (!l) {
        throw Error("unknown region: " + name);
    }
    return *l;
}

struct ViewBox {
    double x0;
    double y0;
    double x1;
    double y1;
};

/// Opens an svg element whose user space is the world box, y pointing up.
std::string svg_open(const ViewBox& box, int pixels)
{
    const double w = box.x1 - box.x0;
    const double h = box.y1 - box.y0;
    const double aspect = h > 0.0 && w > 0.0 ? h / w : 1.0;
    std::ostringstream out;
    out << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << pixels << "\" height=\""
        << static_cast<int>(pixels * aspect) << "\" viewBox=\"" << svg_num(box.x0) << ' ' << svg_num(-box.y1)
        << ' ' << svg_num(w) << ' ' << svg_num(h) << "\" preserveAspectRatio=\"none\">\n"
        << "<g transform=\"scale(1,-1)\">\n";
    return out.str();
}

std::string svg_guides(const ViewBox& box, double alpha)
{
    std::ostringstream out;
    const std::string style = R"( fill="none" stroke="#4a5568" stroke-width="1" vector-effect="non-scaling-stroke" stroke-dasharray="4 3")";
    out << "<g class=\"guides\">\n";
    out << "<circle cx=\"0\" cy=\"0\" r=\"1\"" << style << "/>\n";
    const double lo = std::min(box.x0, box.y0);
    const double hi = std::max(box.x1, box.y1);
    out << "<line x1=\"" << svg_num(lo) << "\" y1=\"" << svg_num(lo) << "\" x2=\"" << svg_num(hi) << "\" y2=\""
        << svg_num(hi) << "\"" << style << "/>\n";
    out << "<line x1=\"" << svg_num(box.x0) << "\" y1=\"" << svg_num(alpha) << "\" x2=\"" << svg_num(box.x1)
        << "\" y2=\"" << svg_num(alpha) << "\"" << style << "/>\n";
    out << "</g>\n";
    return out.str();
}

} // namespace

std::optional<Format> format_from_string(std::string_view name)
{
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "json") {
        return Format::Json;
    }
    if (name == "svg") {
        return Format::Svg;
    }
    return std::nullopt;
}

void write_basin_csv(std::ostream& out, const BasinGrid& grid)
{
    out << "x0,y0,outcome,iterations,p0_visits,first_p1_hit,final_x,final_y\n";
    for (const auto& c : grid.cells) {
        out << num(c.x0) << ',' << num(c.y0) << ',' << to_string(c.outcome) << ',' << c.iterations << ','
            << c.p0_visits << ',' << (c.first_p1_hit ? std::to_string(*c.first_p1_hit) : "") << ','
            << num(c.final.x) << ',' << num(c.final.y) << '\n';
    }
}

void write_orbit_csv(std::ostream& out, const TrajectoryResult& result, double alpha)
{
    out << "n,x,y,rho,region,dist_sq\n";
    const auto target = intersection_point(alpha, Branch::Right);
    for (std::size_t n = 0; n < result.orbit.size(); ++n) {
        const State2D& s = result.orbit[n];
        std::string dist;
        if (target) {
            dist = num(dist_sq_to_solution(s, s.x < 0.0 ? Branch::Left : Branch::Right, alpha));
        }
        out << n << ',' << num(s.x) << ',' << num(s.y) << ',' << num(s.rho()) << ','
            << to_string(classify(s)) << ',' << dist << '\n';
    }
}

nlohmann::json to_json(const TrajectoryResult& r)
{
    nlohmann::json j;
    j["outcome"] = std::string(to_string(r.outcome));
    j["iterations"] = r.iterations;
    j["p0_visits"] = r.p0_visits;
    j["last_p0_visit"] = optional_json(r.last_p0_visit);
    j["first_p1_hit"] = optional_json(r.first_p1_hit);
    auto& log = j["region_log"] = nlohmann::json::array();
    for (const auto& run : r.region_log) {
        log.push_back({{"label", std::string(to_string(run.label))}, {"count", run.count}});
    }
    j["final"] = state_json(r.final);
    if (r.max_ratio_violation) {
        const auto& v = *r.max_ratio_violation;
        j["max_ratio_violation"] = {
            {"step", v.step}, {"from", std::string(to_string(v.from))}, {"ratio", v.ratio}, {"bound", v.bound}};
    } else {
        j["max_ratio_violation"] = nullptr;
    }
    j["monotone_violations"] = r.monotone_violations;
    auto& orbit = j["orbit"] = nlohmann::json::array();
    for (const auto& s : r.orbit) {
        orbit.push_back(state_json(s));
    }
    return j;
}

TrajectoryResult trajectory_from_json(const nlohmann::json& j)
{
    TrajectoryResult r;
    r.outcome = outcome_from(j.at("outcome"));
    r.iterations = j.at("iterations").get<long>();
    r.p0_visits = j.at("p0_visits").get<long>();
    r.last_p0_visit = optional_from<long>(j.at("last_p0_visit"));
    r.first_p1_hit = optional_from<long>(j.at("first_p1_hit"));
    for (const auto& run : j.at("region_log")) {
        r.region_log.push_back({label_from(run.at("label")), run.at("count").get<long>()});
    }
    r.final = state_from(j.at("final"));
    if (const auto& v = j.at("max_ratio_violation"); !v.is_null()) {
        r.max_ratio_violation = RatioViolation{v.at("step").get<long>(), label_from(v.at("from")),
                                               v.at("ratio").get<double>(), v.at("bound").get<double>()};
    }
    r.monotone_violations = j.at("monotone_violations").get<long>();
    for (const auto& s : j.at("orbit")) {
        r.orbit.push_back(state_from(s));
    }
    return r;
}

nlohmann::json to_json(const BasinGrid& grid)
{
    const GridSpec& s = grid.spec;
    nlohmann::json j;
    j["x_range"] = {s.x_lo, s.x_hi};
    j["y_range"] = {s.y_lo, s.y_hi};
    j["nx"] = s.nx;
    j["ny"] = s.ny;
    j["alpha"] = s.alpha;
    j["tol"] = s.tol;
    j["max_iter"] = s.max_iter;
    auto& cells = j["cells"] = nlohmann::json::array();
    for (const auto& c : grid.cells) {
        cells.push_back({{"x0", c.x0},
                         {"y0", c.y0},
                         {"outcome", std::string(to_string(c.outcome))},
                         {"iterations", c.iterations},
                         {"p0_visits", c.p0_visits},
                         {"first_p1_hit", optional_json(c.first_p1_hit)},
                         {"final", state_json(c.final)}});
    }
    return j;
}

BasinGrid basin_from_json(const nlohmann::json& j)
{
    BasinGrid grid;
    GridSpec& s = grid.spec;
    s.x_lo = j.at("x_range").at(0).get<double>();
    s.x_hi = j.at("x_range").at(1).get<double>();
    s.y_lo = j.at("y_range").at(0).get<double>();
    s.y_hi = j.at("y_range").at(1).get<double>();
    s.nx = j.at("nx").get<long>();
    s.ny = j.at("ny").get<long>();
    s.alpha = j.at("alpha").get<double>();
    s.tol = j.at("tol").get<double>();
    s.max_iter = j.at("max_iter").get<long>();
    s.validate();
    for (const auto& c : j.at("cells")) {
        grid.cells.push_back({c.at("x0").get<double>(), c.at("y0").get<double>(), outcome_from(c.at("outcome")),
                              c.at("iterations").get<long>(), c.at("p0_visits").get<long>(),
                              optional_from<long>(c.at("first_p1_hit")), state_from(c.at("final"))});
    }
    if (grid.cells.size() != static_cast<std::size_t>(s.nx * s.ny)) {
        throw Error("basin JSON has " + std::to_string(grid.cells.size()) + " cells, expected " +
                    std::to_string(s.nx * s.ny));
    }
    return grid;
}

std::string basin_svg(const BasinGrid& grid, const SvgOptions& options)
{
    const GridSpec& s = grid.spec;
    const double dx = s.nx > 1 ? (s.x_hi - s.x_lo) / static_cast<double>(s.nx - 1) : 1.0;
    const double dy = s.ny > 1 ? (s.y_hi - s.y_lo) / static_cast<double>(s.ny - 1) : 1.0;
    const ViewBox box{s.x_lo - dx / 2, s.y_lo - dy / 2, s.x_hi + dx / 2, s.y_hi + dy / 2};
    std::ostringstream out;
    out << svg_open(box, options.pixels);
    out << "<g class=\"cells\" shape-rendering=\"crispEdges\">\n";
    for (const auto& c : grid.cells) {
        out << "<rect x=\"" << svg_num(c.x0 - dx / 2) << "\" y=\"" << svg_num(c.y0 - dy / 2) << "\" width=\""
            << svg_num(dx) << "\" height=\"" << svg_num(dy) << "\" fill=\"" << outcome_colour(c.outcome)
            << "\"/>\n";
    }
    out << "</g>\n";
    if (options.guides) {
        out << svg_guides(box, s.alpha);
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string orbit_svg(const TrajectoryResult& result, double alpha, const SvgOptions& options)
{
    if (result.orbit.empty()) {
        throw Error("orbit SVG needs a recorded orbit");
    }
    ViewBox box{-0.1, -0.1, 1.1, 1.1};
    for (const auto& p : result.orbit) {
        box.x0 = std::min(box.x0, p.x - 0.1);
        box.y0 = std::min(box.y0, p.y - 0.1);
        box.x1 = std::max(box.x1, p.x + 0.1);
        box.y1 = std::max(box.y1, p.y + 0.1);
    }
    std::ostringstream out;
    out << svg_open(box, options.pixels);
    if (options.guides) {
        out << svg_guides(box, alpha);
    }
    out << R"(<polyline fill="none" stroke="#2b6cb0" stroke-width="1.5" vector-effect="non-scaling-stroke" points=")";
    for (std::size_t k = 0; k < result.orbit.size(); ++k) {
        out << (k ? " " : "") << svg_num(result.orbit[k].x) << ',' << svg_num(result.orbit[k].y);
    }
    out << "\"/>\n";
    const State2D& first = result.orbit.front();
    out << "<circle cx=\"" << svg_num(first.x) << "\" cy=\"" << svg_num(first.y) << "\" r=\""
        << svg_num(0.01 * (box.x1 - box.x0)) << R"(" fill="#e53e3e"/>)" << '\n';
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render(const BasinGrid& grid, Format format, const SvgOptions& options)
{
    switch (format) {
    case Format::Csv: {
        std::ostringstream out;
        write_basin_csv(out, grid);
        return out.str();
    }
    case Format::Json: return to_json(grid).dump(1) + "\n";
    case Format::Svg: return basin_svg(grid, options);
    }
    return {};
}

std::string render(const TrajectoryResult& result, Format format, double alpha, const SvgOptions& options)
{
    switch (format) {
    case Format::Csv: {
        std::ostringstream out;
        write_orbit_csv(out, result, alpha);
        return out.str();
    }
    case Format::Json: return to_json(result).dump(1) + "\n";
    case Format::Svg: return orbit_svg(result, alpha, options);
    }
    return {};
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path + " for writing: " + std::strerror(errno));
    }
    out << content;
    out.close();
    if (!out) {
        throw Error("write to " + path + " failed");
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path + ": " + std::strerror(errno));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace drsl
