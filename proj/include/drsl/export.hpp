#pragma once

/**
 * @file export.hpp
 * @brief CSV, JSON and SVG output for trajectories and basin grids.
 *
 * JSON uses the field names of TrajectoryResult / BasinGrid and reads back to
 * an equal value. Doubles are written with round-trip precision.
 */

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "drsl/basin.hpp"

namespace drsl {

enum class Format { Csv, Json, Svg };

std::optional<Format> format_from_string(std::string_view name);

void write_basin_csv(std::ostream& out, const BasinGrid& grid);
/// Columns n, x, y, rho, region, dist_sq. Needs a recorded orbit.
void write_orbit_csv(std::ostream& out, const TrajectoryResult& result, double alpha = kAlpha);

nlohmann::json to_json(const TrajectoryResult& result);
TrajectoryResult trajectory_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BasinGrid& grid);
BasinGrid basin_from_json(const nlohmann::json& j);

struct SvgOptions {
    bool guides = true; ///< unit circle, the line y = x and the line y = alpha
    int pixels = 600;
};

std::string basin_svg(const BasinGrid& grid, const SvgOptions& options = {});
std::string orbit_svg(const TrajectoryResult& result, double alpha = kAlpha, const SvgOptions& options = {});

/// Renders in the chosen format.
std::string render(const BasinGrid& grid, Format format, const SvgOptions& options = {});
std::string render(const TrajectoryResult& result, Format format, double alpha = kAlpha,
                   const SvgOptions& options = {});

/// Writes text to path; throws drsl::Error naming the path on failure.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace drsl
