#pragma once

// Result tables and their CSV, metadata and SVG renderings.

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace vdwcalc {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// One entry per row (may be empty objects).
  std::vector<nlohmann::json> row_diagnostics;
  std::vector<std::string> warnings;
  /// Columns drawn against column 0 in the SVG.
  std::vector<std::size_t> plot_columns;
  std::string title;
};

/// Header plus rows; doubles with 6 significant digits.
std::string format_csv(const Table& table);

/// Full-precision rows, the scenario and engine version.
nlohmann::json metadata(const Table& table, const nlohmann::json& scenario);

/// A static line chart of plot_columns against column 0. Log x axis when the
/// first column spans more than two decades.
std::string render_svg(const Table& table);

/// Throws InputError when the file cannot be written.
void write_file(const std::filesystem::path& path, const std::string& content);

/// `<path>.meta.json` next to the CSV.
std::filesystem::path metadata_path(const std::filesystem::path& csv);
std::filesystem::path svg_path(const std::filesystem::path& csv);

}  // namespace vdwcalc
