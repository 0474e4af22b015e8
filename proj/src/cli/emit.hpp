#ifndef MEMGRID_CLI_EMIT_HPP
#define MEMGRID_CLI_EMIT_HPP

/// Deterministic text emission: locale-independent number formatting, CSV and
/// SVG writers. Repeated runs with the same inputs produce byte-identical
/// files ('\n' line endings, '.' decimal separator, 17 significant digits).

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace memgrid::cli {

/// Shortest-width general format with 17 significant digits via
/// std::to_chars; never depends on the global locale.
std::string format_double(double x);

/// Joins one CSV row; numbers must already be formatted.
std::string csv_row(std::span<const std::string> cells);

/// Writes content to path with '\n' endings, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

/// Minimal standalone SVG line plot of (x, y) samples.
std::string svg_line_plot(std::span<const double> x, std::span<const double> y,
                          const std::string& title, const std::string& x_label,
                          const std::string& y_label);

}  // namespace memgrid::cli

#endif  // MEMGRID_CLI_EMIT_HPP
