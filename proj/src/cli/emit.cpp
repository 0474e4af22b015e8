#include "cli/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace memgrid::cli {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string csv_row(std::span<const std::string> cells) {
    std::string row;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) row += ',';
        row += cells[k];
    }
    row += '\n';
    return row;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string svg_line_plot(std::span<const double> x, std::span<const double> y,
                          const std::string& title, const std::string& x_label,
                          const std::string& y_label) {
    const int width = 640, height = 480, margin = 56;
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("svg_line_plot: need >= 2 matching samples");
    }
    double x_lo = x[0], x_hi = x[0], y_lo = y[0], y_hi = y[0];
    for (std::size_t k = 0; k < x.size(); ++k) {
        x_lo = std::min(x_lo, x[k]);
        x_hi = std::max(x_hi, x[k]);
        y_lo = std::min(y_lo, y[k]);
        y_hi = std::max(y_hi, y[k]);
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) y_hi = y_lo + 1.0;

    auto px = [&](double v) {
        return margin + (v - x_lo) / (x_hi - x_lo) * (width - 2 * margin);
    };
    auto py = [&](double v) {
        return height - margin - (v - y_lo) / (y_hi - y_lo) * (height - 2 * margin);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << x_label << "</text>\n";
    svg << "<text x=\"16\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << height / 2 << ")\">" << y_label
        << "</text>\n";
    // axes
    svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
        << width - margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
        << "\" y2=\"" << height - margin << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // range labels
    svg << "<text x=\"" << margin << "\" y=\"" << height - margin + 16
        << "\" font-family=\"sans-serif\" font-size=\"10\">" << format_double(x_lo)
        << "</text>\n";
    svg << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 16
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_double(x_hi) << "</text>\n";
    svg << "<text x=\"" << margin - 4 << "\" y=\"" << height - margin
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_double(y_lo) << "</text>\n";
    svg << "<text x=\"" << margin - 4 << "\" y=\"" << margin + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << format_double(y_hi) << "</text>\n";

    svg << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.2\" points=\"";
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k) svg << ' ';
        svg << format_double(px(x[k])) << ',' << format_double(py(y[k]));
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

}  // namespace memgrid::cli
