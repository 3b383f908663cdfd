#pragma once

#include <string>
#include <vector>

// Deterministic text emission: floats at 15 significant digits, CSV rows,
// and a dependency-free SVG line plot.

namespace sysatlas {

std::string format_g15(double v);

std::string csv_join(const std::vector<std::string>& fields);

void write_text_file(const std::string& path, const std::string& content);

// Polyline plot with axes and min/max tick labels; the marked index gets a
// small circle.  Deterministic output for identical inputs.
std::string svg_line_plot(const std::vector<double>& xs, const std::vector<double>& ys,
                          std::size_t marked, const std::string& x_label,
                          const std::string& y_label);

} // namespace sysatlas
