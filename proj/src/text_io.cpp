#include "sysatlas/text_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sysatlas {

std::string format_g15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string csv_join(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

namespace {
std::string num6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}
} // namespace

std::string svg_line_plot(const std::vector<double>& xs, const std::vector<double>& ys,
                          std::size_t marked, const std::string& x_label,
                          const std::string& y_label) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::runtime_error("plot needs matching xs/ys with at least 2 points");
    const double w = 800, h = 500, ml = 70, mr = 20, mt = 20, mb = 50;
    double xmin = *std::min_element(xs.begin(), xs.end());
    double xmax = *std::max_element(xs.begin(), xs.end());
    double ymin = *std::min_element(ys.begin(), ys.end());
    double ymax = *std::max_element(ys.begin(), ys.end());
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "viewBox=\"0 0 800 500\">\n";
    s += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    // axes
    s += "<line x1=\"" + num6(ml) + "\" y1=\"" + num6(h - mb) + "\" x2=\"" + num6(w - mr) +
         "\" y2=\"" + num6(h - mb) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + num6(ml) + "\" y1=\"" + num6(mt) + "\" x2=\"" + num6(ml) +
         "\" y2=\"" + num6(h - mb) + "\" stroke=\"black\"/>\n";
    // tick labels
    s += "<text x=\"" + num6(ml) + "\" y=\"" + num6(h - mb + 20) +
         "\" font-size=\"12\">" + num6(xmin) + "</text>\n";
    s += "<text x=\"" + num6(w - mr - 40) + "\" y=\"" + num6(h - mb + 20) +
         "\" font-size=\"12\">" + num6(xmax) + "</text>\n";
    s += "<text x=\"5\" y=\"" + num6(h - mb) + "\" font-size=\"12\">" + num6(ymin) +
         "</text>\n";
    s += "<text x=\"5\" y=\"" + num6(mt + 10) + "\" font-size=\"12\">" + num6(ymax) +
         "</text>\n";
    s += "<text x=\"" + num6(w / 2) + "\" y=\"" + num6(h - 10) + "\" font-size=\"13\">" +
         x_label + "</text>\n";
    s += "<text x=\"5\" y=\"14\" font-size=\"13\">" + y_label + "</text>\n";
    // polyline
    s += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += num6(px(xs[i])) + "," + num6(py(ys[i]));
    }
    s += "\"/>\n";
    if (marked < xs.size()) {
        s += "<circle cx=\"" + num6(px(xs[marked])) + "\" cy=\"" + num6(py(ys[marked])) +
             "\" r=\"4\" fill=\"crimson\"/>\n";
        s += "<text x=\"" + num6(std::min(px(xs[marked]) + 8, w - 160)) + "\" y=\"" +
             num6(std::max(py(ys[marked]) - 8, 14.0)) + "\" font-size=\"12\">sup K = " +
             num6(ys[marked]) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace sysatlas
