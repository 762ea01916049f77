#include "stabflow/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace stabflow {

namespace {

std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

struct Frame {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    double width = 560, height = 560, pad = 30;

    void include(const std::vector<Complex>& vs)
    {
        for (const auto& v : vs) {
            min_x = std::min(min_x, v.real());
            max_x = std::max(max_x, v.real());
            min_y = std::min(min_y, v.imag());
            max_y = std::max(max_y, v.imag());
        }
    }
    double scale() const
    {
        const double sx = (width - 2 * pad) / std::max(1e-12, max_x - min_x);
        const double sy = (height - 2 * pad) / std::max(1e-12, max_y - min_y);
        return std::min(sx, sy);
    }
    double px(Complex v) const { return pad + (v.real() - min_x) * scale(); }
    double py(Complex v) const { return height - pad - (v.imag() - min_y) * scale(); }
    std::string pt(Complex v) const { return num(px(v)) + "," + num(py(v)); }
};

std::string polygon_path(const Frame& f, const std::vector<Complex>& vs)
{
    std::string d;
    for (size_t k = 0; k < vs.size(); ++k)
        d += (k == 0 ? "M" : "L") + f.pt(vs[k]);
    return d + "Z";
}

int direction_hue(Complex v)
{
    double a = std::arg(v);
    if (a < 0)
        a += 2 * std::numbers::pi;
    return static_cast<int>(a / (2 * std::numbers::pi) * 360.0) % 360;
}

// Diagonals V_{i-1} -> V_j carry the charges of the M_[i,j]; color by the
// direction of the charge.
void append_diagonals(std::string& svg, const Frame& f, const std::vector<Complex>& vs)
{
    const int n = static_cast<int>(vs.size()) - 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            const Complex a = vs[static_cast<size_t>(i) - 1];
            const Complex b = vs[static_cast<size_t>(j)];
            svg += "  <line x1=\"" + num(f.px(a)) + "\" y1=\"" + num(f.py(a)) +
                   "\" x2=\"" + num(f.px(b)) + "\" y2=\"" + num(f.py(b)) +
                   "\" stroke=\"hsl(" + std::to_string(direction_hue(b - a)) +
                   ",70%,45%)\" stroke-width=\"1\" opacity=\"0.8\"/>\n";
        }
    }
}

} // namespace

std::string render_flow_svg(const FlowTrace& trace)
{
    Frame f;
    for (const auto& r : trace.steps)
        f.include(r.vertices);

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
                      "viewBox=\"0 0 800 600\">\n"
                      "  <rect width=\"800\" height=\"600\" fill=\"white\"/>\n";

    // Snapshots fade in toward the terminal polygon.
    const size_t count = trace.steps.size();
    for (size_t k = 0; k < count; ++k) {
        const double w = count > 1 ? static_cast<double>(k) / (count - 1) : 1.0;
        svg += "  <path d=\"" + polygon_path(f, trace.steps[k].vertices) +
               "\" fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"" + num(0.4 + 1.6 * w) +
               "\" opacity=\"" + num(0.12 + 0.88 * w) + "\"/>\n";
    }
    if (!trace.steps.empty())
        append_diagonals(svg, f, trace.steps.back().vertices);

    // gldim-vs-step inset, top right.
    if (count >= 2) {
        const double x0 = 580, y0 = 40, w = 190, h = 120;
        double lo = trace.steps.front().gldim, hi = lo;
        for (const auto& r : trace.steps) {
            lo = std::min(lo, r.gldim);
            hi = std::max(hi, r.gldim);
        }
        const double span = std::max(1e-12, hi - lo);
        svg += "  <rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(w) +
               "\" height=\"" + num(h) + "\" fill=\"#f8f8f8\" stroke=\"#999\"/>\n  <polyline points=\"";
        for (size_t k = 0; k < count; ++k) {
            const double px = x0 + static_cast<double>(k) / (count - 1) * w;
            const double py = y0 + h - (trace.steps[k].gldim - lo) / span * h;
            svg += num(px) + "," + num(py) + " ";
        }
        svg += "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
        svg += "  <text x=\"" + num(x0) + "\" y=\"" + num(y0 - 8) +
               "\" font-size=\"11\" font-family=\"monospace\">gldim " + num(hi) + " &#8594; " +
               num(lo) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

std::string render_polygon_svg(const Polygon& polygon)
{
    Frame f;
    f.include(polygon.vertices);
    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
                      "viewBox=\"0 0 800 600\">\n"
                      "  <rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += "  <path d=\"" + polygon_path(f, polygon.vertices) +
           "\" fill=\"none\" stroke=\"#1f3a93\" stroke-width=\"2\"/>\n";
    append_diagonals(svg, f, polygon.vertices);
    svg += "</svg>\n";
    return svg;
}

} // namespace stabflow
