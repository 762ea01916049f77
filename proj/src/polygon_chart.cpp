#include "stabflow/polygon_chart.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace stabflow {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(Complex a, Complex b)
{
    return a.real() * b.imag() - a.imag() * b.real();
}

int orient(Complex a, Complex b, Complex c)
{
    const double v = cross(b - a, c - a);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(Complex a, Complex b, Complex p)
{
    return orient(a, b, p) == 0 &&
           std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(Complex a, Complex b, Complex c, Complex d)
{
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4)
        return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

} // namespace

Polygon make_polygon(std::vector<Complex> vertices)
{
    if (vertices.size() < 3)
        throw malformed_polygon_error("polygon needs at least three vertices");
    Polygon p{std::move(vertices)};
    if (std::abs(p.vertices[0]) > 1e-12 || std::abs(p.vertices[1] - Complex{1.0, 0.0}) > 1e-12)
        throw malformed_polygon_error("polygon must be normalized to V_0 = 0, V_1 = 1");
    const int m = static_cast<int>(p.vertices.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (std::abs(p.vertices[i] - p.vertices[j]) == 0.0)
                throw malformed_polygon_error("vertices " + std::to_string(i) + " and " +
                                              std::to_string(j) + " coincide");
    if (!is_simple(p))
        throw malformed_polygon_error("polygon is self-intersecting");
    if (signed_area(p) <= 0.0)
        throw malformed_polygon_error("vertices must be labeled anticlockwise");
    return p;
}

double signed_area(const Polygon& p)
{
    const int m = static_cast<int>(p.vertices.size());
    double twice = 0.0;
    for (int i = 0; i < m; ++i)
        twice += cross(p.vertices[i], p.vertices[(i + 1) % m]);
    return twice / 2.0;
}

bool is_simple(const Polygon& p)
{
    const int m = static_cast<int>(p.vertices.size());
    if (m < 3)
        return false;
    for (int i = 0; i < m; ++i)
        if (std::abs(p.vertices[(i + 1) % m] - p.vertices[i]) == 0.0)
            return false;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            if (adjacent)
                continue;
            if (segments_intersect(p.vertices[i], p.vertices[(i + 1) % m],
                                   p.vertices[j], p.vertices[(j + 1) % m]))
                return false;
        }
    }
    return true;
}

bool is_convex(const Polygon& p)
{
    if (!is_simple(p))
        throw malformed_polygon_error("polygon is not simple");
    const int m = static_cast<int>(p.vertices.size());
    for (int i = 0; i < m; ++i) {
        const Complex u = p.vertices[(i + 1) % m] - p.vertices[i];
        const Complex v = p.vertices[(i + 2) % m] - p.vertices[(i + 1) % m];
        if (cross(u, v) <= 0.0)
            return false;
    }
    return true;
}

Chart polygon_to_chart(const Polygon& p)
{
    if (!is_convex(p))
        throw chart_out_of_range_error("polygon is not convex");
    const int n = p.rank();
    std::vector<Complex> z;
    z.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const Complex edge = p.vertices[static_cast<size_t>(i)] - p.vertices[static_cast<size_t>(i) - 1];
        if (!in_upper_half_plane(edge))
            throw chart_out_of_range_error(
                "edge " + std::to_string(i) +
                " leaves the standard-heart chart (phase not in [0,1))");
        z.push_back(edge);
    }
    return Chart(std::move(z));
}

Polygon chart_to_polygon(const Chart& chart)
{
    if (std::abs(chart.charge_of_simple(1) - Complex{1.0, 0.0}) > 1e-12)
        throw unnormalized_chart_error("Z(S_1) must be normalized to 1");
    if (gldim(chart) >= 1.0)
        throw not_in_chart_error("chart has gldim >= 1; not totally stable");
    Polygon p;
    p.vertices.reserve(static_cast<size_t>(chart.rank()) + 1);
    Complex sum{0.0, 0.0};
    p.vertices.push_back(sum);
    for (int i = 1; i <= chart.rank(); ++i) {
        sum += chart.charge_of_simple(i);
        p.vertices.push_back(sum);
    }
    if (!is_convex(p))
        throw not_in_chart_error("chart is numerically on the boundary of the "
                                 "totally stable region");
    return p;
}

double bracket_angle(const Polygon& p, int i, int j)
{
    const int m = static_cast<int>(p.vertices.size());
    const Complex u = p.vertices[static_cast<size_t>(i)] - p.vertices[static_cast<size_t>(j)];
    const Complex w = p.vertices[static_cast<size_t>((j + 1) % m)] - p.vertices[static_cast<size_t>(i + 1)];
    if (std::abs(u) == 0.0 || std::abs(w) == 0.0)
        throw singular_configuration_error("coincident vertices in pair (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");
    double d = (std::arg(u) - std::arg(w)) / kPi;
    d = std::fmod(d, 2.0);
    if (d <= 0.0)
        d += 2.0;
    return d;
}

PolygonGldim gldim_polygon(const Polygon& p, double tie_tol)
{
    if (!is_convex(p))
        throw nonconvex_polygon_error("global dimension formula needs a convex polygon");
    const int n = p.rank();
    PolygonGldim out;
    out.value = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.value = std::max(out.value, bracket_angle(p, i, j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (bracket_angle(p, i, j) >= out.value - tie_tol)
                out.argmax.emplace_back(i, j);
    return out;
}

Polygon regular_polygon(int n)
{
    if (n < 2)
        throw invalid_rank_error("regular polygon needs rank >= 2");
    Polygon p;
    p.vertices.reserve(static_cast<size_t>(n) + 1);
    Complex sum{0.0, 0.0};
    p.vertices.push_back(sum);
    for (int k = 0; k < n; ++k) {
        sum += std::polar(1.0, 2.0 * kPi * k / (n + 1));
        p.vertices.push_back(sum);
    }
    return p;
}

} // namespace stabflow
